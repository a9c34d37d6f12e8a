#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace cce {

// Exact rational scalar. Always normalized: gcd(num, den) = 1, den > 0.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Parses "p" or "p/q" with decimal integers. Rejects q = 0 and junk.
inline Rat rat_parse(const std::string& s) {
    auto bad = [&]() { throw parse_error("bad rational literal: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) bad();
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rat();  // unreachable
}

inline std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace cce
