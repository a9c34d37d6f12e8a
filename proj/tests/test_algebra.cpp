#include "cce/catalog.hpp"
#include "cce/io.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace cce;

TEST_CASE("catalog algebras validate") {
    for (const char* name : {"sl2", "sl3", "sl4", "gl2", "heis3", "ab1", "ab2", "tp2", "tp3",
                             "circ2", "circ3", "K"}) {
        AlgebraSpec a = catalog_algebra(name);
        CAPTURE(name);
        CHECK(validate(a).empty());
    }
    CHECK(catalog_algebra("tp(2)").dim == 2);
    CHECK(catalog_algebra("ab(3)").dim == 3);
    CHECK_THROWS_AS(catalog_algebra("nope"), unknown_name);
}

TEST_CASE("sl2 uses the standard basis") {
    AlgebraSpec g = catalog_algebra("sl2");
    // basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
    CHECK(g.mul(1, 0) == SparseVec{{0, Rat(2)}});
    CHECK(g.mul(1, 2) == SparseVec{{2, Rat(-2)}});
    CHECK(g.mul(0, 2) == SparseVec{{1, Rat(1)}});
}

TEST_CASE("catalog stand-ins") {
    AlgebraSpec t2 = catalog_algebra("tp2");
    CHECK(t2.mul(1, 1).empty());  // t^2 = 0
    CHECK(t2.unit_index == 0);
    AlgebraSpec c2 = catalog_algebra("circ2");
    CHECK(c2.mul(1, 1) == SparseVec{{0, Rat(1)}});  // t^2 = 1
    AlgebraSpec h = catalog_algebra("heis3");
    CHECK(h.mul(0, 1) == SparseVec{{2, Rat(1)}});
    CHECK(h.mul(2, 0).empty());
}

TEST_CASE("validate reports violations with indices") {
    AlgebraSpec bad = catalog_algebra("sl2");
    bad.set_product(0, 1, SparseVec{{0, Rat(2)}});  // breaks antisymmetry at (0,1)
    auto v = validate(bad);
    REQUIRE_FALSE(v.empty());
    bool found = false;
    for (const auto& viol : v)
        if (viol.identity == "antisymmetry" && viol.indices == std::vector<int>{0, 1}) found = true;
    CHECK(found);

    AlgebraSpec nonassoc = catalog_algebra("tp3");
    nonassoc.set_product(1, 1, SparseVec{{0, Rat(1)}});  // t*t = 1 breaks associativity
    auto va = validate(nonassoc);
    bool assoc_hit = false;
    for (const auto& viol : va) assoc_hit = assoc_hit || viol.identity == "associativity";
    CHECK(assoc_hit);
}

TEST_CASE("module validation") {
    AlgebraSpec g = catalog_algebra("sl2");
    ModuleActionSpec ad = catalog_module("adjoint", g);
    CHECK(validate(ad).empty());
    ModuleActionSpec bad = ad;
    bad.set_action(0, 1, SparseVec{{0, Rat(1)}});
    CHECK_FALSE(validate(bad).empty());
    AlgebraSpec a = catalog_algebra("tp2");
    CHECK(validate(catalog_module("regular", a)).empty());
    CHECK_THROWS_AS(catalog_module("regular", g), unknown_name);
    CHECK_THROWS_AS(catalog_module("adjoint", a), unknown_name);
}

TEST_CASE("current algebra construction") {
    AlgebraSpec L = catalog_algebra("sl2");
    AlgebraSpec K = catalog_algebra("K");
    AlgebraSpec curK = current_lie_algebra(L, K);
    CHECK(curK.dim == 3);
    CHECK(curK.product == L.product);  // A = K: structure constants unchanged

    AlgebraSpec ab1 = catalog_algebra("ab1");
    AlgebraSpec t2 = catalog_algebra("tp2");
    AlgebraSpec cur = current_lie_algebra(ab1, t2);
    CHECK(cur.dim == 2);
    CHECK(cur.product.empty());

    AlgebraSpec c = current_lie_algebra(L, t2);
    CHECK(c.dim == 6);
    CHECK(validate(c).empty());
    // [e(x)t, f(x)t] = h (x) t^2 = 0
    CHECK(c.mul(tensor_index(0, 1, 2), tensor_index(2, 1, 2)).empty());
    // [e(x)1, f(x)t] = h (x) t
    CHECK(c.mul(tensor_index(0, 0, 2), tensor_index(2, 1, 2)) ==
          SparseVec{{tensor_index(1, 1, 2), Rat(1)}});
}

TEST_CASE("current algebra validates on catalog pairs") {
    for (const char* l : {"sl2", "heis3", "ab2", "gl2"})
        for (const char* a : {"tp2", "tp3", "circ2"}) {
            AlgebraSpec cur = current_lie_algebra(catalog_algebra(l), catalog_algebra(a));
            CAPTURE(l, a);
            CHECK(validate(cur).empty());
            CHECK(cur.dim == catalog_algebra(l).dim * catalog_algebra(a).dim);
        }
}

TEST_CASE("derived subalgebra of L (x) circ2 doubles") {
    for (const char* l : {"sl2", "heis3"}) {
        AlgebraSpec L = catalog_algebra(l);
        AlgebraSpec cur = current_lie_algebra(L, catalog_algebra("circ2"));
        auto span_of_brackets = [](const AlgebraSpec& g) {
            std::vector<SparseVec> vecs;
            for (const auto& [ij, v] : g.product) vecs.push_back(v);
            return LinearSubspace::from_vectors(g.dim, vecs);
        };
        CHECK(span_of_brackets(cur).dim() == 2 * span_of_brackets(L).dim());
    }
}

TEST_CASE("tensor module") {
    AlgebraSpec L = catalog_algebra("sl2");
    ModuleActionSpec M = catalog_module("adjoint", L);
    AlgebraSpec A = catalog_algebra("tp2");
    ModuleActionSpec V = catalog_module("regular", A);
    ModuleActionSpec MV = tensor_module(M, V);
    CHECK(MV.dim == 6);
    CHECK(validate(MV).empty());
    // adjoint (x) regular of the current algebra is the adjoint of the current algebra
    AlgebraSpec cur = current_lie_algebra(L, A);
    ModuleActionSpec adc = cat::adjoint(cur);
    CHECK(MV.action == adc.action);

    ModuleActionSpec triv = catalog_module("trivial(1)", L);
    ModuleActionSpec tv = tensor_module(triv, V);
    CHECK(tv.dim == 2);
    CHECK(tv.action.empty());
}

TEST_CASE("algebra file round-trip") {
    AlgebraSpec g = catalog_algebra("sl3");
    Json j = algebra_to_json(g);
    AlgebraSpec back = algebra_from_json(j);
    CHECK(back.dim == g.dim);
    CHECK(back.product == g.product);
    CHECK(back.kind == g.kind);

    ModuleActionSpec m = catalog_module("adjoint", g);
    ModuleActionSpec mback = module_from_json(module_to_json(m));
    CHECK(mback.dim == m.dim);
    CHECK(mback.action == m.action);
    CHECK(mback.algebra.product == g.product);
}

TEST_CASE("file parse errors cite the offending field") {
    Json j;
    j["kind"] = "lie";
    CHECK_THROWS_WITH(algebra_from_json(j, "f.alg"), Catch::Matchers::ContainsSubstring("dim"));
    j["dim"] = 2;
    j["product"] = Json::array({Json::array({0, 5, 0, "1"})});
    CHECK_THROWS_WITH(algebra_from_json(j, "f.alg"),
                      Catch::Matchers::ContainsSubstring("out of range"));
    j["product"] = Json::array({Json::array({0, 1, 0, "1/x"})});
    CHECK_THROWS_AS(algebra_from_json(j, "f.alg"), parse_error);
    Json a;
    a["kind"] = "assoc-comm-unital";
    a["dim"] = 1;
    CHECK_THROWS_WITH(algebra_from_json(a, "g.alg"),
                      Catch::Matchers::ContainsSubstring("unit_index"));
}
