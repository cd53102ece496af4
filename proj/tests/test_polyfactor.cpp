#include "doctest.h"

#include "p1enum/polyfactor.hpp"
#include "p1enum/unipoly.hpp"

using namespace p1enum;

namespace {

HomPoly hp_from_ints(const TowerView& V, const std::vector<u32>& coeffs) {
    HomPoly f = hp_zero(V, u32(coeffs.size()) - 1);
    for (size_t i = 0; i < coeffs.size(); ++i) f.c[i] = V.scalar(coeffs[i]);
    return f;
}

HomPoly random_poly(const TowerView& V, u32 n, SplitMix64& rng) {
    for (;;) {
        HomPoly f = hp_zero(V, n);
        for (u32 i = 0; i <= n; ++i) f.c[i] = V.base_from_index(rng.next() % V.q());
        if (!hp_is_zero(V, f)) return f;
    }
}

HomPoly assemble(const TowerView& V, const FactorList& fl) {
    HomPoly prod;
    prod.c = {fl.unit};
    for (u32 i = 0; i < fl.y_mult; ++i) prod = hp_mul(V, prod, hp_y(V));
    for (auto& [g, m] : fl.factors)
        for (u32 t = 0; t < m; ++t) prod = hp_mul(V, prod, g);
    return prod;
}

}  // namespace

TEST_CASE("monomial factorizations") {
    Tower T = build_tower(3, 1, 4);
    const TowerView& V = *T.view;
    // y^3 x
    HomPoly f = hp_zero(V, 4);
    f.c[1] = V.one();
    FactorList fl = irreducible_factors(V, f, 7);
    CHECK(fl.y_mult == 3);
    REQUIRE(fl.factors.size() == 1);
    CHECK(fl.factors[0].second == 1);
    CHECK(hp_eq(V, fl.factors[0].first, hp_x(V)));
}

TEST_CASE("difference of squares over F_5") {
    Tower T = build_tower(5, 1, 2);
    const TowerView& V = *T.view;
    HomPoly f = hp_from_ints(V, {4, 0, 1});  // x^2 - y^2
    FactorList fl = irreducible_factors(V, f, 1);
    CHECK(fl.y_mult == 0);
    REQUIRE(fl.factors.size() == 2);
    CHECK(hp_eq(V, fl.factors[0].first, hp_from_ints(V, {1, 1})));
    CHECK(hp_eq(V, fl.factors[1].first, hp_from_ints(V, {4, 1})));
}

TEST_CASE("multiply back on random inputs") {
    for (auto [p, e] : {std::pair<u32, u32>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        Tower T = build_tower(p, e, 2);
        const TowerView& V = *T.view;
        SplitMix64 rng(p * 31 + e);
        for (int it = 0; it < 125; ++it) {
            u32 n = 1 + u32(rng.next() % 12);
            HomPoly f = random_poly(V, n, rng);
            FactorList fl = irreducible_factors(V, f, rng.next());
            CHECK(hp_eq(V, assemble(V, fl), f));
            for (auto& [g, m] : fl.factors) {
                (void)m;
                CHECK(is_irreducible(V, g));
            }
        }
    }
}

TEST_CASE("p-th power path") {
    Tower T = build_tower(3, 1, 2);
    const TowerView& V = *T.view;
    HomPoly xy = hp_from_ints(V, {1, 1});  // (x + y)^3
    HomPoly f = hp_mul(V, hp_mul(V, xy, xy), xy);
    FactorList fl = irreducible_factors(V, f, 3);
    REQUIRE(fl.factors.size() == 1);
    CHECK(fl.factors[0].second == 3);
    CHECK(hp_eq(V, fl.factors[0].first, xy));
}

TEST_CASE("factors_of_degree") {
    Tower T = build_tower(2, 1, 4);
    const TowerView& V = *T.view;
    SUBCASE("irreducible quadratic has no linear factors") {
        HomPoly f = hp_from_ints(V, {1, 1, 1});  // x^2 + xy + y^2
        CHECK(factors_of_degree(V, f, 1, 5).empty());
        auto two = factors_of_degree(V, f, 2, 5);
        REQUIRE(two.size() == 1);
        CHECK(hp_eq(V, two[0], f));
    }
    SUBCASE("n larger than degree") {
        HomPoly f = hp_from_ints(V, {1, 1});
        CHECK(factors_of_degree(V, f, 3, 5).empty());
    }
    SUBCASE("agreement with full factorization") {
        SplitMix64 rng(77);
        for (int it = 0; it < 200; ++it) {
            u32 n = 2 + u32(rng.next() % 9);
            HomPoly f = random_poly(V, n, rng);
            FactorList fl = irreducible_factors(V, f, 11);
            for (u32 d = 1; d <= n; ++d) {
                std::vector<HomPoly> expect;
                if (d == 1 && fl.y_mult > 0) expect.push_back(hp_y(V));
                for (auto& [g, m] : fl.factors) {
                    (void)m;
                    if (g.degree() == d) expect.push_back(g);
                }
                std::sort(expect.begin(), expect.end(), [&](const HomPoly& a, const HomPoly& b) {
                    return poly_cmp(V, a, b) < 0;
                });
                auto got = factors_of_degree(V, f, d, rng.next());
                REQUIRE(got.size() == expect.size());
                for (size_t i = 0; i < got.size(); ++i) CHECK(hp_eq(V, got[i], expect[i]));
            }
        }
    }
}

TEST_CASE("seed independence") {
    Tower T = build_tower(3, 1, 2);
    const TowerView& V = *T.view;
    SplitMix64 rng(123);
    for (int it = 0; it < 100; ++it) {
        u32 n = 2 + u32(rng.next() % 8);
        HomPoly f = random_poly(V, n, rng);
        FactorList a = irreducible_factors(V, f, 1);
        FactorList b = irreducible_factors(V, f, 2);
        REQUIRE(a.factors.size() == b.factors.size());
        for (size_t i = 0; i < a.factors.size(); ++i) {
            CHECK(a.factors[i].second == b.factors[i].second);
            CHECK(hp_eq(V, a.factors[i].first, b.factors[i].first));
        }
        auto fa = factors_of_degree(V, f, 2, 1);
        auto fb = factors_of_degree(V, f, 2, 999);
        REQUIRE(fa.size() == fb.size());
        for (size_t i = 0; i < fa.size(); ++i) CHECK(hp_eq(V, fa[i], fb[i]));
    }
}

TEST_CASE("is_irreducible and roots_in_level") {
    Tower T = build_tower(2, 1, 6);
    const TowerView& V = *T.view;
    CHECK(is_irreducible(V, hp_y(V)));
    HomPoly sq = hp_from_ints(V, {1, 0, 1});  // (x+y)^2 over F_2
    CHECK(!is_irreducible(V, sq));

    SplitMix64 rng(4);
    for (int it = 0; it < 60; ++it) {
        u32 n = 2 + u32(rng.next() % 5);
        HomPoly f = random_poly(V, n, rng);
        FactorList fl = irreducible_factors(V, f, 5);
        for (u32 d = 1; d <= 6; ++d) {
            size_t expect = 0;
            for (auto& [g, m] : fl.factors) {
                (void)m;
                if (d % g.degree() == 0) expect += g.degree();
            }
            auto rs = roots_in_level(V, f, d, 17);
            CHECK(rs.size() == expect);
            for (auto& r : rs) {
                FieldElem acc = V.core().zero(V.core_deg(d));
                for (size_t i = f.c.size(); i-- > 0;) {
                    acc = V.core().mul(acc, r);
                    acc = V.core().add(acc, V.core().embed(f.c[i], V.core_deg(d)));
                }
                CHECK(V.core().is_zero(acc));
            }
        }
    }
}

TEST_CASE("factor errors") {
    Tower T = build_tower(2, 1, 2);
    const TowerView& V = *T.view;
    HomPoly z = hp_zero(V, 3);
    CHECK_THROWS(irreducible_factors(V, z, 1));
    CHECK_THROWS(factors_of_degree(V, z, 1, 1));
}
