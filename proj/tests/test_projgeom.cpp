#include "doctest.h"

#include "p1enum/polyfactor.hpp"
#include "p1enum/projgeom.hpp"
#include "p1enum/unipoly.hpp"

#include <set>

using namespace p1enum;

namespace {

HomPoly hp_from_ints(const TowerView& V, const std::vector<u32>& coeffs) {
    HomPoly f = hp_zero(V, u32(coeffs.size()) - 1);
    for (size_t i = 0; i < coeffs.size(); ++i) f.c[i] = V.scalar(coeffs[i]);
    return f;
}

Mat2 mat_from_ints(const TowerView& V, u32 a, u32 b, u32 c, u32 d) {
    return Mat2{V.scalar(a), V.scalar(b), V.scalar(c), V.scalar(d)};
}

HomPoly random_monic(const TowerView& V, u32 n, SplitMix64& rng) {
    HomPoly f = hp_zero(V, n);
    u32 top = u32(rng.next() % (n + 1));
    f.c[top] = V.one();
    for (u32 i = 0; i < top; ++i) f.c[i] = V.base_from_index(rng.next() % V.q());
    return f;
}

std::vector<Mat2> all_group_elements(const TowerView& V) {
    std::vector<Mat2> out;
    u64 q = V.q();
    for (u64 b = 0; b < q; ++b)
        for (u64 c = 0; c < q; ++c)
            for (u64 d = 0; d < q; ++d) {
                Mat2 M{V.one(), V.base_from_index(b), V.base_from_index(c), V.base_from_index(d)};
                if (!V.is_zero(mat_det(V.core(), M))) out.push_back(M);
            }
    for (u64 c = 1; c < q; ++c)
        for (u64 d = 0; d < q; ++d)
            out.push_back(Mat2{V.zero(), V.one(), V.base_from_index(c), V.base_from_index(d)});
    return out;
}

}  // namespace

TEST_CASE("act_on_poly basics") {
    Tower T = build_tower(5, 1, 4);
    const TowerView& V = *T.view;

    HomPoly f = hp_from_ints(V, {3, 0, 1});  // x^2 + 3y^2
    SUBCASE("identity monicizes") {
        Mat2 id = mat_identity(V.core(), 1);
        CHECK(hp_eq(V, act_on_poly(V, id, f), f));
        HomPoly g = hp_scale(V, f, V.scalar(2));
        CHECK(hp_eq(V, act_on_poly(V, id, g), f));
    }
    SUBCASE("swap x and y") {
        Mat2 w = mat_from_ints(V, 0, 1, 1, 0);
        HomPoly r = act_on_poly(V, w, f);  // f(-y, x) = y^2 + 3x^2, monic: x^2 + 2y^2
        CHECK(hp_eq(V, r, hp_from_ints(V, {2, 0, 1})));
    }
    SUBCASE("composition on random triples") {
        SplitMix64 rng(42);
        auto G = all_group_elements(V);
        for (int it = 0; it < 100; ++it) {
            Mat2 A = G[rng.next() % G.size()];
            Mat2 B = G[rng.next() % G.size()];
            HomPoly h = random_monic(V, 3, rng);
            HomPoly lhs = act_on_poly(V, mat_mul(V.core(), A, B), h);
            HomPoly rhs = act_on_poly(V, A, act_on_poly(V, B, h));
            CHECK(hp_eq(V, lhs, rhs));
        }
    }
}

TEST_CASE("act_on_point") {
    Tower T = build_tower(3, 1, 2);
    const TowerView& V = *T.view;
    ProjPoint zero{false, V.zero()};
    Mat2 tr = mat_from_ints(V, 1, 1, 0, 1);
    ProjPoint r = act_on_point(V.core(), tr, zero);
    CHECK(!r.inf);
    CHECK(r.alpha == V.one());
    Mat2 id = mat_identity(V.core(), 1);
    ProjPoint inf{true, V.zero()};
    CHECK(act_on_point(V.core(), id, inf).inf);
}

TEST_CASE("divisor of poly and back") {
    Tower T = build_tower(3, 1, 6);
    const TowerView& V = *T.view;

    SUBCASE("y^3 is 3 * P_inf") {
        HomPoly f = hp_zero(V, 3);
        f.c[0] = V.one();
        Divisor D = divisor_of_poly(V, f);
        REQUIRE(D.parts.size() == 1);
        CHECK(D.parts[0].first.deg == 1);
        CHECK(D.parts[0].first.root.inf);
        CHECK(D.parts[0].second == 3);
    }
    SUBCASE("xy") {
        HomPoly f = hp_zero(V, 2);
        f.c[1] = V.one();
        Divisor D = divisor_of_poly(V, f);
        REQUIRE(D.parts.size() == 2);
        CHECK(D.degree() == 2);
        CHECK(D.parts[0].first.root.inf);  // infinity sorts first
        CHECK(!D.parts[1].first.root.inf);
    }
    SUBCASE("x^2 + 1 over F_3 is one degree-2 place") {
        HomPoly f = hp_from_ints(V, {1, 0, 1});
        Divisor D = divisor_of_poly(V, f);
        REQUIRE(D.parts.size() == 1);
        const Place& P = D.parts[0].first;
        CHECK(P.deg == 2);
        auto pts = place_points(V, P);
        REQUIRE(pts.size() == 2);
        CHECK(pts[1].alpha == V.core().neg(pts[0].alpha));
    }
    SUBCASE("poly_of_divisor round trip on random divisors") {
        SplitMix64 rng(9);
        for (int it = 0; it < 100; ++it) {
            u32 n = 1 + u32(rng.next() % 6);
            HomPoly f = random_monic(V, n, rng);
            Divisor D = divisor_of_poly(V, f);
            CHECK(hp_eq(V, poly_of_divisor(V, D), hp_monicize(V, f)));
            Divisor D2 = divisor_of_poly(V, poly_of_divisor(V, D));
            CHECK(divisor_eq(V, D, D2));
        }
    }
    SUBCASE("known representatives") {
        Divisor Dinf;
        Dinf.parts.emplace_back(place_from_point(V, ProjPoint{true, V.zero()}), 1);
        CHECK(hp_eq(V, poly_of_divisor(V, Dinf), hp_y(V)));
        Divisor D2 = Dinf;
        D2.parts.emplace_back(place_from_point(V, ProjPoint{false, V.zero()}), 1);
        HomPoly xy = hp_zero(V, 2);
        xy.c[1] = V.one();
        CHECK(hp_eq(V, poly_of_divisor(V, D2), xy));
    }
}

TEST_CASE("equivariance Div(Gamma f) = Gamma(Div f)") {
    for (u32 q : {2u, 3u}) {
        Tower T = build_tower(q, 1, 4);
        const TowerView& V = *T.view;
        auto G = all_group_elements(V);
        CHECK(G.size() == size_t(q) * q * q - q);
        SplitMix64 rng(5);
        for (u32 n = 1; n <= 4; ++n) {
            // all monic degree-n forms: f = y^(n-k) * (x^k + lower)
            for (u32 k = 0; k <= n; ++k) {
                u64 count = 1;
                for (u32 i = 0; i < k; ++i) count *= q;
                for (u64 code = 0; code < count; ++code) {
                    HomPoly f = hp_zero(V, n);
                    f.c[k] = V.one();
                    u64 v = code;
                    for (u32 i = 0; i < k; ++i) {
                        f.c[i] = V.base_from_index(v % q);
                        v /= q;
                    }
                    for (size_t gi = 0; gi < G.size(); ++gi) {
                        if (q == 3 && (rng.next() % 17) != 0) continue;  // sample at q=3
                        Divisor lhs = divisor_of_poly(V, act_on_poly(V, G[gi], f));
                        Divisor rhs = act_on_divisor(V, G[gi], divisor_of_poly(V, f));
                        CHECK(divisor_eq(V, lhs, rhs));
                    }
                }
            }
        }
    }
}

TEST_CASE("galois type and support") {
    Tower T = build_tower(3, 1, 4);
    const TowerView& V = *T.view;
    Divisor D;
    HomPoly q2 = hp_from_ints(V, {1, 0, 1});
    D.parts.emplace_back(place_from_poly(V, q2), 2);
    D.parts.emplace_back(place_from_point(V, ProjPoint{false, V.one()}), 1);
    auto [ty, supp] = galois_type_and_support(V, D);
    CHECK(ty.m == std::vector<u32>{2, 1});
    CHECK(supp.reduced());
    auto [ty2, supp2] = galois_type_and_support(V, supp);
    CHECK(divisor_eq(V, supp2, supp));
    CHECK(ty2.m == ty.m);
}

TEST_CASE("poly keys") {
    Tower T = build_tower(2, 1, 3);
    const TowerView& V = *T.view;
    HomPoly y = hp_y(V);
    HomPoly xpy = hp_from_ints(V, {1, 1});
    CHECK(poly_cmp(V, y, xpy) < 0);
    std::set<std::vector<u32>> keys;
    SplitMix64 rng(1);
    std::vector<HomPoly> polys;
    int n_distinct = 0;
    for (int it = 0; it < 200; ++it) {
        HomPoly f = random_monic(V, 3, rng);
        bool fresh = true;
        for (auto& g : polys)
            if (hp_eq(V, g, f)) fresh = false;
        keys.insert(poly_key(V, f));
        if (fresh) {
            polys.push_back(f);
            ++n_distinct;
        }
    }
    CHECK(n_distinct == int(keys.size()));
    std::sort(polys.begin(), polys.end(),
              [&](const HomPoly& a, const HomPoly& b) { return poly_cmp(V, a, b) < 0; });
    for (size_t i = 0; i + 1 < polys.size(); ++i)
        CHECK(poly_cmp(V, polys[i], polys[i + 1]) < 0);
}

TEST_CASE("place points are frobenius-closed with full orbit") {
    Tower T = build_tower(2, 1, 5);
    const TowerView& V = *T.view;
    HomPoly f = hp_from_ints(V, {1, 0, 1, 0, 0, 1});  // x^5 + x^2 y^3 + y^5
    REQUIRE(is_irreducible(V, f));
    Place P = place_from_poly(V, f);
    auto pts = place_points(V, P);
    CHECK(pts.size() == 5);
    std::set<std::vector<u32>> distinct;
    for (auto& pt : pts) distinct.insert(pt.alpha.c);
    CHECK(distinct.size() == 5);
    FieldElem back = V.frobenius(pts.back().alpha, 1);
    CHECK(back == pts[0].alpha);
}
