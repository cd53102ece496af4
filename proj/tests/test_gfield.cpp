#include "doctest.h"

#include "p1enum/gfield.hpp"
#include "p1enum/unipoly.hpp"

using namespace p1enum;

TEST_CASE("tower over F_2 up to degree 5") {
    Tower T = build_tower(2, 1, 5);
    const TowerView& V = *T.view;
    CHECK(V.q() == 2);
    for (u32 i = 1; i <= 5; ++i) {
        CHECK(T.core->has_level(i));
        // a_1 = 1 at every level: the first tensor basis vector is 1
        FieldElem one = T.core->one(i);
        auto t = V.tensor_coords(one);
        CHECK(t[0] == 1);
        for (size_t j = 1; j < t.size(); ++j) CHECK(t[j] == 0);
    }
}

TEST_CASE("prime field alone") {
    Tower T = build_tower(5, 1, 1);
    CHECK(T.core->level_degrees() == std::vector<u32>{1});
    CHECK(T.view->q() == 5);
}

TEST_CASE("F_4 multiplication via modulus t^2 = t + 1") {
    Tower T = build_tower(2, 1, 2);
    auto& C = *T.core;
    FieldElem t = C.gen_root(2);
    FieldElem one = C.one(2);
    FieldElem a = C.add(one, t);          // 1 + t
    FieldElem sq = C.mul(a, a);           // (1+t)^2 = 1 + t^2 = t
    CHECK(sq == t);
}

TEST_CASE("embeddings compose along F_q -> F_q2 -> F_q4") {
    Tower T = build_tower(2, 1, 4);
    auto& C = *T.core;
    FieldElem g = T.view->generator(2);  // generator of F_4 at level 2
    FieldElem via = C.embed(C.embed(g, 2), 4);
    FieldElem direct = C.embed(g, 4);
    CHECK(via == direct);

    // embedding of 1 is 1, identity embedding is identity
    CHECK(C.embed(C.one(2), 4) == C.one(4));
    CHECK(C.embed(g, 2) == g);
}

TEST_CASE("embedding is a ring homomorphism (sampled)") {
    Tower T = build_tower(3, 1, 6);
    auto& C = *T.core;
    SplitMix64 rng(7);
    LevelOps K{&C, 3, 3, 3, 27};
    for (int it = 0; it < 50; ++it) {
        FieldElem a = K.random(rng), b = K.random(rng);
        CHECK(C.embed(C.mul(a, b), 6) == C.mul(C.embed(a, 6), C.embed(b, 6)));
        CHECK(C.embed(C.add(a, b), 6) == C.add(C.embed(a, 6), C.embed(b, 6)));
    }
}

TEST_CASE("frobenius fixed field and orbit") {
    Tower T = build_tower(3, 1, 4);
    auto& C = *T.core;
    const TowerView& V = *T.view;
    // x in F_q (embedded in level 4) is fixed
    FieldElem two = C.scalar(4, 2);
    CHECK(V.frobenius(two, 1) == two);
    // x^(q^d) = x for all x at level d (exhaustive at q^2 = 9)
    for (u32 v = 0; v < 9; ++v) {
        FieldElem x(std::vector<u32>{v % 3, v / 3});
        CHECK(V.frobenius(x, 2) == x);
    }
    // generator of F_9: frobenius = cube
    FieldElem a = V.generator(2);
    CHECK(V.frobenius(a, 1) == C.mul(a, C.mul(a, a)));
    // frobenius is an automorphism fixing exactly the base field image
    u32 fixed = 0;
    for (u32 v = 0; v < 9; ++v) {
        FieldElem x(std::vector<u32>{v % 3, v / 3});
        if (V.frobenius(x, 1) == x) ++fixed;
    }
    CHECK(fixed == 3);
}

TEST_CASE("norm, trace, char poly") {
    Tower T = build_tower(3, 1, 4);
    const TowerView& V = *T.view;
    auto& C = *T.core;

    // level-1 element: single conjugate
    FieldElem two = C.scalar(1, 2);
    CHECK(V.norm_to_base(two) == two);
    CHECK(V.trace_to_base(two) == two);
    auto cp1 = V.char_poly(two);
    REQUIRE(cp1.size() == 2);
    CHECK(cp1[1] == C.one(1));
    CHECK(cp1[0] == C.neg(two));

    // char poly of alpha vanishes at alpha; min poly degree = orbit length
    FieldElem a = V.generator(4);
    auto cp = V.char_poly(a);
    REQUIRE(cp.size() == 5);
    FieldElem acc = C.zero(4);
    for (size_t i = cp.size(); i-- > 0;)
        acc = C.add(C.mul(acc, a), C.embed(cp[i], 4));
    CHECK(C.is_zero(acc));
    CHECK(V.degree_over_base(a) == 4);
    CHECK(V.min_poly(a) == cp);

    // multiplicativity / additivity on random pairs
    SplitMix64 rng(3);
    LevelOps K{&C, 4, 3, 4, 81};
    for (int it = 0; it < 40; ++it) {
        FieldElem x = K.random(rng), y = K.random(rng);
        if (C.is_zero(x) || C.is_zero(y)) continue;
        CHECK(V.norm_to_base(C.mul(x, y)) == C.mul(V.norm_to_base(x), V.norm_to_base(y)));
        CHECK(V.trace_to_base(C.add(x, y)) == C.add(V.trace_to_base(x), V.trace_to_base(y)));
    }
}

TEST_CASE("element order and canonical generators") {
    Tower T = build_tower(7, 1, 6);
    const TowerView& V = *T.view;
    auto& C = *T.core;

    CHECK(V.element_of_order(1, 1) == C.one(1));
    FieldElem z = V.element_of_order(1, 6);
    CHECK(C.order_of(z) == 6);
    // generator of F_7^* is 3 or 5; the smallest by key is 3
    CHECK(z.c == std::vector<u32>{3});

    // q=2 case: element of order n(q+1) = 9 in F_64
    Tower T2 = build_tower(2, 1, 6);
    FieldElem x9 = T2.view->element_of_order(6, 9);
    CHECK(T2.core->order_of(x9) == 9);
}

TEST_CASE("element keys are a total order with 0 minimal") {
    Tower T = build_tower(2, 1, 2);
    const TowerView& V = *T.view;
    auto& C = *T.core;
    CHECK(V.element_key(C.zero(1)) < V.element_key(C.one(1)));
    // sorting F_4: 0, 1, t, 1+t
    FieldElem t = C.gen_root(2);
    std::vector<FieldElem> sorted{C.zero(2), C.one(2), t, C.add(C.one(2), t)};
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        CHECK(V.element_key(sorted[i]) < V.element_key(sorted[i + 1]));
}

TEST_CASE("field axioms on sampled triples") {
    for (auto [p, e, n] : {std::tuple<u32, u32, u32>{2, 2, 3}, {3, 1, 4}, {5, 1, 3}}) {
        Tower T = build_tower(p, e, n);
        auto& C = *T.core;
        SplitMix64 rng(11 * p + e);
        for (u32 lvl = 1; lvl <= n; ++lvl) {
            u32 d = e * lvl;
            LevelOps K{&C, d, p, d, 0};
            for (int it = 0; it < 40; ++it) {
                FieldElem a = K.random(rng), b = K.random(rng), c = K.random(rng);
                CHECK(C.mul(a, C.mul(b, c)) == C.mul(C.mul(a, b), c));
                CHECK(C.mul(a, C.add(b, c)) == C.add(C.mul(a, b), C.mul(a, c)));
                if (!C.is_zero(a)) CHECK(C.mul(a, C.inv(a)) == C.one(d));
            }
        }
    }
}

TEST_CASE("q = p^e views: tensor coords round-trip and subfield tests") {
    Tower T = build_tower(2, 2, 3);  // F_4 base, levels to F_64
    const TowerView& V = *T.view;
    auto& C = *T.core;
    CHECK(V.q() == 4);
    SplitMix64 rng(5);
    LevelOps K{&C, 6, 2, 6, 64};
    for (int it = 0; it < 60; ++it) {
        FieldElem x = K.random(rng);
        auto t = V.tensor_coords(x);
        CHECK(V.from_tensor_coords(3, t) == x);
    }
    // base membership: embedded base elements pass, a level-3 generator fails
    FieldElem g = V.generator(1);
    CHECK(V.in_base(C.embed(g, 6)));
    CHECK(!V.in_base(V.generator(3)));
    auto back = V.contract_to_base(C.embed(g, 6));
    REQUIRE(back.has_value());
    CHECK(*back == g);
}

TEST_CASE("squared view shares the core") {
    Tower T = build_tower(3, 1, 6);
    TowerView V2 = T.view->squared();
    CHECK(V2.q() == 9);
    CHECK(V2.max_level() == 3);
    CHECK(V2.core_deg(3) == 6);
    // the squared view's base is the original level 2
    FieldElem om = V2.omega();  // in F_81 \ F_9
    CHECK(om.deg() == 4);
    CHECK(!V2.in_base(om));
}

TEST_CASE("canonical constants") {
    Tower T = build_tower(3, 1, 2);
    const TowerView& V = *T.view;
    FieldElem om = V.omega();
    CHECK(!V.in_base(om));
    FieldElem t = V.trace_one_elem();
    CHECK(V.abs_trace(t) != 0);
    FieldElem ns = V.nonsquare();
    CHECK(ns.c == std::vector<u32>{2});  // 2 is the nonsquare mod 3
}

TEST_CASE("build_tower rejects bad input") {
    CHECK_THROWS(build_tower(4, 1, 2));   // not prime
    CHECK_THROWS(build_tower(0, 1, 2));
}
