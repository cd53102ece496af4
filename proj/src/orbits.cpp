#include "p1enum/orbits.hpp"

#include "p1enum/polyfactor.hpp"
#include "p1enum/unipoly.hpp"

#include <algorithm>
#include <array>

namespace p1enum {

// ---------------------------------------------------------------- group

u64 pgl2_order(u64 q) { return q * q * q - q; }

u64 pgl2_code_space(u64 q) { return q * q * q + (q - 1) * q; }

std::optional<Mat2> pgl2_elem_at(const TowerView& V, u64 code) {
    u64 q = V.q();
    if (code < q * q * q) {
        u64 b = code % q;
        u64 c = (code / q) % q;
        u64 d = code / (q * q);
        Mat2 M{V.one(), V.base_from_index(b), V.base_from_index(c), V.base_from_index(d)};
        if (V.is_zero(mat_det(V.core(), M))) return std::nullopt;
        return M;
    }
    code -= q * q * q;
    if (code >= (q - 1) * q) throw std::invalid_argument("pgl2_elem_at: code out of range");
    u64 c = 1 + code % (q - 1);
    u64 d = code / (q - 1);
    return Mat2{V.zero(), V.one(), V.base_from_index(c), V.base_from_index(d)};
}

std::vector<Mat2> enumerate_group(const TowerView& V) {
    std::vector<Mat2> out;
    out.reserve(pgl2_order(V.q()));
    for (u64 code = 0; code < pgl2_code_space(V.q()); ++code) {
        auto M = pgl2_elem_at(V, code);
        if (M) out.push_back(*M);
    }
    return out;
}

void for_each_group_element(const TowerView& V, const std::function<void(const Mat2&)>& fn) {
    for (u64 code = 0; code < pgl2_code_space(V.q()); ++code) {
        auto M = pgl2_elem_at(V, code);
        if (M) fn(*M);
    }
}

// ---------------------------------------------------------------- triples

namespace {

std::pair<FieldElem, FieldElem> point_vec(const TowerCore& C, const ProjPoint& P) {
    u32 d = P.alpha.deg();
    if (P.inf) return {C.one(d), C.zero(d)};
    return {P.alpha, C.one(d)};
}

}  // namespace

Mat2 matrix_from_triple(const TowerCore& C, const ProjPoint& z, const ProjPoint& e,
                        const ProjPoint& t) {
    auto [z1, z2] = point_vec(C, z);
    auto [e1, e2] = point_vec(C, e);
    auto [t1, t2] = point_vec(C, t);
    FieldElem det = C.sub(C.mul(z1, e2), C.mul(z2, e1));
    if (C.is_zero(det)) throw std::invalid_argument("matrix_from_triple: coincident points");
    FieldElem u = C.div(C.sub(C.mul(t1, e2), C.mul(t2, e1)), det);
    FieldElem v = C.div(C.sub(C.mul(z1, t2), C.mul(z2, t1)), det);
    if (C.is_zero(u) || C.is_zero(v))
        throw std::invalid_argument("matrix_from_triple: third point coincides");
    return Mat2{C.mul(u, z1), C.mul(v, e1), C.mul(u, z2), C.mul(v, e2)};
}

std::array<ProjPoint, 3> triple_of_matrix(const TowerCore& C, const Mat2& M) {
    auto mk = [&](const FieldElem& num, const FieldElem& den) {
        if (C.is_zero(den)) return ProjPoint{true, C.zero(num.deg())};
        return ProjPoint{false, C.div(num, den)};
    };
    return {mk(M.a, M.c), mk(M.b, M.d), mk(C.add(M.a, M.b), C.add(M.c, M.d))};
}

std::optional<Mat2> rational_from_level(const TowerView& V, const Mat2& M) {
    Mat2 cm = mat_canon(V.core(), M);
    auto ca = V.contract_to_base(cm.a);
    if (!ca) return std::nullopt;
    auto cb = V.contract_to_base(cm.b);
    if (!cb) return std::nullopt;
    auto cc = V.contract_to_base(cm.c);
    if (!cc) return std::nullopt;
    auto cd = V.contract_to_base(cm.d);
    if (!cd) return std::nullopt;
    return Mat2{*ca, *cb, *cc, *cd};
}

// ---------------------------------------------------------------- stabilizers

namespace {

void push_unique(const TowerCore& C, std::vector<Mat2>& out, const Mat2& M) {
    Mat2 cm = mat_canon(C, M);
    for (auto& e : out)
        if (e.a == cm.a && e.b == cm.b && e.c == cm.c && e.d == cm.d) return;
    out.push_back(cm);
}

std::vector<const Place*> places_of_degree(const Divisor& S, u32 d) {
    std::vector<const Place*> out;
    for (auto& [pl, m] : S.parts)
        if (pl.deg == d) out.push_back(&pl);
    return out;
}

}  // namespace

std::vector<Mat2> support_map_candidates(const TowerView& V, const Divisor& S1,
                                         const Divisor& S2) {
    const TowerCore& C = V.core();
    u32 m1 = 0;
    for (auto& [pl, m] : S1.parts) {
        (void)m;
        m1 = std::max(m1, pl.deg);
    }
    if (S1.degree() < 3)
        throw std::invalid_argument("support_map_candidates: support degree < 3");
    std::vector<Mat2> out;
    if (m1 >= 3) {
        const Place* A = places_of_degree(S1, m1)[0];
        auto pts = place_points(V, *A);
        Mat2 anch_inv = mat_inv(C, matrix_from_triple(C, pts[0], pts[1], pts[2]));
        for (const Place* Q : places_of_degree(S2, m1)) {
            auto qpts = place_points(V, *Q);
            for (u32 j = 0; j < m1; ++j) {
                Mat2 tgt = matrix_from_triple(C, qpts[j], qpts[(j + 1) % m1],
                                              qpts[(j + 2) % m1]);
                auto R = rational_from_level(V, mat_mul(C, tgt, anch_inv));
                if (R) push_unique(C, out, *R);
            }
        }
        return out;
    }
    if (m1 == 2) {
        auto deg2_1 = places_of_degree(S1, 2);
        const Place* A = deg2_1[0];
        const Place* B = nullptr;
        for (auto& [pl, m] : S1.parts) {
            (void)m;
            if (&pl != A) { B = &pl; break; }
        }
        u32 cd = V.core_deg(2);
        auto apts = place_points(V, *A);
        ProjPoint g;
        if (B->deg == 2) {
            g = place_points(V, *B)[0];
        } else {
            g = B->root.inf ? ProjPoint{true, C.zero(cd)}
                            : ProjPoint{false, C.embed(B->root.alpha, cd)};
        }
        Mat2 anch_inv = mat_inv(C, matrix_from_triple(C, apts[0], apts[1], g));
        for (const Place* Q : places_of_degree(S2, 2)) {
            auto qpts = place_points(V, *Q);
            for (u32 j = 0; j < 2; ++j) {
                const ProjPoint& b0 = qpts[j];
                const ProjPoint& b1 = qpts[1 - j];
                if (B->deg == 2) {
                    for (const Place* R : places_of_degree(S2, 2)) {
                        if (R == Q) continue;
                        for (const ProjPoint& d0 : place_points(V, *R)) {
                            Mat2 tgt = matrix_from_triple(C, b0, b1, d0);
                            auto Rr = rational_from_level(V, mat_mul(C, tgt, anch_inv));
                            if (Rr) push_unique(C, out, *Rr);
                        }
                    }
                } else {
                    for (const Place* R : places_of_degree(S2, 1)) {
                        ProjPoint d0 = R->root.inf
                                           ? ProjPoint{true, C.zero(cd)}
                                           : ProjPoint{false, C.embed(R->root.alpha, cd)};
                        Mat2 tgt = matrix_from_triple(C, b0, b1, d0);
                        auto Rr = rational_from_level(V, mat_mul(C, tgt, anch_inv));
                        if (Rr) push_unique(C, out, *Rr);
                    }
                }
            }
        }
        return out;
    }
    // all places rational, at least three of them
    auto r1 = places_of_degree(S1, 1);
    auto r2 = places_of_degree(S2, 1);
    Mat2 anch_inv = mat_inv(C, matrix_from_triple(C, r1[0]->root, r1[1]->root, r1[2]->root));
    for (size_t i = 0; i < r2.size(); ++i)
        for (size_t j = 0; j < r2.size(); ++j) {
            if (j == i) continue;
            for (size_t k = 0; k < r2.size(); ++k) {
                if (k == i || k == j) continue;
                Mat2 tgt = matrix_from_triple(C, r2[i]->root, r2[j]->root, r2[k]->root);
                push_unique(C, out, mat_mul(C, tgt, anch_inv));
            }
        }
    return out;
}

std::vector<Mat2> maps_place_to_place(const TowerView& V, const Place& A, const Place& B) {
    if (A.deg != B.deg || A.deg < 3)
        throw std::invalid_argument("maps_place_to_place: need equal degrees >= 3");
    const TowerCore& C = V.core();
    u32 m = A.deg;
    auto apts = place_points(V, A);
    Mat2 anch_inv = mat_inv(C, matrix_from_triple(C, apts[0], apts[1], apts[2]));
    auto bpts = place_points(V, B);
    std::vector<Mat2> out;
    for (u32 j = 0; j < m; ++j) {
        Mat2 tgt = matrix_from_triple(C, bpts[j], bpts[(j + 1) % m], bpts[(j + 2) % m]);
        auto R = rational_from_level(V, mat_mul(C, tgt, anch_inv));
        if (R) push_unique(C, out, *R);
    }
    return out;
}

std::vector<Mat2> maps_pair_to_pair(const TowerView& V, const Place& A1, const Place& A2,
                                    const Place& B1, const Place& B2) {
    const TowerCore& C = V.core();
    if (A1.deg != 2 || A2.deg != 2 || B1.deg != 2 || B2.deg != 2)
        throw std::invalid_argument("maps_pair_to_pair: degree-2 places expected");
    auto a1 = place_points(V, A1);
    auto a2 = place_points(V, A2);
    Mat2 anch_inv = mat_inv(C, matrix_from_triple(C, a1[0], a1[1], a2[0]));
    std::vector<Mat2> out;
    const Place* firsts[2] = {&B1, &B2};
    for (int sel = 0; sel < 2; ++sel) {
        const Place& T1 = *firsts[sel];
        const Place& T2 = *firsts[1 - sel];
        auto t1 = place_points(V, T1);
        auto t2 = place_points(V, T2);
        for (u32 j = 0; j < 2; ++j)
            for (u32 k = 0; k < 2; ++k) {
                Mat2 tgt = matrix_from_triple(C, t1[j], t1[1 - j], t2[k]);
                auto R = rational_from_level(V, mat_mul(C, tgt, anch_inv));
                if (R) push_unique(C, out, *R);
            }
    }
    return out;
}

namespace {

// Moebius map sending P to infinity and Q to zero (distinct rational points).
Mat2 mobius_to_inf_zero(const TowerView& V, const ProjPoint& P, const ProjPoint& Q) {
    if (P.inf) return Mat2{V.one(), Q.inf ? V.zero() : V.neg(Q.alpha), V.zero(), V.one()};
    if (Q.inf) return Mat2{V.zero(), V.one(), V.one(), V.neg(P.alpha)};
    return Mat2{V.one(), V.neg(Q.alpha), V.one(), V.neg(P.alpha)};
}

enum class SmallSupportShape { OnePlaceDeg1, TwoRational, OneQuadratic };

SmallSupportShape small_support_shape(const Divisor& S) {
    if (S.parts.size() == 1) {
        return S.parts[0].first.deg == 1 ? SmallSupportShape::OnePlaceDeg1
                                         : SmallSupportShape::OneQuadratic;
    }
    return SmallSupportShape::TwoRational;
}

}  // namespace

void for_each_divisor_stabilizer(const TowerView& V, const Divisor& D,
                                 const std::function<void(const Mat2&)>& fn) {
    const TowerCore& C = V.core();
    Divisor S = divisor_support(D);
    u64 q = V.q();
    if (S.degree() >= 3) {
        for (auto& M : support_map_candidates(V, S, S)) {
            if (divisor_eq(V, act_on_divisor(V, M, D), D)) fn(M);
        }
        return;
    }
    switch (small_support_shape(S)) {
        case SmallSupportShape::OnePlaceDeg1: {
            // conjugate the upper-triangular family by a map sending P to inf
            const ProjPoint& P = S.parts[0].first.root;
            ProjPoint other = P.inf ? ProjPoint{false, V.zero()} : ProjPoint{true, V.zero()};
            Mat2 del = mobius_to_inf_zero(V, P, other);
            Mat2 deli = mat_inv(C, del);
            for (u64 ia = 1; ia < q; ++ia)
                for (u64 ib = 0; ib < q; ++ib) {
                    Mat2 F{V.base_from_index(ia), V.base_from_index(ib), V.zero(), V.one()};
                    fn(mat_canon(C, mat_mul(C, deli, mat_mul(C, F, del))));
                }
            return;
        }
        case SmallSupportShape::TwoRational: {
            u32 mult1 = D.parts[0].second, mult2 = D.parts[1].second;
            const ProjPoint& big = (mult1 >= mult2) ? D.parts[0].first.root : D.parts[1].first.root;
            const ProjPoint& small = (mult1 >= mult2) ? D.parts[1].first.root : D.parts[0].first.root;
            Mat2 del = mobius_to_inf_zero(V, big, small);
            Mat2 deli = mat_inv(C, del);
            for (u64 ia = 1; ia < q; ++ia) {
                Mat2 F{V.base_from_index(ia), V.zero(), V.zero(), V.one()};
                fn(mat_canon(C, mat_mul(C, deli, mat_mul(C, F, del))));
            }
            if (mult1 == mult2) {
                for (u64 ia = 1; ia < q; ++ia) {
                    Mat2 F{V.zero(), V.base_from_index(ia), V.one(), V.zero()};
                    fn(mat_canon(C, mat_mul(C, deli, mat_mul(C, F, del))));
                }
            }
            return;
        }
        case SmallSupportShape::OneQuadratic: {
            // stabilizer of the place of x^2 + s xy + t y^2, parameterized
            // directly by its coefficients (u = -s, v = t)
            const HomPoly& p2 = S.parts[0].first.poly;
            FieldElem u = V.neg(p2.c[1]), v = p2.c[0];
            auto emit_pair = [&](const FieldElem& a, const FieldElem& b) {
                Mat2 M1{a, V.neg(V.mul(b, v)), b, V.sub(a, V.mul(b, u))};
                if (!V.is_zero(mat_det(C, M1))) fn(mat_canon(C, M1));
                Mat2 M2{a, V.add(V.neg(V.mul(a, u)), V.mul(b, v)), b, V.neg(a)};
                if (!V.is_zero(mat_det(C, M2))) fn(mat_canon(C, M2));
            };
            for (u64 ib = 0; ib < q; ++ib) emit_pair(V.one(), V.base_from_index(ib));
            emit_pair(V.zero(), V.one());
            return;
        }
    }
}

std::vector<Mat2> stabilizer_of_divisor(const TowerView& V, const Divisor& D) {
    std::vector<Mat2> out;
    for_each_divisor_stabilizer(V, D, [&](const Mat2& M) { out.push_back(M); });
    return out;
}

u64 stabilizer_size_formula(const TowerView& V, const Divisor& D) {
    Divisor S = divisor_support(D);
    u64 q = V.q();
    if (S.degree() >= 3) return stabilizer_of_divisor(V, D).size();
    switch (small_support_shape(S)) {
        case SmallSupportShape::OnePlaceDeg1: return q * (q - 1);
        case SmallSupportShape::TwoRational:
            return D.parts[0].second == D.parts[1].second ? 2 * (q - 1) : q - 1;
        case SmallSupportShape::OneQuadratic: return 2 * (q + 1);
    }
    return 0;
}

bool same_orbit_same_support(const TowerView& V, const Divisor& D1, const Divisor& D2) {
    Divisor S1 = divisor_support(D1), S2 = divisor_support(D2);
    if (!divisor_eq(V, S1, S2))
        throw std::invalid_argument("same_orbit_same_support: supports differ");
    if (D1.degree() != D2.degree())
        throw std::invalid_argument("same_orbit_same_support: degrees differ");
    if (divisor_eq(V, D1, D2)) return true;
    if (S1.degree() < 3) {
        switch (small_support_shape(S1)) {
            case SmallSupportShape::OnePlaceDeg1:
            case SmallSupportShape::OneQuadratic:
                return false;  // one place carries the degree; equality handled above
            case SmallSupportShape::TwoRational:
                return D1.parts[0].second == D2.parts[1].second &&
                       D1.parts[1].second == D2.parts[0].second;
        }
    }
    for (auto& M : support_map_candidates(V, S1, S2)) {
        if (divisor_eq(V, act_on_divisor(V, M, D1), D2)) return true;
    }
    return false;
}

// ---------------------------------------------------------------- cosets

u64 coset_rep_count(u64 q) { return q * q * q + q; }

namespace {

FieldElem level_elem_by_rank(const TowerView& V, u32 level, u64 rank) {
    u32 d = V.core_deg(level);
    u32 p = V.p();
    std::vector<u32> key(d, 0);
    for (u32 j = d; j-- > 0 && rank;) {
        key[j] = u32(rank % p);
        rank /= p;
    }
    if (rank) throw std::invalid_argument("level_elem_by_rank: out of range");
    std::vector<u32> tensor(key.rbegin(), key.rend());
    return V.from_tensor_coords(level, tensor);
}

u64 level_rank_of(const TowerView& V, const FieldElem& x) {
    u64 r = 0;
    for (u32 k : V.element_key(x)) r = r * V.p() + k;
    return r;
}

// B set entry (omega gamma^i + omega^q) / (gamma^i + 1), read projectively
ProjPoint b_set_entry(const TowerView& V, const FieldElem& om, const FieldElem& omq,
                      const FieldElem& gpow) {
    const TowerCore& C = V.core();
    FieldElem den = C.add(gpow, C.one(gpow.deg()));
    FieldElem num = C.add(C.mul(om, gpow), omq);
    if (C.is_zero(den)) return ProjPoint{true, C.zero(gpow.deg())};
    return ProjPoint{false, C.div(num, den)};
}

ProjPoint p1_point_by_rank(const TowerView& V, u32 level, u64 rank) {
    if (rank == 0) return ProjPoint{true, V.core().zero(V.core_deg(level))};
    return ProjPoint{false, level_elem_by_rank(V, level, rank - 1)};
}

u64 p1_rank_of(const TowerView& V, const ProjPoint& P) {
    if (P.inf) return 0;
    return 1 + level_rank_of(V, P.alpha);
}

}  // namespace

Mat2 coset_rep_at(const TowerView& V, u64 idx) {
    const TowerCore& C = V.core();
    u64 q = V.q();
    if (idx >= coset_rep_count(q)) throw std::invalid_argument("coset_rep_at: out of range");
    u32 cd = V.core_deg(2);
    FieldElem om = V.omega();
    ProjPoint inf{true, C.zero(cd)};
    auto fin = [](const FieldElem& x) { return ProjPoint{false, x}; };

    if (idx == 0) return mat_identity(C, cd);  // (inf, 0, 1)
    idx -= 1;
    if (idx < q) {  // (inf, 0, omega + a)
        FieldElem th = C.add(om, C.embed(V.base_from_index(idx), cd));
        return matrix_from_triple(C, inf, fin(C.zero(cd)), fin(th));
    }
    idx -= q;
    if (idx < q * q - 1) {  // (inf, omega, theta), theta != omega
        u64 rom = level_rank_of(V, om);
        u64 r = idx < rom ? idx : idx + 1;
        return matrix_from_triple(C, inf, fin(om), fin(level_elem_by_rank(V, 2, r)));
    }
    idx -= q * q - 1;
    FieldElem omq = V.frobenius(om, 1);
    if (idx < q - 1) {  // (omega, omega^q, B_i)
        FieldElem gpow = C.pow(V.generator(2), idx);
        return matrix_from_triple(C, fin(om), fin(omq), b_set_entry(V, om, omq, gpow));
    }
    idx -= q - 1;
    // (omega, eta, theta): eta in B, theta in P^1(F_{q^2}) \ {omega, eta}
    u64 i = idx / (q * q - 1);
    u64 t = idx % (q * q - 1);
    FieldElem gpow = C.pow(V.generator(2), i);
    ProjPoint eta = b_set_entry(V, om, omq, gpow);
    u64 skip1 = p1_rank_of(V, ProjPoint{false, om});
    u64 skip2 = p1_rank_of(V, eta);
    u64 lo = std::min(skip1, skip2), hi = std::max(skip1, skip2);
    u64 r = t;
    if (r >= lo) ++r;
    if (r >= hi) ++r;
    return matrix_from_triple(C, fin(om), eta, p1_point_by_rank(V, 2, r));
}

// ---------------------------------------------------------------- labels

namespace {

bool point_rational(const TowerView& V, const ProjPoint& P) {
    return P.inf || V.in_base(P.alpha);
}

// write x (level 2, not in base) as c*omega + d with c, d rational,
// both returned at level 2
std::pair<FieldElem, FieldElem> omega_coords(const TowerView& V, const FieldElem& x,
                                             const FieldElem& om) {
    const TowerCore& C = V.core();
    FieldElem xq = V.frobenius(x, 1);
    FieldElem omq = V.frobenius(om, 1);
    FieldElem c = C.div(C.sub(x, xq), C.sub(om, omq));
    FieldElem d = C.sub(x, C.mul(c, om));
    return {c, d};
}

FieldElem phi_value(const TowerView& V, const FieldElem& om, const FieldElem& omq,
                    const ProjPoint& P) {
    // Phi = [[-1, omega^q], [1, -omega]] applied to P, read as an element
    const TowerCore& C = V.core();
    if (P.inf) return C.neg(C.one(om.deg()));
    FieldElem den = C.sub(P.alpha, om);
    if (C.is_zero(den)) throw std::logic_error("phi_value: applied at omega");
    return C.div(C.sub(omq, P.alpha), den);
}

}  // namespace

CosetLabel orbit_label(const TowerView& V, const Mat2& G) {
    const TowerCore& C = V.core();
    u32 cd = V.core_deg(2);
    FieldElem om = V.omega();
    FieldElem omq = V.frobenius(om, 1);
    auto tri = triple_of_matrix(C, G);
    const ProjPoint &z0 = tri[0], &e0 = tri[1], &t0 = tri[2];
    FieldElem zero2 = C.zero(cd), one2 = C.one(cd);

    bool zr = point_rational(V, z0), er = point_rational(V, e0), tr = point_rational(V, t0);
    if (zr && er && tr) return CosetLabel{zero2, zero2, one2};

    if (zr && er) {
        // move (z0, e0) to (inf, 0) rationally; normalize the image of t0
        auto down = [&](const ProjPoint& P) {
            if (P.inf) return ProjPoint{true, V.zero()};
            return ProjPoint{false, *V.contract_to_base(P.alpha)};
        };
        Mat2 mu = mobius_to_inf_zero(V, down(z0), down(e0));
        ProjPoint tau = act_on_point(C, mat_embed(C, mu, cd), t0);
        auto [c, d] = omega_coords(V, tau.alpha, om);
        return CosetLabel{zero2, zero2, C.add(om, C.div(d, c))};
    }

    if (zr) {
        // z0 -> inf, then the image of e0 -> omega by the unique affine map
        Mat2 nu = mat_identity(C, V.s());
        if (!z0.inf) nu = Mat2{V.zero(), V.one(), V.one(), V.neg(*V.contract_to_base(z0.alpha))};
        Mat2 nu2 = mat_embed(C, nu, cd);
        ProjPoint ep = act_on_point(C, nu2, e0);
        auto [c, d] = omega_coords(V, ep.alpha, om);
        Mat2 aff{one2, C.neg(d), zero2, c};  // x -> (x - d)/c
        Mat2 g = mat_mul(C, aff, nu2);
        ProjPoint th = act_on_point(C, g, t0);
        if (th.inf) throw std::logic_error("orbit_label: unexpected infinity");
        return CosetLabel{zero2, om, th.alpha};
    }

    // z0 -> omega
    auto [c, d] = omega_coords(V, z0.alpha, om);
    Mat2 g{one2, C.neg(d), zero2, c};
    ProjPoint ep = act_on_point(C, g, e0);
    ProjPoint tp = act_on_point(C, g, t0);
    bool eta_is_omq = !ep.inf && ep.alpha == omq;
    if (eta_is_omq) {
        FieldElem nt = V.norm_to_base(phi_value(V, om, omq, tp));
        return CosetLabel{one2, zero2, C.embed(nt, cd)};
    }
    FieldElem fe = phi_value(V, om, omq, ep);
    FieldElem ft = phi_value(V, om, omq, tp);
    FieldElem ne = V.norm_to_base(fe);
    return CosetLabel{one2, C.embed(ne, cd), C.div(ft, fe)};
}

int label_cmp(const TowerView& V, const CosetLabel& a, const CosetLabel& b) {
    int c = V.cmp(a.x, b.x);
    if (c) return c;
    c = V.cmp(a.y, b.y);
    if (c) return c;
    return V.cmp(a.z, b.z);
}

Mat2 conjugate_mat(const TowerView& V, const Mat2& M) {
    return Mat2{V.frobenius(M.a, 1), V.frobenius(M.b, 1), V.frobenius(M.c, 1),
                V.frobenius(M.d, 1)};
}

Place conjugate_place(const TowerView& base_view, const Place& P) {
    const TowerCore& C = base_view.core();
    u32 s = base_view.s();
    Place r;
    r.deg = P.deg;
    r.poly = P.poly;
    for (auto& c : r.poly.c) c = C.frob_p(c, s);
    r.root = P.root;
    if (!r.root.inf) r.root.alpha = C.frob_p(r.root.alpha, s);
    return r;
}

// ---------------------------------------------------------------- invariants

namespace {

template <class Ops, class FrobQ>
std::vector<typename Ops::Elem> cross_impl(const Ops& K, FrobQ frob_q,
                                           std::vector<typename Ops::Elem> uf) {
    u32 n = u32(up::degree(uf));
    auto pis = up::frobenius_powers(K, uf, 3);
    const auto& x = pis[0];
    const auto& r1 = pis[1];
    const auto& r2 = pis[2];
    const auto& r3 = pis[3];
    up::Reducer<Ops> red(K, uf);
    auto mulm = [&](const up::PV<Ops>& a, const up::PV<Ops>& b) {
        return red.reduce(up::mul(K, a, b));
    };
    // chi = (r3 - r1)(r2 - x) / ((r3 - x)(r2 - r1)) mod f
    auto num = mulm(up::sub(K, r3, r1), up::sub(K, r2, x));
    auto den = mulm(up::sub(K, r3, x), up::sub(K, r2, r1));
    auto u = mulm(num, up::invmod(K, den, uf));
    // conjugates u^(q^j) mod f via composition with x^q
    std::vector<up::PV<Ops>> conj{u};
    for (u32 j = 1; j < n; ++j) {
        up::PV<Ops> prev = conj.back();
        for (auto& cf : prev) cf = frob_q(cf);
        conj.push_back(up::compose_mod(K, prev, r1, uf));
    }
    // expand prod_j (T - u_j); the coefficients are Frobenius-symmetric,
    // hence constants mod f
    std::vector<up::PV<Ops>> poly{up::PV<Ops>{K.one()}};
    for (u32 j = 0; j < n; ++j) {
        std::vector<up::PV<Ops>> next(poly.size() + 1);
        for (size_t t = 0; t < poly.size(); ++t) {
            next[t + 1] = up::add(K, next[t + 1], poly[t]);
            next[t] = up::sub(K, next[t], mulm(poly[t], conj[j]));
        }
        poly = std::move(next);
    }
    std::vector<typename Ops::Elem> out;
    for (auto& coef : poly) {
        if (up::degree(coef) > 0)
            throw std::logic_error("cross_polynomial: non-constant symmetric function");
        out.push_back(coef.empty() ? K.zero() : coef[0]);
    }
    return out;
}

}  // namespace

std::vector<FieldElem> cross_polynomial(const TowerView& V, const HomPoly& f) {
    u32 n = f.degree();
    if (n < 4) throw std::invalid_argument("cross_polynomial: degree < 4");
    if (!is_irreducible(V, f)) throw std::invalid_argument("cross_polynomial: reducible input");
    const TowerCore& C = V.core();
    u32 s = V.s();
    const TowerLevel& L = C.level(s);
    if (L.zech) {
        ZechOps K{L.zech.get(), C.p(), s, L.zech->q};
        u32 p = C.p();
        std::vector<u32> uf(f.c.size());
        for (size_t i = 0; i < f.c.size(); ++i) {
            u32 v = 0;
            for (u32 j = f.c[i].deg(); j-- > 0;) v = v * p + f.c[i].c[j];
            uf[i] = v;
        }
        auto res = cross_impl(K, [&](u32 a) { return K.Z->pow(a, K.q); }, std::move(uf));
        std::vector<FieldElem> out;
        for (u32 v : res) {
            std::vector<u32> cc(s);
            for (u32 j = 0; j < s; ++j) { cc[j] = v % p; v /= p; }
            out.emplace_back(std::move(cc));
        }
        return out;
    }
    LevelOps K{&C, s, C.p(), s, V.q()};
    std::vector<FieldElem> uf(f.c.begin(), f.c.end());
    return cross_impl(K, [&](const FieldElem& a) { return V.frobenius(a, 1); }, std::move(uf));
}

std::vector<u32> cross_key(const TowerView& V, const HomPoly& f) {
    if (f.degree() < 4) return {0};  // single orbit below degree 4
    std::vector<u32> key{1};
    for (auto& c : cross_polynomial(V, f)) {
        auto k = V.element_key(c);
        key.insert(key.end(), k.begin(), k.end());
    }
    return key;
}

FieldElem lambda_invariant(const TowerView& V, const HomPoly& f1, const HomPoly& f2) {
    if (f1.degree() != 2 || f2.degree() != 2)
        throw std::invalid_argument("lambda_invariant: inputs must be quadratic");
    if (hp_eq(V, f1, f2)) throw std::invalid_argument("lambda_invariant: equal inputs");
    if (!is_irreducible(V, f1) || !is_irreducible(V, f2))
        throw std::invalid_argument("lambda_invariant: reducible input");
    const FieldElem& s = f1.c[1];
    const FieldElem& t = f1.c[0];
    const FieldElem& u = f2.c[1];
    const FieldElem& v = f2.c[0];
    FieldElem four = V.scalar(4 % V.p());
    FieldElem num = V.add(V.mul(V.sub(s, u), V.sub(V.mul(s, v), V.mul(t, u))),
                          V.mul(V.sub(t, v), V.sub(t, v)));
    FieldElem den = V.mul(V.sub(V.mul(s, s), V.mul(four, t)),
                          V.sub(V.mul(u, u), V.mul(four, v)));
    return V.div(num, den);
}

}  // namespace p1enum
