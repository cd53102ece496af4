#include "p1enum/projgeom.hpp"

#include "p1enum/polyfactor.hpp"

#include <algorithm>

namespace p1enum {

HomPoly hp_zero(const TowerView& V, u32 n) {
    HomPoly f;
    f.c.assign(n + 1, V.zero());
    return f;
}

HomPoly hp_y(const TowerView& V) {
    HomPoly f = hp_zero(V, 1);
    f.c[0] = V.one();
    return f;
}

HomPoly hp_x(const TowerView& V) {
    HomPoly f = hp_zero(V, 1);
    f.c[1] = V.one();
    return f;
}

bool hp_is_zero(const TowerView& V, const HomPoly& f) {
    for (auto& c : f.c)
        if (!V.is_zero(c)) return false;
    return true;
}

bool hp_eq(const TowerView& V, const HomPoly& f, const HomPoly& g) {
    (void)V;
    if (f.c.size() != g.c.size()) return false;
    for (size_t i = 0; i < f.c.size(); ++i)
        if (!(f.c[i] == g.c[i])) return false;
    return true;
}

int univ_degree(const TowerView& V, const HomPoly& f) {
    for (size_t i = f.c.size(); i-- > 0;)
        if (!V.is_zero(f.c[i])) return int(i);
    return -1;
}

u32 y_valuation(const TowerView& V, const HomPoly& f) {
    int d = univ_degree(V, f);
    if (d < 0) throw std::invalid_argument("y_valuation: zero polynomial");
    return f.degree() - u32(d);
}

bool hp_is_monic(const TowerView& V, const HomPoly& f) {
    int d = univ_degree(V, f);
    return d >= 0 && V.is_one(f.c[size_t(d)]);
}

HomPoly hp_scale(const TowerView& V, const HomPoly& f, const FieldElem& s) {
    HomPoly r = f;
    for (auto& c : r.c) c = V.mul(c, s);
    return r;
}

HomPoly hp_monicize(const TowerView& V, const HomPoly& f) {
    int d = univ_degree(V, f);
    if (d < 0) throw std::invalid_argument("monicize: zero polynomial");
    if (V.is_one(f.c[size_t(d)])) return f;
    FieldElem s = V.inv(f.c[size_t(d)]);
    return hp_scale(V, f, s);
}

HomPoly hp_add(const TowerView& V, const HomPoly& f, const HomPoly& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("hp_add: degree mismatch");
    HomPoly r = f;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = V.add(r.c[i], g.c[i]);
    return r;
}

HomPoly hp_sub(const TowerView& V, const HomPoly& f, const HomPoly& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("hp_sub: degree mismatch");
    HomPoly r = f;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = V.sub(r.c[i], g.c[i]);
    return r;
}

HomPoly hp_mul(const TowerView& V, const HomPoly& f, const HomPoly& g) {
    HomPoly r = hp_zero(V, f.degree() + g.degree());
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (V.is_zero(f.c[i])) continue;
        for (size_t j = 0; j < g.c.size(); ++j)
            r.c[i + j] = V.add(r.c[i + j], V.mul(f.c[i], g.c[j]));
    }
    return r;
}

HomPoly hp_conjugate(const TowerView& V, const HomPoly& f) {
    HomPoly r = f;
    for (auto& c : r.c) c = V.frobenius(c, 1);
    return r;
}

bool hp_coeffs_in_subview(const TowerView& V, const HomPoly& f) {
    for (auto& c : f.c)
        if (!V.in_base(c)) return false;
    return true;
}

std::vector<u32> poly_key(const TowerView& V, const HomPoly& f) {
    std::vector<u32> key{f.degree()};
    for (size_t i = f.c.size(); i-- > 0;) {
        auto k = V.element_key(f.c[i]);
        key.insert(key.end(), k.begin(), k.end());
    }
    return key;
}

int poly_cmp(const TowerView& V, const HomPoly& f, const HomPoly& g) {
    if (f.degree() != g.degree()) return f.degree() < g.degree() ? -1 : 1;
    auto kf = poly_key(V, f), kg = poly_key(V, g);
    if (kf < kg) return -1;
    if (kg < kf) return 1;
    return 0;
}

// ---------------------------------------------------------------- matrices

Mat2 mat_mul(const TowerCore& C, const Mat2& M, const Mat2& N) {
    return Mat2{C.add(C.mul(M.a, N.a), C.mul(M.b, N.c)),
                C.add(C.mul(M.a, N.b), C.mul(M.b, N.d)),
                C.add(C.mul(M.c, N.a), C.mul(M.d, N.c)),
                C.add(C.mul(M.c, N.b), C.mul(M.d, N.d))};
}

FieldElem mat_det(const TowerCore& C, const Mat2& M) {
    return C.sub(C.mul(M.a, M.d), C.mul(M.b, M.c));
}

Mat2 mat_inv(const TowerCore& C, const Mat2& M) {
    return Mat2{M.d, C.neg(M.b), C.neg(M.c), M.a};
}

Mat2 mat_canon(const TowerCore& C, const Mat2& M) {
    const FieldElem* entries[4] = {&M.a, &M.b, &M.c, &M.d};
    for (auto* e : entries) {
        if (!C.is_zero(*e)) {
            FieldElem s = C.inv(*e);
            return Mat2{C.mul(M.a, s), C.mul(M.b, s), C.mul(M.c, s), C.mul(M.d, s)};
        }
    }
    throw std::invalid_argument("mat_canon: zero matrix");
}

bool mat_eq_proj(const TowerCore& C, const Mat2& M, const Mat2& N) {
    Mat2 m = mat_canon(C, M), n = mat_canon(C, N);
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
}

Mat2 mat_identity(const TowerCore& C, u32 core_deg) {
    return Mat2{C.one(core_deg), C.zero(core_deg), C.zero(core_deg), C.one(core_deg)};
}

Mat2 mat_embed(const TowerCore& C, const Mat2& M, u32 core_deg) {
    return Mat2{C.embed(M.a, core_deg), C.embed(M.b, core_deg),
                C.embed(M.c, core_deg), C.embed(M.d, core_deg)};
}

// ---------------------------------------------------------------- actions

HomPoly act_on_poly(const TowerView& V, const Mat2& M, const HomPoly& f) {
    if (hp_is_zero(V, f)) throw std::invalid_argument("act_on_poly: zero polynomial");
    return hp_monicize(V, hp_substitute(V, M, f));
}

HomPoly hp_substitute(const TowerView& V, const Mat2& M, const HomPoly& f) {
    u32 n = f.degree();
    // substitute x' = d x - b y, y' = -c x + a y; build power tables of the
    // two linear forms (coefficient vectors, y-degree-major ascending in x)
    std::vector<std::vector<FieldElem>> px(n + 1), py(n + 1);
    std::vector<FieldElem> l1{V.neg(M.b), M.d};   // x' = (coeff of y, coeff of x)
    std::vector<FieldElem> l2{M.a, V.neg(M.c)};   // y'
    px[0] = {V.one()};
    py[0] = {V.one()};
    auto step = [&](const std::vector<FieldElem>& prev, const std::vector<FieldElem>& l) {
        std::vector<FieldElem> r(prev.size() + 1, V.zero());
        for (size_t t = 0; t < prev.size(); ++t) {
            r[t] = V.add(r[t], V.mul(prev[t], l[0]));
            r[t + 1] = V.add(r[t + 1], V.mul(prev[t], l[1]));
        }
        return r;
    };
    for (u32 i = 1; i <= n; ++i) {
        px[i] = step(px[i - 1], l1);
        py[i] = step(py[i - 1], l2);
    }
    HomPoly out = hp_zero(V, n);
    for (u32 i = 0; i <= n; ++i) {
        if (V.is_zero(f.c[i])) continue;
        const auto& A = px[i];
        const auto& B = py[n - i];
        for (size_t s = 0; s < A.size(); ++s) {
            if (V.is_zero(A[s])) continue;
            FieldElem cs = V.mul(f.c[i], A[s]);
            for (size_t t = 0; t < B.size(); ++t)
                out.c[s + t] = V.add(out.c[s + t], V.mul(cs, B[t]));
        }
    }
    return out;
}

ProjPoint act_on_point(const TowerCore& C, const Mat2& M, const ProjPoint& P) {
    u32 d = M.a.deg();
    if (P.inf) {
        if (C.is_zero(M.c)) return ProjPoint{true, C.zero(d)};
        return ProjPoint{false, C.div(M.a, M.c)};
    }
    FieldElem num = C.add(C.mul(M.a, P.alpha), M.b);
    FieldElem den = C.add(C.mul(M.c, P.alpha), M.d);
    if (C.is_zero(den)) return ProjPoint{true, C.zero(d)};
    return ProjPoint{false, C.div(num, den)};
}

Place act_on_place(const TowerView& V, const Mat2& M, const Place& P) {
    Place r;
    r.deg = P.deg;
    r.poly = act_on_poly(V, M, P.poly);
    u32 cd = P.deg == 1 ? V.s() : V.core_deg(P.deg);
    Mat2 Me = mat_embed(V.core(), M, cd);
    r.root = act_on_point(V.core(), Me, P.root);
    return r;
}

Divisor act_on_divisor(const TowerView& V, const Mat2& M, const Divisor& D) {
    Divisor r;
    for (auto& [pl, m] : D.parts) r.parts.emplace_back(act_on_place(V, M, pl), m);
    divisor_sort(V, r);
    return r;
}

// ---------------------------------------------------------------- places

std::vector<ProjPoint> place_points(const TowerView& V, const Place& P) {
    if (P.deg == 1) return {P.root};
    std::vector<ProjPoint> out;
    FieldElem a = P.root.alpha;
    for (u32 j = 0; j < P.deg; ++j) {
        out.push_back(ProjPoint{false, a});
        if (j + 1 < P.deg) a = V.frobenius(a, 1);
    }
    return out;
}

int place_cmp(const TowerView& V, const Place& A, const Place& B) {
    if (A.deg != B.deg) return A.deg < B.deg ? -1 : 1;
    return poly_cmp(V, A.poly, B.poly);
}

bool place_eq(const TowerView& V, const Place& A, const Place& B) {
    return place_cmp(V, A, B) == 0;
}

Place place_from_point(const TowerView& V, const ProjPoint& P) {
    Place r;
    r.deg = 1;
    r.root = P;
    if (P.inf) {
        r.poly = hp_y(V);
    } else {
        r.poly = hp_zero(V, 1);
        r.poly.c[1] = V.one();
        r.poly.c[0] = V.neg(P.alpha);
    }
    return r;
}

int point_cmp(const TowerView& V, const ProjPoint& A, const ProjPoint& B) {
    if (A.inf != B.inf) return A.inf ? -1 : 1;  // infinity first
    if (A.inf) return 0;
    return V.cmp(A.alpha, B.alpha);
}

// ---------------------------------------------------------------- divisors

void divisor_sort(const TowerView& V, Divisor& D) {
    std::sort(D.parts.begin(), D.parts.end(),
              [&](const std::pair<Place, u32>& x, const std::pair<Place, u32>& y) {
                  return place_cmp(V, x.first, y.first) < 0;
              });
}

bool divisor_eq(const TowerView& V, const Divisor& A, const Divisor& B) {
    if (A.parts.size() != B.parts.size()) return false;
    for (size_t i = 0; i < A.parts.size(); ++i) {
        if (A.parts[i].second != B.parts[i].second) return false;
        if (!place_eq(V, A.parts[i].first, B.parts[i].first)) return false;
    }
    return true;
}

Divisor divisor_support(const Divisor& D) {
    Divisor r;
    for (auto& [pl, m] : D.parts) r.parts.emplace_back(pl, 1);
    return r;
}

GaloisType galois_type_of_support(const Divisor& D) {
    GaloisType t;
    for (auto& [pl, m] : D.parts) {
        (void)m;
        t.m.push_back(pl.deg);
    }
    std::sort(t.m.rbegin(), t.m.rend());
    return t;
}

std::pair<GaloisType, Divisor> galois_type_and_support(const TowerView& V, const Divisor& D) {
    (void)V;
    Divisor s = divisor_support(D);
    return {galois_type_of_support(s), s};
}

HomPoly poly_of_divisor(const TowerView& V, const Divisor& D) {
    HomPoly r;
    r.c = {V.one()};
    for (auto& [pl, m] : D.parts)
        for (u32 t = 0; t < m; ++t) r = hp_mul(V, r, pl.poly);
    return hp_monicize(V, r);
}

Divisor divisor_of_poly(const TowerView& V, const HomPoly& f, u64 seed) {
    FactorList fl = irreducible_factors(V, f, seed);
    Divisor D;
    if (fl.y_mult > 0) {
        ProjPoint inf{true, V.zero()};
        D.parts.emplace_back(place_from_point(V, inf), fl.y_mult);
    }
    for (auto& [g, m] : fl.factors)
        D.parts.emplace_back(place_from_poly(V, g, seed), m);
    divisor_sort(V, D);
    return D;
}

}  // namespace p1enum
