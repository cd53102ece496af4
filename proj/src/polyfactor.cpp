#include "p1enum/polyfactor.hpp"

#include "p1enum/unipoly.hpp"

#include <algorithm>

namespace p1enum {

namespace {

u32 pack_elem(u32 p, const FieldElem& e) {
    u32 v = 0;
    for (u32 i = e.deg(); i-- > 0;) v = v * p + e.c[i];
    return v;
}

FieldElem unpack_elem(u32 p, u32 d, u32 v) {
    std::vector<u32> c(d);
    for (u32 i = 0; i < d; ++i) { c[i] = v % p; v /= p; }
    return FieldElem(std::move(c));
}

bool level_has_zech(const TowerCore& C, u32 d) {
    return C.level(d).zech != nullptr;
}

ZechOps zech_ops(const TowerCore& C, u32 d) {
    const TowerLevel& L = C.level(d);
    return ZechOps{L.zech.get(), C.p(), d, L.zech->q};
}

LevelOps level_ops(const TowerCore& C, u32 d) {
    unsigned __int128 q = 1;
    bool fits = true;
    for (u32 i = 0; i < d; ++i) {
        q *= C.p();
        if (q > ((unsigned __int128)1 << 62)) { fits = false; break; }
    }
    return LevelOps{&C, d, C.p(), d, fits ? u64(q) : 0};
}

// univariate image of f over the base field: coefficients c[0..univdeg]
template <class ToE>
auto univ_of(const TowerView& V, const HomPoly& f, ToE to_e)
    -> std::vector<decltype(to_e(f.c[0]))> {
    int ud = univ_degree(V, f);
    std::vector<decltype(to_e(f.c[0]))> u;
    for (int i = 0; i <= ud; ++i) u.push_back(to_e(f.c[size_t(i)]));
    return u;
}

template <class FromE, class E>
HomPoly homogenize(const TowerView& V, const std::vector<E>& u, FromE from_e) {
    HomPoly f = hp_zero(V, u32(u.size()) - 1);
    for (size_t i = 0; i < u.size(); ++i) f.c[i] = from_e(u[i]);
    return f;
}

template <class Ops, class ToE, class FromE>
FactorList factor_impl(const TowerView& V, const Ops& K, ToE to_e, FromE from_e,
                       const HomPoly& f, u64 seed) {
    FactorList out;
    int ud = univ_degree(V, f);
    if (ud < 0) throw std::invalid_argument("irreducible_factors: zero polynomial");
    out.unit = f.c[size_t(ud)];
    out.y_mult = f.degree() - u32(ud);
    auto u = univ_of(V, f, to_e);
    if (ud >= 1) {
        auto fs = up::factor(K, u, seed);
        for (auto& [g, m] : fs) out.factors.emplace_back(homogenize(V, g, from_e), m);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [&](const auto& A, const auto& B) { return poly_cmp(V, A.first, B.first) < 0; });
    return out;
}

template <class Ops, class ToE, class FromE>
std::vector<HomPoly> fod_impl(const TowerView& V, const Ops& K, ToE to_e, FromE from_e,
                              const HomPoly& f, u32 n, u64 seed) {
    int ud = univ_degree(V, f);
    if (ud < 0) throw std::invalid_argument("factors_of_degree: zero polynomial");
    std::vector<HomPoly> out;
    if (n == 0) return out;
    if (n == 1 && f.degree() > u32(ud)) out.push_back(hp_y(V));
    if (u32(ud) >= n) {
        auto u = univ_of(V, f, to_e);
        auto fs = up::factors_of_degree(K, u, n, seed);
        for (auto& g : fs) out.push_back(homogenize(V, g, from_e));
    }
    std::sort(out.begin(), out.end(),
              [&](const HomPoly& A, const HomPoly& B) { return poly_cmp(V, A, B) < 0; });
    return out;
}

}  // namespace

u64 seed_for_poly(const TowerView& V, u64 master, const HomPoly& f) {
    u64 h = master ^ 0x9d3f5e8c1a2b4c6dull;
    for (u32 k : poly_key(V, f)) h = hash_combine_u64(h, k);
    return h;
}

FactorList irreducible_factors(const TowerView& V, const HomPoly& f, u64 seed) {
    const TowerCore& C = V.core();
    u32 s = V.s();
    if (level_has_zech(C, s)) {
        ZechOps K = zech_ops(C, s);
        u32 p = C.p();
        auto to_e = [&](const FieldElem& e) { return pack_elem(p, e); };
        auto from_e = [&](u32 v) { return unpack_elem(p, s, v); };
        return factor_impl(V, K, to_e, from_e, f, seed);
    }
    LevelOps K = level_ops(C, s);
    auto id = [](const FieldElem& e) { return e; };
    return factor_impl(V, K, id, id, f, seed);
}

std::vector<HomPoly> factors_of_degree(const TowerView& V, const HomPoly& f, u32 n, u64 seed) {
    const TowerCore& C = V.core();
    u32 s = V.s();
    if (level_has_zech(C, s)) {
        ZechOps K = zech_ops(C, s);
        u32 p = C.p();
        auto to_e = [&](const FieldElem& e) { return pack_elem(p, e); };
        auto from_e = [&](u32 v) { return unpack_elem(p, s, v); };
        return fod_impl(V, K, to_e, from_e, f, n, seed);
    }
    LevelOps K = level_ops(C, s);
    auto id = [](const FieldElem& e) { return e; };
    return fod_impl(V, K, id, id, f, n, seed);
}

bool is_irreducible(const TowerView& V, const HomPoly& f) {
    int ud = univ_degree(V, f);
    if (ud < 0) throw std::invalid_argument("is_irreducible: zero polynomial");
    u32 ym = f.degree() - u32(ud);
    if (ym > 0) return ym == 1 && ud == 0;  // y itself
    if (ud == 0) return false;
    if (ud == 1) return true;
    const TowerCore& C = V.core();
    u32 s = V.s();
    if (level_has_zech(C, s)) {
        ZechOps K = zech_ops(C, s);
        u32 p = C.p();
        auto u = univ_of(V, f, [&](const FieldElem& e) { return pack_elem(p, e); });
        return up::is_irreducible(K, u);
    }
    LevelOps K = level_ops(C, s);
    auto u = univ_of(V, f, [](const FieldElem& e) { return e; });
    return up::is_irreducible(K, u);
}

std::vector<FieldElem> roots_in_level(const TowerView& V, const HomPoly& f, u32 d, u64 seed) {
    const TowerCore& C = V.core();
    u32 cd = V.core_deg(d);
    int ud = univ_degree(V, f);
    if (ud < 0) throw std::invalid_argument("roots_in_level: zero polynomial");
    std::vector<FieldElem> out;
    if (ud == 0) return out;
    // lift coefficients into the level-d field
    std::vector<FieldElem> lifted;
    for (int i = 0; i <= ud; ++i) lifted.push_back(C.embed(f.c[size_t(i)], cd));
    if (level_has_zech(C, cd)) {
        ZechOps K = zech_ops(C, cd);
        u32 p = C.p();
        std::vector<u32> u;
        for (auto& e : lifted) u.push_back(pack_elem(p, e));
        auto rs = up::roots(K, u, seed);
        for (u32 r : rs) out.push_back(unpack_elem(p, cd, r));
    } else {
        LevelOps K = level_ops(C, cd);
        out = up::roots(K, lifted, seed);
    }
    std::sort(out.begin(), out.end(), [&](const FieldElem& a, const FieldElem& b) {
        return V.element_key(a) < V.element_key(b);
    });
    return out;
}

Place place_from_poly(const TowerView& V, const HomPoly& f, u64 seed) {
    u32 n = f.degree();
    int ud = univ_degree(V, f);
    if (ud < 0) throw std::invalid_argument("place_from_poly: zero polynomial");
    Place P;
    P.deg = n;
    P.poly = f;
    if (n == 1) {
        if (ud == 0) {
            P.root = ProjPoint{true, V.zero()};
        } else {
            P.root = ProjPoint{false, V.neg(f.c[0])};
        }
        return P;
    }
    auto rs = roots_in_level(V, f, n, seed_for_poly(V, seed, f));
    if (rs.size() != n)
        throw std::invalid_argument("place_from_poly: polynomial is not irreducible");
    P.root = ProjPoint{false, rs[0]};
    return P;
}

HomPoly hp_mul_fast(const TowerView& V, const HomPoly& f, const HomPoly& g) {
    const TowerCore& C = V.core();
    u32 s = V.s();
    if (!level_has_zech(C, s)) return hp_mul(V, f, g);
    ZechOps K = zech_ops(C, s);
    u32 p = C.p();
    std::vector<u32> a(f.c.size()), b(g.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) a[i] = pack_elem(p, f.c[i]);
    for (size_t i = 0; i < g.c.size(); ++i) b[i] = pack_elem(p, g.c[i]);
    std::vector<u32> r = up::mul(K, a, b);
    r.resize(f.c.size() + g.c.size() - 1, 0);
    HomPoly out = hp_zero(V, f.degree() + g.degree());
    for (size_t i = 0; i < r.size(); ++i) out.c[i] = unpack_elem(p, s, r[i]);
    return out;
}

}  // namespace p1enum
