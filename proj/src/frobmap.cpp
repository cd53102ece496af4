#include "p1enum/frobmap.hpp"

#include "p1enum/polyfactor.hpp"
#include "p1enum/unipoly.hpp"

#include <algorithm>
#include <numeric>

namespace p1enum {

namespace {

LevelOps base_ops(const TowerView& V) {
    return LevelOps{&V.core(), V.s(), V.p(), V.s(), V.q()};
}

// univariate coefficients of the homogeneous f (low to high, trimmed)
up::PV<LevelOps> univ(const TowerView& V, const HomPoly& f) {
    up::PV<LevelOps> u(f.c.begin(), f.c.end());
    LevelOps K = base_ops(V);
    up::trim(K, u);
    return u;
}

HomPoly hp_shift_x(const TowerView& V, const HomPoly& f) {
    // multiply by x
    HomPoly r = hp_zero(V, f.degree() + 1);
    for (size_t i = 0; i < f.c.size(); ++i) r.c[i + 1] = f.c[i];
    return r;
}

HomPoly hp_shift_y(const TowerView& V, const HomPoly& f) {
    // multiply by y
    HomPoly r = hp_zero(V, f.degree() + 1);
    for (size_t i = 0; i < f.c.size(); ++i) r.c[i] = f.c[i];
    return r;
}

// exact division of homogeneous polynomials
HomPoly hp_exact_div(const TowerView& V, const HomPoly& f, const HomPoly& g) {
    LevelOps K = base_ops(V);
    u32 vf = y_valuation(V, f), vg = y_valuation(V, g);
    if (vg > vf) throw std::logic_error("hp_exact_div: y-valuation");
    auto uf = univ(V, f), ug = univ(V, g);
    up::PV<LevelOps> q, r;
    up::divrem(K, uf, ug, q, r);
    if (!r.empty()) throw std::logic_error("hp_exact_div: not exact");
    u32 n = f.degree() - g.degree();
    HomPoly out = hp_zero(V, n);
    for (size_t i = 0; i < q.size(); ++i) out.c[i] = q[i];
    return out;
}

}  // namespace

RationalMap make_map_coprime(const TowerView& V, HomPoly g, HomPoly h) {
    if (hp_is_zero(V, h)) throw std::invalid_argument("make_map: zero denominator");
    if (g.degree() != h.degree()) throw std::invalid_argument("make_map: degree mismatch");
    int hu = univ_degree(V, h);
    FieldElem s;
    if (hu == 0) {
        // denominator is a pure y-power: make the numerator monic
        int gu = univ_degree(V, g);
        if (gu < 0) throw std::invalid_argument("make_map: zero numerator");
        s = V.inv(g.c[size_t(gu)]);
    } else {
        s = V.inv(h.c[size_t(hu)]);
    }
    RationalMap F;
    F.num = hp_scale(V, g, s);
    F.den = hp_scale(V, h, s);
    return F;
}

RationalMap make_map(const TowerView& V, const HomPoly& g, const HomPoly& h) {
    if (hp_is_zero(V, h) || hp_is_zero(V, g))
        throw std::invalid_argument("make_map: zero component");
    LevelOps K = base_ops(V);
    u32 vg = y_valuation(V, g), vh = y_valuation(V, h);
    u32 vc = std::min(vg, vh);
    auto ug = univ(V, g), uh = univ(V, h);
    auto d = up::gcd(K, ug, uh);
    // common factor: y^vc * homogenize(d), placed at degree vc + deg d
    HomPoly common = hp_zero(V, vc + u32(up::degree(d)));
    for (size_t i = 0; i < d.size(); ++i) common.c[i + 0] = d[i];
    // homogenize(d) has univ coeffs d at x^i y^(deg-i), then times y^vc:
    // coefficient of x^i stays d[i] in the larger-degree polynomial
    HomPoly g2 = hp_exact_div(V, g, common);
    HomPoly h2 = hp_exact_div(V, h, common);
    return make_map_coprime(V, g2, h2);
}

bool map_eq(const TowerView& V, const RationalMap& F, const RationalMap& G) {
    return hp_eq(V, F.num, G.num) && hp_eq(V, F.den, G.den);
}

std::vector<u32> map_key(const TowerView& V, const RationalMap& F) {
    std::vector<u32> key{F.degree()};
    auto kn = poly_key(V, F.num);
    auto kd = poly_key(V, F.den);
    key.insert(key.end(), kn.begin(), kn.end());
    key.insert(key.end(), kd.begin(), kd.end());
    return key;
}

int map_cmp(const TowerView& V, const RationalMap& F, const RationalMap& G) {
    if (F.degree() != G.degree()) return F.degree() < G.degree() ? -1 : 1;
    auto a = map_key(V, F), b = map_key(V, G);
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

bool map_is_identity(const TowerView& V, const RationalMap& F) {
    return F.degree() == 1 && hp_eq(V, F.num, hp_x(V)) && hp_eq(V, F.den, hp_y(V));
}

ProjPoint map_eval(const TowerView& V, const RationalMap& F, const ProjPoint& P) {
    const TowerCore& C = V.core();
    u32 cd = P.alpha.deg();
    auto eval_hp = [&](const HomPoly& f, const FieldElem& xv, const FieldElem& yv) {
        FieldElem acc = C.zero(cd);
        FieldElem xp = C.one(cd);
        std::vector<FieldElem> ypows(f.c.size());
        FieldElem yp = C.one(cd);
        for (size_t i = f.c.size(); i-- > 0;) {
            ypows[i] = yp;
            yp = C.mul(yp, yv);
        }
        for (size_t i = 0; i < f.c.size(); ++i) {
            FieldElem term = C.mul(C.embed(f.c[i], cd), C.mul(xp, ypows[i]));
            acc = C.add(acc, term);
            xp = C.mul(xp, xv);
        }
        return acc;
    };
    FieldElem xv = P.inf ? C.one(cd) : P.alpha;
    FieldElem yv = P.inf ? C.zero(cd) : C.one(cd);
    FieldElem nv = eval_hp(F.num, xv, yv);
    FieldElem dv = eval_hp(F.den, xv, yv);
    if (C.is_zero(dv)) {
        if (C.is_zero(nv)) throw std::logic_error("map_eval: base point");
        return ProjPoint{true, C.zero(cd)};
    }
    return ProjPoint{false, C.div(nv, dv)};
}

RationalMap act_on_map(const TowerView& V, const Mat2& M, const RationalMap& F) {
    HomPoly gs = hp_substitute(V, M, F.num);
    HomPoly hs = hp_substitute(V, M, F.den);
    u32 n = gs.degree();
    HomPoly num = hp_zero(V, n), den = hp_zero(V, n);
    for (size_t i = 0; i <= n; ++i) {
        num.c[i] = V.add(V.mul(M.a, gs.c[i]), V.mul(M.b, hs.c[i]));
        den.c[i] = V.add(V.mul(M.c, gs.c[i]), V.mul(M.d, hs.c[i]));
    }
    // conjugation preserves coprimality but can drop the visible degree
    return make_map(V, num, den);
}

RationalMap frobenius_function(const TowerView& V, const HomPoly& f) {
    u32 n = f.degree();
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("frobenius_function: degree must be odd and >= 3");
    if (!is_irreducible(V, f)) throw std::invalid_argument("frobenius_function: reducible input");
    LevelOps K = base_ops(V);
    u32 r = (n - 1) / 2;
    auto uf = univ(V, f);
    auto pis = up::frobenius_powers(K, uf, 1);
    const auto& xq = pis[1];  // x^q mod f, degree < n
    // columns: x^j (j <= r) and -(x^q * x^j mod f) (j <= r);
    // find a kernel vector of the n x (n+1) coefficient matrix
    u32 cols = n + 1;
    std::vector<std::vector<FieldElem>> A(n, std::vector<FieldElem>(cols, V.zero()));
    for (u32 j = 0; j <= r; ++j) A[j][j] = V.one();
    up::PV<LevelOps> w = xq;
    for (u32 j = 0; j <= r; ++j) {
        for (size_t i = 0; i < w.size(); ++i) A[i][r + 1 + j] = V.neg(w[i]);
        if (j < r) {
            // w <- w * x mod f
            w.insert(w.begin(), V.zero());
            w = up::rem(K, w, uf);
        }
    }
    // Gaussian elimination over the base field
    std::vector<int> pivot_of_col(cols, -1);
    u32 rank = 0;
    for (u32 c = 0; c < cols && rank < n; ++c) {
        u32 rr = rank;
        while (rr < n && V.is_zero(A[rr][c])) ++rr;
        if (rr == n) continue;
        std::swap(A[rank], A[rr]);
        FieldElem iv = V.inv(A[rank][c]);
        for (u32 j = 0; j < cols; ++j) A[rank][j] = V.mul(A[rank][j], iv);
        for (u32 i = 0; i < n; ++i) {
            if (i != rank && !V.is_zero(A[i][c])) {
                FieldElem fmul = A[i][c];
                for (u32 j = 0; j < cols; ++j)
                    A[i][j] = V.sub(A[i][j], V.mul(fmul, A[rank][j]));
            }
        }
        pivot_of_col[c] = int(rank);
        ++rank;
    }
    // kernel vectors from free columns; pick one whose denominator part is
    // nonzero (one always exists)
    for (u32 fc = 0; fc < cols; ++fc) {
        if (pivot_of_col[fc] >= 0) continue;
        std::vector<FieldElem> v(cols, V.zero());
        v[fc] = V.one();
        for (u32 c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = V.neg(A[size_t(pivot_of_col[c])][fc]);
        HomPoly g = hp_zero(V, r), h = hp_zero(V, r);
        bool hz = true, gz = true;
        for (u32 j = 0; j <= r; ++j) {
            g.c[j] = v[j];
            h.c[j] = v[r + 1 + j];
            if (!V.is_zero(g.c[j])) gz = false;
            if (!V.is_zero(h.c[j])) hz = false;
        }
        if (hz || gz) continue;
        return make_map(V, g, h);
    }
    throw std::logic_error("frobenius_function: no usable kernel vector");
}

HomPoly fixed_point_poly(const TowerView& V, const RationalMap& F) {
    HomPoly xh = hp_shift_x(V, F.den);
    HomPoly yg = hp_shift_y(V, F.num);
    return hp_sub(V, xh, yg);
}

Divisor fixed_point_divisor(const TowerView& V, const RationalMap& F, u64 seed) {
    if (map_is_identity(V, F))
        throw std::invalid_argument("fixed_point_divisor: identity map");
    HomPoly w = fixed_point_poly(V, F);
    return divisor_of_poly(V, hp_monicize(V, w), seed);
}

// ---------------------------------------------------------------- domains

FnDomain fn_domain(const TowerView& V, const Divisor& D) {
    if (D.degree() < 2) throw std::invalid_argument("fn_domain: divisor degree < 2");
    FnDomain dom;
    dom.p = poly_of_divisor(V, D);
    dom.r = D.degree() - 1;
    dom.inf_in_support = false;
    for (auto& [pl, m] : D.parts) {
        (void)m;
        if (pl.deg == 1 && pl.root.inf) dom.inf_in_support = true;
    }
    u64 q = V.q();
    if (!dom.inf_in_support) {
        // h = x^r + lower coefficients: q^r codes
        u64 space = 1;
        for (u32 i = 0; i < dom.r; ++i) space *= q;
        dom.code_space = space;
    } else {
        // h = y * h', h' any monic homogeneous of degree r-1
        // (sum_{k<=r-1} q^k possibilities), paired with c in F_q^*
        u64 hcount = 0, qk = 1;
        for (u32 k = 0; k + 1 <= dom.r; ++k) {
            hcount += qk;
            qk *= q;
        }
        dom.code_space = hcount * (q - 1);
    }
    return dom;
}

std::optional<RationalMap> fn_at(const TowerView& V, const FnDomain& dom, u64 code) {
    LevelOps K = base_ops(V);
    u64 q = V.q();
    u32 r = dom.r;
    if (code >= dom.code_space) throw std::invalid_argument("fn_at: code out of range");
    if (!dom.inf_in_support) {
        HomPoly h = hp_zero(V, r);
        h.c[r] = V.one();
        u64 v = code;
        for (u32 i = 0; i < r; ++i) {
            h.c[i] = V.base_from_index(v % q);
            v /= q;
        }
        // h must be coprime to p (coprimality to y is automatic here)
        auto d = up::gcd(K, univ(V, h), univ(V, dom.p));
        if (up::degree(d) != 0) return std::nullopt;
        // g = (xh - p) / y
        HomPoly num = hp_sub(V, hp_shift_x(V, h), dom.p);
        HomPoly g = hp_zero(V, r);
        for (u32 i = 0; i <= r; ++i) g.c[i] = num.c[i];  // divide by y
        if (!V.is_zero(num.c[r + 1])) throw std::logic_error("fn_at: monic mismatch");
        return make_map_coprime(V, g, h);
    }
    // decode h' (monic homogeneous of degree r-1) and c
    u64 hcode = code / (q - 1);
    u64 cidx = code % (q - 1);
    u32 k = 0;
    u64 qk = 1;
    while (hcode >= qk) {
        hcode -= qk;
        qk *= q;
        ++k;
    }
    HomPoly hp = hp_zero(V, r - 1);
    hp.c[k] = V.one();
    for (u32 i = 0; i < k; ++i) {
        hp.c[i] = V.base_from_index(hcode % q);
        hcode /= q;
    }
    HomPoly h = hp_shift_y(V, hp);
    FieldElem c = V.base_from_index(1 + cidx);
    // gcd(h, p) must be exactly y
    u32 vh = 1 + y_valuation(V, hp);
    u32 vp = y_valuation(V, dom.p);
    if (std::min(vh, vp) != 1) return std::nullopt;
    auto d = up::gcd(K, univ(V, h), univ(V, dom.p));
    if (up::degree(d) != 0) return std::nullopt;
    // c p != x h mod y^2: compare coefficients of x^(r+1) and x^r y
    FieldElem cp1 = V.mul(c, dom.p.c[r + 1]);
    FieldElem cp2 = V.mul(c, dom.p.c[r]);
    const FieldElem& xh1 = h.c[r];
    FieldElem xh2 = r >= 1 ? h.c[r - 1] : V.zero();
    if (cp1 == xh1 && cp2 == xh2) return std::nullopt;
    // g = (xh - cp) / y
    HomPoly num = hp_sub(V, hp_shift_x(V, h), hp_scale(V, dom.p, c));
    HomPoly g = hp_zero(V, r);
    for (u32 i = 0; i <= r; ++i) g.c[i] = num.c[i];
    if (!V.is_zero(num.c[r + 1])) throw std::logic_error("fn_at: top coefficient");
    return make_map_coprime(V, g, h);
}

std::vector<RationalMap> functions_with_fixed_divisor(const TowerView& V, const Divisor& D) {
    FnDomain dom = fn_domain(V, D);
    std::vector<RationalMap> out;
    for (u64 code = 0; code < dom.code_space; ++code) {
        auto F = fn_at(V, dom, code);
        if (F) out.push_back(*F);
    }
    return out;
}

RationalMap iterate_map(const TowerView& V, const RationalMap& F, u32 n) {
    if (n == 0) throw std::invalid_argument("iterate_map: n must be positive");
    RationalMap cur = F;
    for (u32 step = 1; step < n; ++step) {
        // compose F with cur: numerator g(G, H), denominator h(G, H)
        u32 r = F.degree();
        std::vector<HomPoly> gp(r + 1), hp(r + 1);
        gp[0] = hp[0] = HomPoly{{V.one()}};
        for (u32 i = 1; i <= r; ++i) {
            gp[i] = hp_mul_fast(V, gp[i - 1], cur.num);
            hp[i] = hp_mul_fast(V, hp[i - 1], cur.den);
        }
        u32 nd = r * cur.degree();
        HomPoly num = hp_zero(V, nd), den = hp_zero(V, nd);
        for (u32 i = 0; i <= r; ++i) {
            HomPoly term = hp_mul_fast(V, gp[i], hp[r - i]);
            if (!V.is_zero(F.num.c[i])) {
                HomPoly t = hp_scale(V, term, F.num.c[i]);
                num = hp_add(V, num, t);
            }
            if (!V.is_zero(F.den.c[i])) {
                HomPoly t = hp_scale(V, term, F.den.c[i]);
                den = hp_add(V, den, t);
            }
        }
        // compositions of coprime pairs are coprime: a common irreducible
        // factor would force a common projective root of (g, h)
        cur = make_map_coprime(V, num, den);
    }
    return cur;
}

std::vector<HomPoly> ff1_representatives(const TowerView& V, u32 n) {
    if (n <= 1 || n % 2 == 0)
        throw std::invalid_argument("ff1_representatives: n must be odd and > 1");
    const TowerCore& C = V.core();
    u64 q = V.q();
    std::vector<HomPoly> out;
    auto coprime_exponents = [&](u32 nn) {
        std::vector<u32> is;
        for (u32 i = 1; 2 * i < nn; ++i)
            if (std::gcd(i, nn) == 1) is.push_back(i);
        return is;
    };
    if (n == C.p()) {
        // x^n - x y^(n-1) - t y^n, t of nonzero absolute trace
        FieldElem t = V.trace_one_elem();
        HomPoly f = hp_zero(V, n);
        f.c[n] = V.one();
        f.c[1] = V.neg(V.one());
        f.c[0] = V.neg(t);
        out.push_back(f);
        return out;
    }
    if ((q - 1) % n == 0) {
        FieldElem zeta = V.generator(1);
        for (u32 i : coprime_exponents(n)) {
            HomPoly f = hp_zero(V, n);
            f.c[n] = V.one();
            f.c[0] = V.neg(V.pow(zeta, i));
            out.push_back(f);
        }
        return out;
    }
    if ((q + 1) % n == 0) {
        if (V.max_level() < 2 * n)
            throw std::runtime_error("ff1_representatives: tower level 2n required");
        u32 cd = V.core_deg(2 * n);
        FieldElem s = C.embed(V.omega(), cd);
        FieldElem sq = C.frob_p(s, V.s());
        FieldElem xi = V.element_of_order(2 * n, u64(n) * (q + 1));
        for (u32 i : coprime_exponents(n)) {
            FieldElem xp = C.pow(xi, i);
            FieldElem den = C.add(xp, C.one(cd));
            if (C.is_zero(den)) throw std::logic_error("ff1: degenerate xi power");
            FieldElem alpha = C.div(C.add(C.mul(s, xp), sq), den);
            auto mp = V.min_poly(alpha);
            if (mp.size() != n + 1) throw std::logic_error("ff1: wrong degree");
            HomPoly f = hp_zero(V, n);
            for (size_t j = 0; j < mp.size(); ++j) f.c[j] = mp[j];
            out.push_back(f);
        }
        return out;
    }
    return out;
}

bool is_frobenius_function_for(const TowerView& V, const RationalMap& F, const HomPoly& f) {
    u32 n = f.degree();
    if (n % 2 == 0) throw std::invalid_argument("is_frobenius_function_for: even degree");
    const TowerCore& C = V.core();
    u32 s = V.s();
    const TowerLevel& L = C.level(s);
    if (univ_degree(V, f) != int(n)) return false;  // infinity is never a root here
    if (L.zech) {
        ZechOps K{L.zech.get(), C.p(), s, L.zech->q};
        u32 p = C.p();
        auto pack_hp = [&](const HomPoly& h) {
            std::vector<u32> u(h.c.size());
            for (size_t i = 0; i < h.c.size(); ++i) {
                u32 v = 0;
                for (u32 j = h.c[i].deg(); j-- > 0;) v = v * p + h.c[i].c[j];
                u[i] = v;
            }
            up::trim(K, u);
            return u;
        };
        auto uf = pack_hp(f);
        auto pis = up::frobenius_powers(K, uf, 1);
        auto lhs = up::rem(K, up::mul(K, pis[1], pack_hp(F.den)), uf);
        auto rhs = up::rem(K, pack_hp(F.num), uf);
        return up::equal(K, lhs, rhs);
    }
    LevelOps K = base_ops(V);
    auto uf = univ(V, f);
    auto pis = up::frobenius_powers(K, uf, 1);
    auto lhs = up::rem(K, up::mul(K, pis[1], univ(V, F.den)), uf);
    auto rhs = up::rem(K, univ(V, F.num), uf);
    return up::equal(K, lhs, rhs);
}

}  // namespace p1enum
