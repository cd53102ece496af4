#ifndef P1ENUM_UNIPOLY_HPP
#define P1ENUM_UNIPOLY_HPP

// Univariate polynomial engine over a finite field, templated on an
// arithmetic adapter.  Three adapters are used: packed table-based
// arithmetic for small fields, generic tower-level arithmetic, and
// synthetic F_p[w]/mu arithmetic (used while the tower itself is being
// built).  Polynomials are coefficient vectors, low to high, trimmed.

#include "p1enum/fpx.hpp"
#include "p1enum/gfield.hpp"

#include <algorithm>
#include <cassert>

namespace p1enum {

// splitmix64; all probabilistic routines derive their randomness from a
// caller seed through this.
struct SplitMix64 {
    u64 s;
    explicit SplitMix64(u64 seed) : s(seed) {}
    u64 next() {
        u64 z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

inline u64 hash_combine_u64(u64 h, u64 v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

/// Packed arithmetic through a ZechTable (p^d <= 2^16).
struct ZechOps {
    using Elem = u32;
    const ZechTable* Z;
    u32 p;
    u32 s;   // q = p^s
    u64 q;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem add(Elem a, Elem b) const { return Z->add(a, b); }
    Elem sub(Elem a, Elem b) const { return Z->sub(a, b); }
    Elem neg(Elem a) const { return Z->neg(a); }
    Elem mul(Elem a, Elem b) const { return Z->mul(a, b); }
    Elem inv(Elem a) const { return Z->inv(a); }
    Elem frob_p(Elem a) const { return Z->pow(a, p); }
    Elem random(SplitMix64& rng) const { return u32(rng.next() % q); }
};

/// Generic arithmetic at one tower level.
struct LevelOps {
    using Elem = FieldElem;
    const TowerCore* core;
    u32 d;   // level degree over F_p
    u32 p;
    u32 s;   // here s = d, q = p^d
    u64 q;   // 0 if p^d does not fit in 63 bits

    Elem zero() const { return core->zero(d); }
    Elem one() const { return core->one(d); }
    bool is_zero(const Elem& a) const { return core->is_zero(a); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return core->add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return core->sub(a, b); }
    Elem neg(const Elem& a) const { return core->neg(a); }
    Elem mul(const Elem& a, const Elem& b) const { return core->mul(a, b); }
    Elem inv(const Elem& a) const { return core->inv(a); }
    Elem frob_p(const Elem& a) const { return core->frob_p(a); }
    Elem random(SplitMix64& rng) const {
        std::vector<u32> c(d);
        for (u32 i = 0; i < d; ++i) c[i] = u32(rng.next() % p);
        return Elem(std::move(c));
    }
};

/// Arithmetic in F_p[w]/mu for a monic irreducible mu (self-contained copy
/// of a field used during tower construction).
struct SynthOps {
    using Elem = fpx::Poly;
    const Zp* F;
    const fpx::Poly* mod;
    u32 p;
    u32 s;   // deg mu
    u64 q;   // p^s, 0 on overflow

    Elem zero() const { return {}; }
    Elem one() const { return {1}; }
    bool is_zero(const Elem& a) const { return a.empty(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return fpx::add(*F, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return fpx::sub(*F, a, b); }
    Elem neg(const Elem& a) const { return fpx::mul_scalar(*F, a, F->p - 1); }
    Elem mul(const Elem& a, const Elem& b) const { return fpx::rem(*F, fpx::mul(*F, a, b), *mod); }
    Elem inv(const Elem& a) const;
    Elem frob_p(const Elem& a) const { return fpx::powmod(*F, a, p, *mod); }
    Elem random(SplitMix64& rng) const {
        Elem c(s);
        for (u32 i = 0; i < s; ++i) c[i] = u32(rng.next() % p);
        fpx::trim(c);
        return c;
    }
};

inline SynthOps::Elem SynthOps::inv(const Elem& a) const {
    return fpx::invmod(*F, a, *mod);
}

namespace up {

template <class Ops>
using PV = std::vector<typename Ops::Elem>;

template <class Ops>
void trim(const Ops& K, PV<Ops>& a) {
    while (!a.empty() && K.is_zero(a.back())) a.pop_back();
}

template <class E>
int degree(const std::vector<E>& a) { return int(a.size()) - 1; }

template <class Ops>
bool equal(const Ops& K, const PV<Ops>& a, const PV<Ops>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!K.eq(a[i], b[i])) return false;
    return true;
}

template <class Ops>
PV<Ops> add(const Ops& K, const PV<Ops>& a, const PV<Ops>& b) {
    PV<Ops> r(std::max(a.size(), b.size()), K.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = K.add(r[i], b[i]);
    trim(K, r);
    return r;
}

template <class Ops>
PV<Ops> sub(const Ops& K, const PV<Ops>& a, const PV<Ops>& b) {
    PV<Ops> r(std::max(a.size(), b.size()), K.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = K.sub(r[i], b[i]);
    trim(K, r);
    return r;
}

template <class Ops>
PV<Ops> mul_scalar(const Ops& K, const PV<Ops>& a, const typename Ops::Elem& s) {
    if (K.is_zero(s)) return {};
    PV<Ops> r(a.size(), K.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = K.mul(a[i], s);
    trim(K, r);
    return r;
}

template <class Ops>
PV<Ops> mul_school(const Ops& K, const PV<Ops>& a, const PV<Ops>& b) {
    if (a.empty() || b.empty()) return {};
    PV<Ops> r(a.size() + b.size() - 1, K.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (K.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    }
    trim(K, r);
    return r;
}

inline constexpr size_t kKaratsubaThreshold = 48;

template <class Ops>
PV<Ops> mul(const Ops& K, const PV<Ops>& a, const PV<Ops>& b) {
    size_t n = std::min(a.size(), b.size());
    if (n < kKaratsubaThreshold) return mul_school(K, a, b);
    size_t h = std::max(a.size(), b.size()) / 2;
    // a = a0 + x^h a1, b = b0 + x^h b1
    auto slice = [&](const PV<Ops>& v, size_t from, size_t to) {
        PV<Ops> r;
        for (size_t i = from; i < to && i < v.size(); ++i) r.push_back(v[i]);
        trim(K, r);
        return r;
    };
    PV<Ops> a0 = slice(a, 0, h), a1 = slice(a, h, a.size());
    PV<Ops> b0 = slice(b, 0, h), b1 = slice(b, h, b.size());
    PV<Ops> z0 = mul(K, a0, b0);
    PV<Ops> z2 = mul(K, a1, b1);
    PV<Ops> z1 = mul(K, add(K, a0, a1), add(K, b0, b1));
    z1 = sub(K, sub(K, z1, z0), z2);
    PV<Ops> r(a.size() + b.size() - 1, K.zero());
    for (size_t i = 0; i < z0.size(); ++i) r[i] = K.add(r[i], z0[i]);
    for (size_t i = 0; i < z1.size(); ++i) r[i + h] = K.add(r[i + h], z1[i]);
    for (size_t i = 0; i < z2.size(); ++i) r[i + 2 * h] = K.add(r[i + 2 * h], z2[i]);
    trim(K, r);
    return r;
}

template <class Ops>
void make_monic(const Ops& K, PV<Ops>& a) {
    trim(K, a);
    if (a.empty()) return;
    if (K.eq(a.back(), K.one())) return;
    auto s = K.inv(a.back());
    for (auto& c : a) c = K.mul(c, s);
}

template <class Ops>
void divrem(const Ops& K, const PV<Ops>& a, const PV<Ops>& b, PV<Ops>& q, PV<Ops>& r) {
    r = a;
    trim(K, r);
    q.clear();
    int db = degree(b);
    if (db < 0) throw std::invalid_argument("unipoly: division by zero");
    if (degree(r) < db) return;
    q.assign(size_t(degree(r) - db + 1), K.zero());
    auto lead_inv = K.inv(b.back());
    for (int i = degree(r); i >= db; --i) {
        if (K.is_zero(r[size_t(i)])) continue;
        auto c = K.mul(r[size_t(i)], lead_inv);
        q[size_t(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            r[size_t(i - db + j)] = K.sub(r[size_t(i - db + j)], K.mul(c, b[size_t(j)]));
    }
    trim(K, r);
}

template <class Ops>
PV<Ops> rem(const Ops& K, const PV<Ops>& a, const PV<Ops>& b) {
    PV<Ops> q, r;
    divrem(K, a, b, q, r);
    return r;
}

template <class Ops>
PV<Ops> exact_div(const Ops& K, const PV<Ops>& a, const PV<Ops>& b) {
    PV<Ops> q, r;
    divrem(K, a, b, q, r);
    if (!r.empty()) throw std::logic_error("unipoly: division not exact");
    return q;
}

template <class Ops>
PV<Ops> gcd(const Ops& K, PV<Ops> a, PV<Ops> b) {
    trim(K, a);
    trim(K, b);
    while (!b.empty()) {
        PV<Ops> r = rem(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(K, a);
    return a;
}

/// Truncated inverse power series of a (a[0] != 0) to given precision.
template <class Ops>
PV<Ops> inv_series(const Ops& K, const PV<Ops>& a, size_t prec) {
    PV<Ops> g{K.inv(a[0])};
    size_t cur = 1;
    while (cur < prec) {
        cur = std::min(cur * 2, prec);
        PV<Ops> at(a.begin(), a.begin() + std::min(a.size(), cur));
        PV<Ops> t = mul(K, at, g);
        t.resize(cur, K.zero());
        // t = 2 - a*g
        for (auto& c : t) c = K.neg(c);
        t[0] = K.add(t[0], K.add(K.one(), K.one()));
        g = mul(K, g, t);
        g.resize(cur, K.zero());
    }
    trim(K, g);
    g.resize(prec, K.zero());
    return g;
}

/// Newton-based reduction mod a fixed monic modulus; falls back to school
/// division for small sizes.
template <class Ops>
struct Reducer {
    const Ops* K = nullptr;
    PV<Ops> f;       // monic modulus
    PV<Ops> frev;    // reversed f
    PV<Ops> finv;    // inv series of frev
    size_t prec = 0;

    Reducer() = default;
    Reducer(const Ops& ops, PV<Ops> mod) : K(&ops), f(std::move(mod)) {
        frev.assign(f.rbegin(), f.rend());
        trim(*K, frev);
    }

    void ensure(size_t need) {
        if (need <= prec) return;
        size_t np = std::max<size_t>(need, std::max<size_t>(prec * 2, 16));
        finv = inv_series(*K, frev, np);
        prec = np;
    }

    PV<Ops> reduce(PV<Ops> a) {
        trim(*K, a);
        int df = degree(f);
        int da = degree(a);
        if (da < df) return a;
        size_t qlen = size_t(da - df + 1);
        if (qlen < 96 || size_t(df) < 96) {
            PV<Ops> q, r;
            divrem(*K, a, f, q, r);
            return r;
        }
        ensure(qlen);
        // quotient = rev(rev(a) * finv mod x^qlen)
        PV<Ops> arev(a.rbegin(), a.rend());
        arev.resize(std::min(arev.size(), qlen + size_t(df)));
        PV<Ops> finv_t(finv.begin(), finv.begin() + std::min(finv.size(), qlen));
        PV<Ops> qr = mul(*K, PV<Ops>(arev.begin(), arev.begin() + std::min(arev.size(), qlen)), finv_t);
        qr.resize(qlen, K->zero());
        PV<Ops> q(qr.rbegin(), qr.rend());
        trim(*K, q);
        PV<Ops> qf = mul(*K, q, f);
        PV<Ops> r = sub(*K, a, qf);
        assert(degree(r) < df);
        return r;
    }
};

/// Inverse of a mod f (gcd(a, f) = 1).
template <class Ops>
PV<Ops> invmod(const Ops& K, const PV<Ops>& a, const PV<Ops>& f) {
    PV<Ops> r0 = f, r1 = rem(K, a, f);
    PV<Ops> t0, t1{K.one()};
    while (!r1.empty()) {
        PV<Ops> q, r2;
        divrem(K, r0, r1, q, r2);
        PV<Ops> t2 = sub(K, t0, mul(K, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (degree(r0) != 0) throw std::invalid_argument("invmod: not invertible");
    return mul_scalar(K, t0, K.inv(r0[0]));
}

/// a(b) mod f by Horner.
template <class Ops>
PV<Ops> compose_mod(const Ops& K, const PV<Ops>& a, const PV<Ops>& b, const PV<Ops>& f) {
    Reducer<Ops> red(K, f);
    PV<Ops> r;
    for (size_t i = a.size(); i-- > 0;) {
        r = red.reduce(mul(K, r, b));
        if (!K.is_zero(a[i])) {
            if (r.empty()) r.push_back(a[i]);
            else r[0] = K.add(r[0], a[i]);
        }
        trim(K, r);
    }
    return r;
}

template <class Ops>
PV<Ops> powmod(const Ops& K, const PV<Ops>& a, u64 e, const PV<Ops>& f) {
    Reducer<Ops> red(K, f);
    PV<Ops> base = red.reduce(a);
    PV<Ops> r{K.one()};
    while (e) {
        if (e & 1) r = red.reduce(mul(K, r, base));
        e >>= 1;
        if (e) base = red.reduce(mul(K, base, base));
    }
    return r;
}

/// One p-power Frobenius step on a polynomial mod f:
/// pi(x) -> pi(x)^p = sum pi_i^p x^(p*i)  (then reduced).
template <class Ops>
PV<Ops> frob_step(const Ops& K, const PV<Ops>& pi, Reducer<Ops>& red) {
    if (pi.empty()) return pi;
    PV<Ops> spread((pi.size() - 1) * K.p + 1, K.zero());
    for (size_t i = 0; i < pi.size(); ++i)
        if (!K.is_zero(pi[i])) spread[i * K.p] = K.frob_p(pi[i]);
    return red.reduce(std::move(spread));
}

/// x^(q^j) mod f for j = 0..upto (q = K.q = p^(K.s)).
template <class Ops>
std::vector<PV<Ops>> frobenius_powers(const Ops& K, const PV<Ops>& f, u32 upto) {
    Reducer<Ops> red(K, f);
    std::vector<PV<Ops>> out;
    PV<Ops> pi{K.zero(), K.one()};  // x
    pi = red.reduce(std::move(pi));
    out.push_back(pi);
    for (u32 j = 1; j <= upto; ++j) {
        for (u32 t = 0; t < K.s; ++t) pi = frob_step(K, pi, red);
        out.push_back(pi);
    }
    return out;
}

template <class Ops>
PV<Ops> poly_x(const Ops& K) { return PV<Ops>{K.zero(), K.one()}; }

/// Irreducibility over the coefficient field.
template <class Ops>
bool is_irreducible(const Ops& K, const PV<Ops>& f) {
    int d = degree(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    auto pis = frobenius_powers(K, f, u32(d));
    PV<Ops> x = poly_x(K);
    if (!equal(K, rem(K, x, f), pis[size_t(d)])) return false;
    for (int l = 2; l <= d; ++l) {
        if (d % l != 0) continue;
        bool lp = true;
        for (int m = 2; m * m <= l; ++m)
            if (l % m == 0) { lp = false; break; }
        if (!lp) continue;
        PV<Ops> g = gcd(K, sub(K, pis[size_t(d / l)], x), f);
        if (degree(g) != 0) return false;
    }
    return true;
}

/// Split a product of distinct degree-k irreducibles (Cantor-Zassenhaus).
template <class Ops>
void edf(const Ops& K, const PV<Ops>& g, u32 k, SplitMix64& rng,
         std::vector<PV<Ops>>& out) {
    int dg = degree(g);
    if (dg == int(k)) {
        out.push_back(g);
        return;
    }
    if (dg <= 0) return;
    PV<Ops> a, b;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 200) throw std::runtime_error("edf: splitting failed");
        PV<Ops> r(size_t(dg), K.zero());
        for (auto& c : r) c = K.random(rng);
        trim(K, r);
        if (degree(r) < 1) continue;
        PV<Ops> w;
        if (K.p == 2) {
            // trace map to F_2 over F_{q^k}
            Reducer<Ops> red(K, g);
            PV<Ops> acc = r, cur = r;
            u32 steps = K.s * k;
            for (u32 i = 1; i < steps; ++i) {
                cur = red.reduce(mul(K, cur, cur));
                acc = add(K, acc, cur);
            }
            w = acc;
        } else {
            if (K.q == 0) throw std::runtime_error("edf: field too large");
            unsigned __int128 qk = 1;
            for (u32 i = 0; i < k; ++i) {
                qk *= K.q;
                if (qk > (unsigned __int128)1 << 62)
                    throw std::runtime_error("edf: exponent overflow");
            }
            u64 e = (u64(qk) - 1) / 2;
            w = powmod(K, r, e, g);
            w = sub(K, w, PV<Ops>{K.one()});
        }
        a = gcd(K, w, g);
        if (degree(a) > 0 && degree(a) < dg) {
            b = exact_div(K, g, a);
            break;
        }
    }
    edf(K, a, k, rng, out);
    edf(K, b, k, rng, out);
}

/// Squarefree decomposition in characteristic p; returns (factor, mult)
/// with factors monic squarefree and pairwise coprime.
template <class Ops>
void squarefree_decomp(const Ops& K, PV<Ops> f, u32 mult_scale,
                       std::vector<std::pair<PV<Ops>, u32>>& out) {
    make_monic(K, f);
    if (degree(f) <= 0) return;
    // derivative
    PV<Ops> fd(f.size() > 1 ? f.size() - 1 : 0, K.zero());
    for (size_t i = 1; i < f.size(); ++i) {
        u32 m = u32(i % K.p);
        typename Ops::Elem c = K.zero();
        for (u32 t = 0; t < m; ++t) c = K.add(c, f[i]);
        fd[i - 1] = c;
    }
    trim(K, fd);
    if (fd.empty()) {
        // f = v(x^p); take p-th root of coefficients
        PV<Ops> v((f.size() - 1) / K.p + 1, K.zero());
        for (size_t i = 0; i < v.size(); ++i) {
            auto c = f[i * K.p];
            // c^(1/p) = c^(p^(s-1)) in F_{p^s}
            for (u32 t = 0; t + 1 < K.s; ++t) c = K.frob_p(c);
            v[i] = c;
        }
        squarefree_decomp(K, v, mult_scale * K.p, out);
        return;
    }
    PV<Ops> c = gcd(K, f, fd);
    PV<Ops> w = exact_div(K, f, c);
    u32 i = 1;
    while (degree(w) > 0) {
        PV<Ops> y = gcd(K, w, c);
        PV<Ops> piece = exact_div(K, w, y);
        if (degree(piece) > 0) out.emplace_back(piece, i * mult_scale);
        w = std::move(y);
        c = exact_div(K, c, w);
        ++i;
    }
    // what is left of c is a p-th power; the derivative-zero branch of the
    // recursion extracts the root and scales the multiplicities
    if (degree(c) > 0) squarefree_decomp(K, c, mult_scale, out);
}

/// Distinct-degree split of a squarefree monic polynomial:
/// returns (product of degree-d irreducibles, d).
template <class Ops>
std::vector<std::pair<PV<Ops>, u32>> ddf(const Ops& K, PV<Ops> f) {
    std::vector<std::pair<PV<Ops>, u32>> out;
    make_monic(K, f);
    PV<Ops> x = poly_x(K);
    Reducer<Ops> red(K, f);
    PV<Ops> pi = red.reduce(x);
    u32 d = 0;
    while (degree(f) > 0) {
        ++d;
        if (2 * d > u32(degree(f))) {
            out.emplace_back(f, u32(degree(f)));
            break;
        }
        for (u32 t = 0; t < K.s; ++t) pi = frob_step(K, pi, red);
        PV<Ops> g = gcd(K, sub(K, pi, x), f);
        if (degree(g) > 0) {
            out.emplace_back(g, d);
            f = exact_div(K, f, g);
            red = Reducer<Ops>(K, f);
            pi = red.reduce(pi);
        }
    }
    return out;
}

/// Distinct monic irreducible factors of degree exactly n (which factors of
/// f of degree n exist), ignoring multiplicities.  Optimized: only the
/// Frobenius powers at divisors of n are combined with gcds.
template <class Ops>
std::vector<PV<Ops>> factors_of_degree(const Ops& K, PV<Ops> f, u32 n, u64 seed) {
    std::vector<PV<Ops>> out;
    make_monic(K, f);
    if (degree(f) < int(n)) return out;
    PV<Ops> x = poly_x(K);
    Reducer<Ops> red(K, f);
    PV<Ops> pi = red.reduce(x);
    std::vector<PV<Ops>> pi_at_div;  // pi at proper divisors of n, ascending
    std::vector<u32> divs;
    for (u32 j = 1; j <= n; ++j) {
        for (u32 t = 0; t < K.s; ++t) pi = frob_step(K, pi, red);
        if (j < n && n % j == 0) {
            pi_at_div.push_back(pi);
            divs.push_back(j);
        }
    }
    // factors of degree dividing n, each once
    PV<Ops> g = gcd(K, sub(K, pi, x), f);
    // remove factors of degree properly dividing n
    for (size_t i = 0; i < divs.size() && degree(g) > 0; ++i) {
        PV<Ops> c = gcd(K, sub(K, pi_at_div[i], x), g);
        if (degree(c) > 0) g = exact_div(K, g, c);
    }
    if (degree(g) <= 0) return out;
    SplitMix64 rng(seed);
    edf(K, g, n, rng, out);
    return out;
}

/// Complete factorization of a nonzero polynomial: monic irreducible
/// factors with multiplicities, plus the leading unit.
template <class Ops>
std::vector<std::pair<PV<Ops>, u32>> factor(const Ops& K, PV<Ops> f, u64 seed) {
    std::vector<std::pair<PV<Ops>, u32>> out;
    trim(K, f);
    if (degree(f) <= 0) return out;
    std::vector<std::pair<PV<Ops>, u32>> sqf;
    squarefree_decomp(K, f, 1, sqf);
    SplitMix64 rng(seed);
    for (auto& [piece, mult] : sqf) {
        for (auto& [block, d] : ddf(K, piece)) {
            std::vector<PV<Ops>> irr;
            edf(K, block, d, rng, irr);
            for (auto& g : irr) out.emplace_back(std::move(g), mult);
        }
    }
    return out;
}

/// All roots of f in the coefficient field.
template <class Ops>
std::vector<typename Ops::Elem> roots(const Ops& K, PV<Ops> f, u64 seed) {
    std::vector<typename Ops::Elem> out;
    trim(K, f);
    if (degree(f) <= 0) return out;
    make_monic(K, f);
    // strip x | f
    size_t sh = 0;
    while (sh < f.size() && K.is_zero(f[sh])) ++sh;
    if (sh > 0) {
        out.push_back(K.zero());
        f.erase(f.begin(), f.begin() + long(sh));
    }
    if (degree(f) <= 0) return out;
    PV<Ops> x = poly_x(K);
    auto pis = frobenius_powers(K, f, 1);
    PV<Ops> g = gcd(K, sub(K, pis[1], x), f);
    if (degree(g) <= 0) return out;
    SplitMix64 rng(seed);
    std::vector<PV<Ops>> lin;
    edf(K, g, 1, rng, lin);
    for (auto& l : lin) out.push_back(K.neg(l[0]));
    return out;
}

}  // namespace up
}  // namespace p1enum

#endif
