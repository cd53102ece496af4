#include "p1enum/fpx.hpp"

namespace p1enum::fpx {

Poly add(const Zp& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    trim(r);
    return r;
}

Poly sub(const Zp& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    trim(r);
    return r;
}

Poly mul(const Zp& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        u64 ai = a[i];
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += ai * b[j];
    }
    Poly r(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r[i] = u32(acc[i] % F.p);
    trim(r);
    return r;
}

Poly mul_scalar(const Zp& F, const Poly& a, u32 s) {
    if (s == 0) return {};
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], s);
    trim(r);
    return r;
}

void make_monic(const Zp& F, Poly& a) {
    trim(a);
    if (a.empty() || a.back() == 1) return;
    u32 s = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, s);
}

void divrem(const Zp& F, const Poly& a, const Poly& b, Poly& q, Poly& r) {
    r = a;
    trim(r);
    q.clear();
    int db = deg(b);
    if (db < 0) throw std::invalid_argument("fpx: division by zero");
    if (deg(r) < db) return;
    q.assign(size_t(deg(r) - db + 1), 0);
    u32 lead_inv = F.inv(b.back());
    for (int i = deg(r); i >= db; --i) {
        if (r[size_t(i)] == 0) continue;
        u32 c = F.mul(r[size_t(i)], lead_inv);
        q[size_t(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            r[size_t(i - db + j)] = F.sub(r[size_t(i - db + j)], F.mul(c, b[size_t(j)]));
    }
    trim(r);
}

Poly rem(const Zp& F, const Poly& a, const Poly& b) {
    Poly q, r;
    divrem(F, a, b, q, r);
    return r;
}

Poly gcd(const Zp& F, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(F, a);
    return a;
}

Poly powmod(const Zp& F, const Poly& a, u64 e, const Poly& mod) {
    Poly base = rem(F, a, mod);
    Poly r{1};
    while (e) {
        if (e & 1) r = rem(F, mul(F, r, base), mod);
        e >>= 1;
        if (e) base = rem(F, mul(F, base, base), mod);
    }
    return r;
}

Poly derivative(const Zp& F, const Poly& a) {
    Poly r;
    if (a.size() <= 1) return r;
    r.resize(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], u32(i % F.p));
    trim(r);
    return r;
}

u32 eval(const Zp& F, const Poly& a, u32 x) {
    u32 r = 0;
    for (size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
    return r;
}

Poly invmod(const Zp& F, const Poly& a, const Poly& mod) {
    // extended Euclid: r0 = mod, r1 = a
    Poly r0 = mod, r1 = rem(F, a, mod);
    Poly t0, t1{1};
    while (!r1.empty()) {
        Poly q, r2;
        divrem(F, r0, r1, q, r2);
        Poly t2 = sub(F, t0, mul(F, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (deg(r0) != 0) throw std::invalid_argument("fpx: not invertible");
    return mul_scalar(F, t0, F.inv(r0[0]));
}

bool is_irreducible(const Zp& F, const Poly& a) {
    int d = deg(a);
    if (d <= 0) return false;
    if (d == 1) return true;
    // x^(p^d) = x mod a, and x^(p^(d/l)) - x coprime to a for primes l | d
    Poly x{0, 1};
    Poly xp = powmod(F, x, F.p, a);  // x^p mod a
    // iterate Frobenius by composing: keep powers x^(p^k) via repeated powmod
    std::vector<Poly> frob(size_t(d) + 1);
    frob[1] = xp;
    for (int k = 2; k <= d; ++k) {
        // frob[k] = frob[k-1]^p mod a
        frob[size_t(k)] = powmod(F, frob[size_t(k - 1)], F.p, a);
    }
    Poly top = sub(F, frob[size_t(d)], x);
    if (!top.empty()) return false;
    for (u64 l = 2; l <= u64(d); ++l) {
        if (d % int(l) != 0) continue;
        bool lp = true;
        for (u64 m = 2; m * m <= l; ++m)
            if (l % m == 0) { lp = false; break; }
        if (!lp) continue;
        Poly g = gcd(F, sub(F, frob[size_t(d / int(l))], x), a);
        if (deg(g) != 0) return false;
    }
    return true;
}

}  // namespace p1enum::fpx
