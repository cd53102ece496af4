#ifndef P1ENUM_FPX_HPP
#define P1ENUM_FPX_HPP

// Dense polynomials over F_p: vector<u32> of coefficients, low to high,
// trimmed (no trailing zeros).  Internal helper layer for gfield.

#include "p1enum/gfield.hpp"

namespace p1enum::fpx {

using Poly = std::vector<u32>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int deg(const Poly& a) { return int(a.size()) - 1; }
inline bool is_zero(const Poly& a) { return a.empty(); }

Poly add(const Zp& F, const Poly& a, const Poly& b);
Poly sub(const Zp& F, const Poly& a, const Poly& b);
Poly mul(const Zp& F, const Poly& a, const Poly& b);
Poly mul_scalar(const Zp& F, const Poly& a, u32 s);
void make_monic(const Zp& F, Poly& a);
// a = q*b + r, b nonzero
void divrem(const Zp& F, const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly rem(const Zp& F, const Poly& a, const Poly& b);
Poly gcd(const Zp& F, Poly a, Poly b);  // monic
Poly powmod(const Zp& F, const Poly& a, u64 e, const Poly& mod);
Poly derivative(const Zp& F, const Poly& a);
u32 eval(const Zp& F, const Poly& a, u32 x);
Poly invmod(const Zp& F, const Poly& a, const Poly& mod);

bool is_irreducible(const Zp& F, const Poly& a);

}  // namespace p1enum::fpx

#endif
