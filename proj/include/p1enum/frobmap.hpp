#ifndef P1ENUM_FROBMAP_HPP
#define P1ENUM_FROBMAP_HPP

// Frobenius functions and divisors: construction from a place, fixed-point
// divisors, enumeration of rational maps with a prescribed fixed-point
// divisor, iteration, and the explicit degree-1 representative families.

#include "p1enum/orbits.hpp"
#include "p1enum/projgeom.hpp"

namespace p1enum {

/// Rational map g/h: coprime homogeneous forms of equal degree, in the
/// canonical scaling (denominator monic; numerator monic instead when the
/// denominator is a pure power of y).
struct RationalMap {
    HomPoly num, den;
    u32 degree() const { return num.degree(); }
};

/// Reduce g/h to canonical form (computes the gcd).
RationalMap make_map(const TowerView& V, const HomPoly& g, const HomPoly& h);
/// Canonical form for a pair already known to be coprime (skips the gcd).
RationalMap make_map_coprime(const TowerView& V, HomPoly g, HomPoly h);

bool map_eq(const TowerView& V, const RationalMap& F, const RationalMap& G);
std::vector<u32> map_key(const TowerView& V, const RationalMap& F);
int map_cmp(const TowerView& V, const RationalMap& F, const RationalMap& G);
/// Whether F is the identity x/y.
bool map_is_identity(const TowerView& V, const RationalMap& F);
/// Evaluate at a point of a view level (entries embedded as needed).
ProjPoint map_eval(const TowerView& V, const RationalMap& F, const ProjPoint& P);

/// Gamma o F o Gamma^(-1).
RationalMap act_on_map(const TowerView& V, const Mat2& M, const RationalMap& F);

/// The unique rational map of degree <= (n-1)/2 sending each root alpha of
/// f to alpha^q (f irreducible of odd degree n >= 3).
RationalMap frobenius_function(const TowerView& V, const HomPoly& f);

/// xh - yg for F = g/h (the fixed-point polynomial, of degree deg F + 1).
HomPoly fixed_point_poly(const TowerView& V, const RationalMap& F);
/// Its divisor (F != x/y).
Divisor fixed_point_divisor(const TowerView& V, const RationalMap& F, u64 seed = 1);

/// Indexed domain of the degree-r rational maps F with Phi(F) = D,
/// resumable by code.  Codes decode to candidate (h, c) pairs; invalid
/// slots return nullopt.
struct FnDomain {
    HomPoly p;            // monic polynomial of D
    u32 r = 0;            // map degree = deg D - 1
    bool inf_in_support = false;
    u64 code_space = 0;
};
FnDomain fn_domain(const TowerView& V, const Divisor& D);
std::optional<RationalMap> fn_at(const TowerView& V, const FnDomain& dom, u64 code);
/// Materialized list (desk-scale q only).
std::vector<RationalMap> functions_with_fixed_divisor(const TowerView& V, const Divisor& D);

/// n-fold composition (compositions of coprime pairs stay coprime, so no
/// gcd is needed along the way).
RationalMap iterate_map(const TowerView& V, const RationalMap& F, u32 n);

/// The degree-n places with Frobenius functions of degree 1, as monic
/// irreducible polynomials; empty unless n is the characteristic or
/// divides q-1 or q+1.  Requires view level 2n in the q+1 case.
std::vector<HomPoly> ff1_representatives(const TowerView& V, u32 n);

/// True iff F sends one (equivalently every) root of f to its q-th power.
bool is_frobenius_function_for(const TowerView& V, const RationalMap& F, const HomPoly& f);

}  // namespace p1enum

#endif
