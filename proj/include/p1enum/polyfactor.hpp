#ifndef P1ENUM_POLYFACTOR_HPP
#define P1ENUM_POLYFACTOR_HPP

// Factorization of homogeneous bivariate polynomials over the view's base
// field: squarefree decomposition, distinct-degree splitting, probabilistic
// equal-degree splitting, irreducibility tests, root-finding in tower levels.
// All randomness flows from the caller's seed; every returned list is sorted
// so results never depend on the seed.

#include "p1enum/projgeom.hpp"

namespace p1enum {

struct FactorList {
    FieldElem unit;   // leading scalar
    u32 y_mult = 0;   // multiplicity of y
    std::vector<std::pair<HomPoly, u32>> factors;  // monic irreducible, not y
};

/// Complete factorization; factors sorted by (degree, poly_key).
FactorList irreducible_factors(const TowerView& V, const HomPoly& f, u64 seed);

/// The distinct monic irreducible degree-n factors, sorted by poly_key.
std::vector<HomPoly> factors_of_degree(const TowerView& V, const HomPoly& f,
                                       u32 n, u64 seed);

bool is_irreducible(const TowerView& V, const HomPoly& f);

/// All roots alpha (in view level d) of f(x,1), sorted by element_key.
std::vector<FieldElem> roots_in_level(const TowerView& V, const HomPoly& f,
                                      u32 d, u64 seed);

/// Build the Place of an irreducible polynomial (key-smallest root chosen).
Place place_from_poly(const TowerView& V, const HomPoly& f, u64 seed = 1);

/// Derive a deterministic per-object seed from a master seed and a polynomial.
u64 seed_for_poly(const TowerView& V, u64 master, const HomPoly& f);

/// Product of homogeneous polynomials through the packed engine when the
/// base field has log tables (Karatsuba above the usual threshold).
HomPoly hp_mul_fast(const TowerView& V, const HomPoly& f, const HomPoly& g);

}  // namespace p1enum

#endif
