#ifndef P1ENUM_ORACLE_HPP
#define P1ENUM_ORACLE_HPP

// Independent brute-force references and closed-form counts.  These share
// no code path with the main enumerators beyond field arithmetic.

#include "p1enum/projgeom.hpp"

#include <functional>

namespace p1enum {

struct BruteOrbit {
    std::vector<HomPoly> members;  // sorted by poly_key
    u64 stab_order = 0;
};

/// All monic homogeneous degree-n polynomials (count (q^(n+1)-1)/(q-1)).
void for_each_monic_form(const TowerView& V, u32 n,
                         const std::function<void(const HomPoly&)>& fn);
/// All monic irreducible degree-n polynomials, y included when n = 1.
void for_each_irreducible(const TowerView& V, u32 n,
                          const std::function<void(const HomPoly&)>& fn);

/// Partition of the degree-n places under PGL_2(F_q), with stabilizer
/// orders (|G| / orbit size).  Budget: q^(n+3) elementary actions.
std::vector<BruteOrbit> brute_force_place_orbits(const TowerView& V, u32 n,
                                                 u64 budget = 2'000'000'000ull);

/// Partition of all degree-n effective divisors (as monic forms).
std::vector<BruteOrbit> brute_force_divisor_orbits(const TowerView& V, u32 n,
                                                   u64 budget = 2'000'000'000ull);

/// Order of the stabilizer of f in PGL_2(F_q), by full enumeration.
u64 brute_stabilizer_order(const TowerView& V, const HomPoly& f);

struct Counts {
    u64 places;         // N_n(q)
    u64 divisor_total;  // (q^(n+1)-1)/(q-1)
    u64 group_order;    // q^3 - q
    u64 coset_index;    // q^3 + q
};
Counts counting_formulas(u64 q, u32 n);

}  // namespace p1enum

#endif
