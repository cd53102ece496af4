#ifndef P1ENUM_ENUM_PLACES_HPP
#define P1ENUM_ENUM_PLACES_HPP

// The main place enumerators: base cases (n <= 4), the odd-degree
// algorithm with its special function families, and the even-degree
// algorithm over F_{q^2}, all exposed as resumable streams emitting one
// monic irreducible polynomial per PGL_2(F_q) orbit.

#include "p1enum/enum_divisors.hpp"
#include "p1enum/frobmap.hpp"

namespace p1enum {

/// p, e with q = p^e (q must be a prime power).
std::pair<u32, u32> decompose_prime_power(u64 q);

/// Largest view level the tower must provide for places_up_to_pgl2(q, n)
/// (covers the recursion into divisors, smaller degrees, the degree-1
/// families needing F_{q^(2n)}, and the even-degree descent to F_{q^2}).
u32 required_tower_degree(u64 q, u32 n);

/// Build a tower adequate for enumerating degree-n places over F_q.
Tower tower_for(u64 q, u32 n);

class PlacesStream {
public:
    PlacesStream(std::shared_ptr<const TowerView> V, u32 n, u64 seed);
    ~PlacesStream();
    bool next(HomPoly& out);
    void save(Writer& w) const;
    void load(Reader& r);
    /// bytes held by base-case seen-sets (reported separately from cursors)
    u64 seen_bytes() const;
    /// serialized cursor size excluding seen-sets
    u64 state_bytes() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Versioned resume blob for the CLI surface.
std::vector<u8> save_places_state(const PlacesStream& s, u64 q, u32 n, u64 seed);
void load_places_state(PlacesStream& s, const std::vector<u8>& blob, u64 q, u32 n, u64 seed);

}  // namespace p1enum

#endif
