#ifndef P1ENUM_ENUM_DIVISORS_HPP
#define P1ENUM_ENUM_DIVISORS_HPP

// Enumeration of PGL_2(F_q)-orbit representatives of effective divisors:
// small Galois types, the three anchored reduced-type algorithms, base
// lists for pairs of quadratic places, and non-reduced expansion over
// supports.  All streams are resumable: their serialized state consists of
// loop cursors (plus the documented O(q) seen-sets of the base lists) and
// resuming reproduces the exact suffix of an uninterrupted run.

#include "p1enum/orbits.hpp"
#include "p1enum/serialize.hpp"

#include <memory>
#include <set>

namespace p1enum {

class PlacesStream;  // mutual recursion with enum_places

/// All Galois types of degree <= n, lexicographically decreasing.
std::vector<GaloisType> galois_types_upto(u32 n);
/// Whether some multiplicity assignment of type M reaches degree n.
bool type_feasible(const GaloisType& M, u32 n);
/// All divisors with support S and degree n (multiplicity vectors in
/// lexicographic order over the canonical place order of S).
std::vector<Divisor> multiplicity_assignments(const TowerView& V, const Divisor& S, u32 n);

/// Every reduced divisor of Galois type M (not up to the group), in a
/// frozen scan order.
class AllReducedTuples {
public:
    AllReducedTuples(std::shared_ptr<const TowerView> V, GaloisType M, u64 seed);
    bool next(Divisor& out);
    void save(Writer& w) const;
    void load(Reader& r);

private:
    u64 rank_space(u32 deg) const;
    std::optional<Place> place_at(u32 deg, u64 rank) const;
    bool fill_from(size_t slot, u64 lo);

    std::shared_ptr<const TowerView> V_;
    GaloisType M_;
    u64 seed_;
    bool started_ = false;
    bool done_ = false;
    std::vector<u64> rank_;
    std::vector<Place> cur_;
};

/// The base list for pairs of distinct degree-2 places: the first place is
/// pinned to the canonical quadratic, partners scan in key order, one
/// emission per fresh lambda value (O(q) seen-set).
class QuadPairStream {
public:
    QuadPairStream(std::shared_ptr<const TowerView> V, u64 seed);
    bool next(Divisor& out);
    void save(Writer& w) const;
    void load(Reader& r);
    u64 seen_bytes() const;

private:
    std::shared_ptr<const TowerView> V_;
    u64 seed_;
    Place p1_;
    u64 rank_ = 0;
    std::set<std::vector<u32>> seen_;
};

/// Orbit representatives of the reduced divisors of one Galois type.
class ReducedTypeStream {
public:
    ReducedTypeStream(std::shared_ptr<const TowerView> V, GaloisType M, u64 seed);
    ~ReducedTypeStream();
    ReducedTypeStream(ReducedTypeStream&&) noexcept;
    bool next(Divisor& out);
    void save(Writer& w) const;
    void load(Reader& r);
    u64 seen_bytes() const;

private:
    enum class Kind { SmallList, TwoOneOne, AnchoredPlace, AnchoredPair, NormalizedOnes };
    void init_anchor_state();
    bool advance_anchor();

    std::shared_ptr<const TowerView> V_;
    GaloisType M_;
    u64 seed_;
    Kind kind_;
    // SmallList
    std::vector<Divisor> list_;
    u64 idx_ = 0;
    // TwoOneOne
    u64 rank_ = 0;
    // anchored kinds
    std::unique_ptr<PlacesStream> anchor_places_;
    std::unique_ptr<QuadPairStream> anchor_pairs_;
    std::unique_ptr<AllReducedTuples> tuples_;
    bool have_anchor_ = false;
    Divisor anchor_;                  // one place, a pair, or infty+0+1
    std::vector<u32> anchor_key_;     // cross key / lambda key (recomputed on load)
};

/// Orbit representatives of all degree-n effective divisors.
class DivisorOrbitStream {
public:
    DivisorOrbitStream(std::shared_ptr<const TowerView> V, u32 n, u64 seed);
    ~DivisorOrbitStream();
    bool next(Divisor& out);
    void save(Writer& w) const;
    void load(Reader& r);
    u64 seen_bytes() const;

private:
    void classes_for_support();

    std::shared_ptr<const TowerView> V_;
    u32 n_;
    u64 seed_;
    std::vector<GaloisType> types_;
    u64 type_idx_ = 0;
    std::unique_ptr<ReducedTypeStream> sub_;
    bool have_support_ = false;
    Divisor support_;
    std::vector<Divisor> classes_;
    u64 class_idx_ = 0;
};

}  // namespace p1enum

#endif
