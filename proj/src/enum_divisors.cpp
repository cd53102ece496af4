#include "p1enum/enum_divisors.hpp"

#include "p1enum/enum_places.hpp"
#include "p1enum/polyfactor.hpp"

#include <algorithm>
#include <functional>

namespace p1enum {

std::vector<GaloisType> galois_types_upto(u32 n) {
    std::vector<GaloisType> out;
    // non-increasing sequences with sum <= n
    std::vector<u32> cur;
    std::function<void(u32, u32)> rec = [&](u32 remaining, u32 maxpart) {
        if (!cur.empty()) out.push_back(GaloisType{cur});
        for (u32 part = std::min(remaining, maxpart); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end(),
              [](const GaloisType& a, const GaloisType& b) { return b.m < a.m; });
    return out;
}

bool type_feasible(const GaloisType& M, u32 n) {
    u32 base = M.degree();
    if (base > n) return false;
    u32 extra = n - base;
    // can extra be written as a nonnegative combination of the degrees?
    std::vector<bool> dp(extra + 1, false);
    dp[0] = true;
    for (u32 d : M.m)
        for (u32 v = d; v <= extra; ++v)
            if (dp[v - d]) dp[v] = true;
    return dp[extra];
}

std::vector<Divisor> multiplicity_assignments(const TowerView& V, const Divisor& S, u32 n) {
    if (!S.reduced()) throw std::invalid_argument("multiplicity_assignments: support not reduced");
    std::vector<Divisor> out;
    size_t r = S.parts.size();
    std::vector<u32> mult(r, 0);
    std::function<void(size_t, u32)> rec = [&](size_t i, u32 remaining) {
        if (i == r) {
            if (remaining == 0) {
                Divisor D;
                for (size_t j = 0; j < r; ++j) D.parts.emplace_back(S.parts[j].first, mult[j]);
                divisor_sort(V, D);
                out.push_back(std::move(D));
            }
            return;
        }
        u32 deg = S.parts[i].first.deg;
        u32 min_rest = 0;
        for (size_t j = i + 1; j < r; ++j) min_rest += S.parts[j].first.deg;
        for (u32 m = 1; m * deg + min_rest <= remaining; ++m) {
            mult[i] = m;
            rec(i + 1, remaining - m * deg);
        }
    };
    if (r == 0) {
        if (n == 0) out.push_back(Divisor{});
        return out;
    }
    rec(0, n);
    return out;
}

// ------------------------------------------------------------ AllReducedTuples

AllReducedTuples::AllReducedTuples(std::shared_ptr<const TowerView> V, GaloisType M, u64 seed)
    : V_(std::move(V)), M_(std::move(M)), seed_(seed) {
    rank_.assign(M_.m.size(), 0);
    cur_.resize(M_.m.size());
}

u64 AllReducedTuples::rank_space(u32 deg) const {
    u64 q = V_->q();
    if (deg == 1) return q + 1;
    u64 s = 1;
    for (u32 i = 0; i < deg; ++i) s *= q;
    return s;
}

std::optional<Place> AllReducedTuples::place_at(u32 deg, u64 rank) const {
    const TowerView& V = *V_;
    if (deg == 1) {
        if (rank == 0) return place_from_point(V, ProjPoint{true, V.zero()});
        return place_from_point(V, ProjPoint{false, V.base_from_index(rank - 1)});
    }
    HomPoly f = hp_zero(V, deg);
    f.c[deg] = V.one();
    u64 v = rank;
    for (u32 i = 0; i < deg; ++i) {
        f.c[i] = V.base_from_index(v % V.q());
        v /= V.q();
    }
    if (!is_irreducible(V, f)) return std::nullopt;
    return place_from_poly(V, f, seed_);
}

bool AllReducedTuples::fill_from(size_t slot, u64 lo) {
    if (slot == M_.m.size()) return true;
    u32 deg = M_.m[slot];
    for (u64 r = lo; r < rank_space(deg); ++r) {
        auto P = place_at(deg, r);
        if (!P) continue;
        rank_[slot] = r;
        cur_[slot] = *P;
        u64 nlo = (slot + 1 < M_.m.size() && M_.m[slot + 1] == deg) ? r + 1 : 0;
        if (fill_from(slot + 1, nlo)) return true;
        return false;  // larger r only shrinks the options downstream
    }
    return false;
}

bool AllReducedTuples::next(Divisor& out) {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        if (!fill_from(0, 0)) {
            done_ = true;
            return false;
        }
    } else {
        if (M_.m.empty()) {
            done_ = true;
            return false;
        }
        // bump from the last slot
        size_t i = M_.m.size();
        bool ok = false;
        while (i-- > 0) {
            u64 lo = rank_[i] + 1;
            // re-scan slot i upward; downstream slots restart
            u32 deg = M_.m[i];
            bool filled = false;
            for (u64 r = lo; r < rank_space(deg); ++r) {
                auto P = place_at(deg, r);
                if (!P) continue;
                rank_[i] = r;
                cur_[i] = *P;
                u64 nlo = (i + 1 < M_.m.size() && M_.m[i + 1] == deg) ? r + 1 : 0;
                if (fill_from(i + 1, nlo)) { filled = true; break; }
                break;  // downstream exhaustion will not improve with larger r
            }
            if (filled) { ok = true; break; }
        }
        if (!ok) {
            done_ = true;
            return false;
        }
    }
    Divisor D;
    for (auto& P : cur_) D.parts.emplace_back(P, 1);
    divisor_sort(*V_, D);
    out = std::move(D);
    return true;
}

void AllReducedTuples::save(Writer& w) const {
    w.put_bool(started_);
    w.put_bool(done_);
    w.put_u32(u32(rank_.size()));
    for (u64 r : rank_) w.put_u64(r);
}

void AllReducedTuples::load(Reader& r) {
    started_ = r.get_bool();
    done_ = r.get_bool();
    u32 k = r.get_u32();
    if (k != rank_.size()) throw std::runtime_error("resume state: tuple arity mismatch");
    for (u32 i = 0; i < k; ++i) rank_[i] = r.get_u64();
    if (started_ && !done_) {
        for (size_t i = 0; i < rank_.size(); ++i) {
            auto P = place_at(M_.m[i], rank_[i]);
            if (!P) throw std::runtime_error("resume state: invalid tuple rank");
            cur_[i] = *P;
        }
    }
}

// ------------------------------------------------------------ QuadPairStream

namespace {

HomPoly quadratic_at(const TowerView& V, u64 rank) {
    HomPoly f = hp_zero(V, 2);
    f.c[2] = V.one();
    f.c[0] = V.base_from_index(rank % V.q());
    f.c[1] = V.base_from_index(rank / V.q());
    return f;
}

// ranks ordered to match poly_key: c1 is the major digit
u64 quadratic_rank_space(const TowerView& V) { return V.q() * V.q(); }

HomPoly canonical_quadratic(const TowerView& V) {
    for (u64 r = 0; r < quadratic_rank_space(V); ++r) {
        // scan in poly_key order: (c1, c0) lexicographic
        HomPoly f = hp_zero(V, 2);
        f.c[2] = V.one();
        f.c[1] = V.base_from_index(r / V.q());
        f.c[0] = V.base_from_index(r % V.q());
        if (is_irreducible(V, f)) return f;
    }
    throw std::logic_error("canonical_quadratic: none found");
}

}  // namespace

QuadPairStream::QuadPairStream(std::shared_ptr<const TowerView> V, u64 seed)
    : V_(std::move(V)), seed_(seed) {
    p1_ = place_from_poly(*V_, canonical_quadratic(*V_), seed_);
}

bool QuadPairStream::next(Divisor& out) {
    const TowerView& V = *V_;
    u64 space = quadratic_rank_space(V);
    while (rank_ < space) {
        u64 r = rank_++;
        HomPoly f = hp_zero(V, 2);
        f.c[2] = V.one();
        f.c[1] = V.base_from_index(r / V.q());
        f.c[0] = V.base_from_index(r % V.q());
        if (hp_eq(V, f, p1_.poly)) continue;
        if (!is_irreducible(V, f)) continue;
        FieldElem lam = lambda_invariant(V, p1_.poly, f);
        auto key = V.element_key(lam);
        if (!seen_.insert(key).second) continue;
        Divisor D;
        D.parts.emplace_back(p1_, 1);
        D.parts.emplace_back(place_from_poly(V, f, seed_), 1);
        divisor_sort(V, D);
        out = std::move(D);
        return true;
    }
    return false;
}

void QuadPairStream::save(Writer& w) const {
    w.put_u64(rank_);
    w.put_u32(u32(seen_.size()));
    for (auto& k : seen_) {
        w.put_u32(u32(k.size()));
        for (u32 v : k) w.put_u32(v);
    }
}

void QuadPairStream::load(Reader& r) {
    rank_ = r.get_u64();
    seen_.clear();
    u32 cnt = r.get_u32();
    for (u32 i = 0; i < cnt; ++i) {
        u32 len = r.get_u32();
        std::vector<u32> k(len);
        for (u32 j = 0; j < len; ++j) k[j] = r.get_u32();
        seen_.insert(std::move(k));
    }
}

u64 QuadPairStream::seen_bytes() const {
    u64 b = 0;
    for (auto& k : seen_) b += 4 * k.size();
    return b;
}

// ------------------------------------------------------------ ReducedTypeStream

namespace {

Place infinity_place(const TowerView& V) {
    return place_from_point(V, ProjPoint{true, V.zero()});
}
Place zero_place(const TowerView& V) {
    return place_from_point(V, ProjPoint{false, V.zero()});
}
Place one_place(const TowerView& V) {
    return place_from_point(V, ProjPoint{false, V.one()});
}

// lambda key of a pair divisor
std::vector<u32> pair_lambda_key(const TowerView& V, const Place& A, const Place& B) {
    return V.element_key(lambda_invariant(V, A.poly, B.poly));
}

bool contains_place(const TowerView& V, const Divisor& D, const Place& P) {
    for (auto& [pl, m] : D.parts) {
        (void)m;
        if (place_eq(V, pl, P)) return true;
    }
    return false;
}

}  // namespace

ReducedTypeStream::ReducedTypeStream(std::shared_ptr<const TowerView> V, GaloisType M, u64 seed)
    : V_(std::move(V)), M_(std::move(M)), seed_(seed) {
    const TowerView& Vv = *V_;
    const auto& m = M_.m;
    auto small_list = [&](std::vector<Divisor> l) {
        kind_ = Kind::SmallList;
        list_ = std::move(l);
    };
    if (m.empty()) throw std::invalid_argument("ReducedTypeStream: empty type");
    if (m == std::vector<u32>{1}) {
        Divisor D;
        D.parts.emplace_back(infinity_place(Vv), 1);
        small_list({D});
    } else if (m == std::vector<u32>{1, 1}) {
        Divisor D;
        D.parts.emplace_back(infinity_place(Vv), 1);
        D.parts.emplace_back(zero_place(Vv), 1);
        divisor_sort(Vv, D);
        small_list({D});
    } else if (m == std::vector<u32>{2}) {
        Divisor D;
        D.parts.emplace_back(place_from_poly(Vv, canonical_quadratic(Vv), seed_), 1);
        small_list({D});
    } else if (m == std::vector<u32>{2, 1}) {
        Divisor D;
        D.parts.emplace_back(place_from_poly(Vv, canonical_quadratic(Vv), seed_), 1);
        D.parts.emplace_back(infinity_place(Vv), 1);
        divisor_sort(Vv, D);
        small_list({D});
    } else if (m == std::vector<u32>{2, 1, 1}) {
        kind_ = Kind::TwoOneOne;
    } else if (m[0] >= 3) {
        kind_ = Kind::AnchoredPlace;
        anchor_places_ = std::make_unique<PlacesStream>(V_, m[0], seed_);
        tuples_ = std::make_unique<AllReducedTuples>(
            V_, GaloisType{std::vector<u32>(m.begin() + 1, m.end())}, seed_);
    } else if (m.size() >= 2 && m[0] == 2 && m[1] == 2) {
        kind_ = Kind::AnchoredPair;
        anchor_pairs_ = std::make_unique<QuadPairStream>(V_, seed_);
        tuples_ = std::make_unique<AllReducedTuples>(
            V_, GaloisType{std::vector<u32>(m.begin() + 2, m.end())}, seed_);
    } else {
        // m2 = 1 with at least three entries equal to 1
        u32 ones = 0;
        for (u32 x : m)
            if (x == 1) ++ones;
        if (ones < 3 || (m[0] > 2) || (m.size() >= 2 && m[1] > 1))
            throw std::logic_error("ReducedTypeStream: unhandled type");
        kind_ = Kind::NormalizedOnes;
        std::vector<u32> rest(m.begin(), m.end());
        for (int k = 0; k < 3; ++k) rest.pop_back();  // drop three trailing 1s
        tuples_ = std::make_unique<AllReducedTuples>(V_, GaloisType{rest}, seed_);
        anchor_.parts.clear();
        anchor_.parts.emplace_back(infinity_place(Vv), 1);
        anchor_.parts.emplace_back(zero_place(Vv), 1);
        anchor_.parts.emplace_back(one_place(Vv), 1);
        divisor_sort(Vv, anchor_);
        have_anchor_ = true;
    }
}

ReducedTypeStream::~ReducedTypeStream() = default;
ReducedTypeStream::ReducedTypeStream(ReducedTypeStream&&) noexcept = default;

bool ReducedTypeStream::advance_anchor() {
    const TowerView& V = *V_;
    if (kind_ == Kind::AnchoredPlace) {
        HomPoly f;
        // PlacesStream::next is declared in enum_places.hpp
        if (!anchor_places_->next(f)) return false;
        anchor_.parts.clear();
        anchor_.parts.emplace_back(place_from_poly(V, f, seed_), 1);
        anchor_key_ = cross_key(V, f);
        have_anchor_ = true;
        tuples_ = std::make_unique<AllReducedTuples>(
            V_, GaloisType{std::vector<u32>(M_.m.begin() + 1, M_.m.end())}, seed_);
        return true;
    }
    if (kind_ == Kind::AnchoredPair) {
        Divisor pr;
        if (!anchor_pairs_->next(pr)) return false;
        anchor_ = pr;
        anchor_key_ = pair_lambda_key(V, pr.parts[0].first, pr.parts[1].first);
        have_anchor_ = true;
        tuples_ = std::make_unique<AllReducedTuples>(
            V_, GaloisType{std::vector<u32>(M_.m.begin() + 2, M_.m.end())}, seed_);
        return true;
    }
    return false;
}

bool ReducedTypeStream::next(Divisor& out) {
    const TowerView& V = *V_;
    switch (kind_) {
        case Kind::SmallList:
            if (idx_ < list_.size()) {
                out = list_[idx_++];
                return true;
            }
            return false;
        case Kind::TwoOneOne: {
            u64 space = quadratic_rank_space(V);
            Place pinf = infinity_place(V);
            Place pz = zero_place(V);
            while (rank_ < space) {
                u64 r = rank_++;
                HomPoly f = hp_zero(V, 2);
                f.c[2] = V.one();
                f.c[1] = V.base_from_index(r / V.q());
                f.c[0] = V.base_from_index(r % V.q());
                if (!is_irreducible(V, f)) continue;
                // keep f only if minimal in its orbit under the stabilizer
                // of {inf, 0} (diagonal and antidiagonal classes)
                bool minimal = true;
                auto fkey = poly_key(V, f);
                for (u64 ia = 1; ia < V.q() && minimal; ++ia) {
                    Mat2 diag{V.base_from_index(ia), V.zero(), V.zero(), V.one()};
                    if (poly_key(V, act_on_poly(V, diag, f)) < fkey) minimal = false;
                    Mat2 anti{V.zero(), V.base_from_index(ia), V.one(), V.zero()};
                    if (minimal && poly_key(V, act_on_poly(V, anti, f)) < fkey) minimal = false;
                }
                if (!minimal) continue;
                Divisor D;
                D.parts.emplace_back(place_from_poly(V, f, seed_), 1);
                D.parts.emplace_back(pinf, 1);
                D.parts.emplace_back(pz, 1);
                divisor_sort(V, D);
                out = std::move(D);
                return true;
            }
            return false;
        }
        case Kind::AnchoredPlace: {
            u32 m1 = M_.m[0];
            for (;;) {
                if (!have_anchor_) {
                    if (!advance_anchor()) return false;
                }
                Divisor Dp;
                bool got = tuples_->next(Dp);
                if (!got) {
                    have_anchor_ = false;
                    continue;
                }
                const Place& P1 = anchor_.parts[0].first;
                if (contains_place(V, Dp, P1)) continue;
                // skip if some degree-m1 place of D' has a smaller invariant
                bool skip = false;
                for (auto& [pl, mm] : Dp.parts) {
                    (void)mm;
                    if (pl.deg == m1 && cross_key(V, pl.poly) < anchor_key_) { skip = true; break; }
                }
                if (skip) continue;
                Divisor D = Dp;
                D.parts.emplace_back(P1, 1);
                divisor_sort(V, D);
                HomPoly f = poly_of_divisor(V, D);
                auto fkey = poly_key(V, f);
                bool minimal = true;
                for (auto& [pl, mm] : D.parts) {
                    (void)mm;
                    if (pl.deg != m1) continue;
                    if (!(cross_key(V, pl.poly) == anchor_key_)) continue;
                    for (auto& G : maps_place_to_place(V, pl, P1)) {
                        if (poly_key(V, act_on_poly(V, G, f)) < fkey) { minimal = false; break; }
                    }
                    if (!minimal) break;
                }
                if (!minimal) continue;
                out = std::move(D);
                return true;
            }
        }
        case Kind::AnchoredPair: {
            for (;;) {
                if (!have_anchor_) {
                    if (!advance_anchor()) return false;
                }
                Divisor Dp;
                if (!tuples_->next(Dp)) {
                    have_anchor_ = false;
                    continue;
                }
                const Place& P1 = anchor_.parts[0].first;
                const Place& P2 = anchor_.parts[1].first;
                if (contains_place(V, Dp, P1) || contains_place(V, Dp, P2)) continue;
                Divisor D = Dp;
                D.parts.emplace_back(P1, 1);
                D.parts.emplace_back(P2, 1);
                divisor_sort(V, D);
                // collect the degree-2 places of D
                std::vector<const Place*> q2s;
                for (auto& [pl, mm] : D.parts) {
                    (void)mm;
                    if (pl.deg == 2) q2s.push_back(&pl);
                }
                bool skip = false;
                for (size_t i = 0; i < q2s.size() && !skip; ++i)
                    for (size_t j = i + 1; j < q2s.size() && !skip; ++j)
                        if (pair_lambda_key(V, *q2s[i], *q2s[j]) < anchor_key_) skip = true;
                if (skip) continue;
                HomPoly f = poly_of_divisor(V, D);
                auto fkey = poly_key(V, f);
                bool minimal = true;
                for (size_t i = 0; i < q2s.size() && minimal; ++i)
                    for (size_t j = i + 1; j < q2s.size() && minimal; ++j) {
                        if (!(pair_lambda_key(V, *q2s[i], *q2s[j]) == anchor_key_)) continue;
                        for (auto& G : maps_pair_to_pair(V, *q2s[i], *q2s[j], P1, P2)) {
                            if (poly_key(V, act_on_poly(V, G, f)) < fkey) { minimal = false; break; }
                        }
                    }
                if (!minimal) continue;
                out = std::move(D);
                return true;
            }
        }
        case Kind::NormalizedOnes: {
            const TowerCore& C = V.core();
            for (;;) {
                Divisor Dp;
                if (!tuples_->next(Dp)) return false;
                bool overlap = false;
                for (auto& [pl, mm] : anchor_.parts) {
                    (void)mm;
                    if (contains_place(V, Dp, pl)) { overlap = true; break; }
                }
                if (overlap) continue;
                Divisor D = Dp;
                for (auto& [pl, mm] : anchor_.parts) D.parts.emplace_back(pl, mm);
                divisor_sort(V, D);
                HomPoly f = poly_of_divisor(V, D);
                auto fkey = poly_key(V, f);
                std::vector<const Place*> rats;
                for (auto& [pl, mm] : D.parts) {
                    (void)mm;
                    if (pl.deg == 1) rats.push_back(&pl);
                }
                bool minimal = true;
                for (size_t i = 0; i < rats.size() && minimal; ++i)
                    for (size_t j = 0; j < rats.size() && minimal; ++j) {
                        if (j == i) continue;
                        for (size_t k = 0; k < rats.size() && minimal; ++k) {
                            if (k == i || k == j) continue;
                            Mat2 G = mat_inv(C, matrix_from_triple(C, rats[i]->root,
                                                                   rats[j]->root, rats[k]->root));
                            if (poly_key(V, act_on_poly(V, G, f)) < fkey) minimal = false;
                        }
                    }
                if (!minimal) continue;
                out = std::move(D);
                return true;
            }
        }
    }
    return false;
}

void ReducedTypeStream::save(Writer& w) const {
    w.put_u32(u32(kind_));
    switch (kind_) {
        case Kind::SmallList:
            w.put_u64(idx_);
            break;
        case Kind::TwoOneOne:
            w.put_u64(rank_);
            break;
        case Kind::AnchoredPlace:
        case Kind::AnchoredPair:
            if (kind_ == Kind::AnchoredPlace) anchor_places_->save(w);
            else anchor_pairs_->save(w);
            w.put_bool(have_anchor_);
            if (have_anchor_) {
                w.put_divisor(anchor_);
                tuples_->save(w);
            }
            break;
        case Kind::NormalizedOnes:
            tuples_->save(w);
            break;
    }
}

void ReducedTypeStream::load(Reader& r) {
    u32 k = r.get_u32();
    if (k != u32(kind_)) throw std::runtime_error("resume state: stream kind mismatch");
    switch (kind_) {
        case Kind::SmallList:
            idx_ = r.get_u64();
            break;
        case Kind::TwoOneOne:
            rank_ = r.get_u64();
            break;
        case Kind::AnchoredPlace:
        case Kind::AnchoredPair:
            if (kind_ == Kind::AnchoredPlace) anchor_places_->load(r);
            else anchor_pairs_->load(r);
            have_anchor_ = r.get_bool();
            if (have_anchor_) {
                anchor_ = r.get_divisor();
                const auto& m = M_.m;
                u32 skip = (kind_ == Kind::AnchoredPlace) ? 1 : 2;
                tuples_ = std::make_unique<AllReducedTuples>(
                    V_, GaloisType{std::vector<u32>(m.begin() + skip, m.end())}, seed_);
                tuples_->load(r);
                if (kind_ == Kind::AnchoredPlace) {
                    anchor_key_ = cross_key(*V_, anchor_.parts[0].first.poly);
                } else {
                    anchor_key_ = pair_lambda_key(*V_, anchor_.parts[0].first,
                                                  anchor_.parts[1].first);
                }
            }
            break;
        case Kind::NormalizedOnes:
            tuples_->load(r);
            break;
    }
}

u64 ReducedTypeStream::seen_bytes() const {
    u64 b = 0;
    if (anchor_pairs_) b += anchor_pairs_->seen_bytes();
    if (anchor_places_) b += anchor_places_->seen_bytes();
    return b;
}

// ------------------------------------------------------------ DivisorOrbitStream

DivisorOrbitStream::DivisorOrbitStream(std::shared_ptr<const TowerView> V, u32 n, u64 seed)
    : V_(std::move(V)), n_(n), seed_(seed) {
    if (n == 0) throw std::invalid_argument("divisor enumeration: n must be positive");
    for (auto& M : galois_types_upto(n))
        if (type_feasible(M, n)) types_.push_back(M);
}

DivisorOrbitStream::~DivisorOrbitStream() = default;

void DivisorOrbitStream::classes_for_support() {
    const TowerView& V = *V_;
    classes_.clear();
    class_idx_ = 0;
    auto all = multiplicity_assignments(V, support_, n_);
    std::vector<std::vector<Divisor>> groups;
    for (auto& D : all) {
        bool placed = false;
        for (auto& g : groups) {
            if (same_orbit_same_support(V, g[0], D)) {
                g.push_back(D);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({D});
    }
    for (auto& g : groups) {
        // canonical member: minimal poly_key of the monic polynomial
        size_t best = 0;
        auto bkey = poly_key(V, poly_of_divisor(V, g[0]));
        for (size_t i = 1; i < g.size(); ++i) {
            auto k = poly_key(V, poly_of_divisor(V, g[i]));
            if (k < bkey) {
                bkey = k;
                best = i;
            }
        }
        classes_.push_back(g[best]);
    }
    std::sort(classes_.begin(), classes_.end(), [&](const Divisor& a, const Divisor& b) {
        return poly_key(V, poly_of_divisor(V, a)) < poly_key(V, poly_of_divisor(V, b));
    });
}

bool DivisorOrbitStream::next(Divisor& out) {
    for (;;) {
        if (have_support_ && class_idx_ < classes_.size()) {
            out = classes_[class_idx_++];
            return true;
        }
        if (sub_) {
            Divisor S;
            if (sub_->next(S)) {
                support_ = std::move(S);
                have_support_ = true;
                classes_for_support();
                continue;
            }
            sub_.reset();
            have_support_ = false;
            ++type_idx_;
        }
        if (!sub_) {
            if (type_idx_ >= types_.size()) return false;
            sub_ = std::make_unique<ReducedTypeStream>(V_, types_[type_idx_], seed_);
        }
    }
}

void DivisorOrbitStream::save(Writer& w) const {
    w.put_u64(type_idx_);
    w.put_bool(sub_ != nullptr);
    if (sub_) sub_->save(w);
    w.put_bool(have_support_);
    if (have_support_) {
        w.put_divisor(support_);
        w.put_u64(class_idx_);
    }
}

void DivisorOrbitStream::load(Reader& r) {
    type_idx_ = r.get_u64();
    bool has_sub = r.get_bool();
    if (has_sub) {
        if (type_idx_ >= types_.size()) throw std::runtime_error("resume state: type index");
        sub_ = std::make_unique<ReducedTypeStream>(V_, types_[type_idx_], seed_);
        sub_->load(r);
    }
    have_support_ = r.get_bool();
    if (have_support_) {
        support_ = r.get_divisor();
        classes_for_support();
        class_idx_ = r.get_u64();
    }
}

u64 DivisorOrbitStream::seen_bytes() const { return sub_ ? sub_->seen_bytes() : 0; }

}  // namespace p1enum
