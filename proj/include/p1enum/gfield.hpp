#ifndef P1ENUM_GFIELD_HPP
#define P1ENUM_GFIELD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace p1enum {

using u8 = uint8_t;
using u32 = uint32_t;
using u64 = uint64_t;
using i64 = int64_t;

// Largest prime characteristic we accept.  Keeps p^2 * len inside u64
// accumulators everywhere.
inline constexpr u32 kMaxPrime = (1u << 20);

bool is_prime_u64(u64 n);
u64 mulmod_u64(u64 a, u64 b, u64 m);
u64 powmod_u64(u64 a, u64 e, u64 m);

/// Prime factorization (trial division + Pollard rho), sorted by prime.
std::vector<std::pair<u64, int>> factorize_u64(u64 n);

/// Arithmetic mod a prime p.
struct Zp {
    u32 p = 0;
    u32 add(u32 a, u32 b) const { u32 s = a + b; return s >= p ? s - p : s; }
    u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p - b; }
    u32 neg(u32 a) const { return a == 0 ? 0 : p - a; }
    u32 mul(u32 a, u32 b) const { return u32((u64(a) * b) % p); }
    u32 inv(u32 a) const;
    u32 pow(u32 a, u64 e) const;
};

/// Element of F_{p^d}, coordinates over F_p in the power basis of the
/// level's defining root.  The level degree is coords.size().
struct FieldElem {
    std::vector<u32> c;

    FieldElem() = default;
    explicit FieldElem(std::vector<u32> cc) : c(std::move(cc)) {}
    u32 deg() const { return u32(c.size()); }
    bool operator==(const FieldElem& o) const { return c == o.c; }
    bool operator!=(const FieldElem& o) const { return c != o.c; }
};

/// Discrete log / antilog / Zech tables for one small field (p^d <= 2^16).
/// Elements are packed as sum c_j p^j.
struct ZechTable {
    u32 q = 0;     // field size
    u32 qm1 = 0;   // q - 1
    static constexpr u32 kNone = 0xffffffffu;
    std::vector<u32> exp_;   // exp_[k] = packed(g^k), k < q-1
    std::vector<u32> log_;   // log_[packed] (kNone for 0)
    std::vector<u32> zech_;  // zech_[k] = log(1 + g^k), kNone if 1 + g^k = 0
    u32 log_m1 = 0;          // log(-1)

    u32 mul(u32 a, u32 b) const {
        if (a == 0 || b == 0) return 0;
        u32 s = log_[a] + log_[b];
        if (s >= qm1) s -= qm1;
        return exp_[s];
    }
    u32 add(u32 a, u32 b) const {
        if (a == 0) return b;
        if (b == 0) return a;
        u32 la = log_[a], lb = log_[b];
        u32 d = lb >= la ? lb - la : lb + qm1 - la;
        u32 z = zech_[d];
        if (z == kNone) return 0;
        u32 s = la + z;
        if (s >= qm1) s -= qm1;
        return exp_[s];
    }
    u32 neg(u32 a) const {
        if (a == 0) return 0;
        u32 s = log_[a] + log_m1;
        if (s >= qm1) s -= qm1;
        return exp_[s];
    }
    u32 sub(u32 a, u32 b) const { return add(a, neg(b)); }
    u32 inv(u32 a) const {
        u32 l = log_[a];
        return exp_[l == 0 ? 0 : qm1 - l];
    }
    u32 pow(u32 a, u64 e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        return exp_[u32((u64(log_[a]) * (e % qm1)) % qm1)];
    }
};

/// One level F_{p^deg} of the tower: defining modulus over F_p, reduction
/// rows, p-power matrix, subfield embedding data, optional log tables.
struct TowerLevel {
    u32 deg = 0;
    std::vector<u32> modulus;                 // monic, length deg+1
    std::vector<std::vector<u32>> xred;       // x^{deg+k} mod modulus
    std::vector<std::vector<u32>> frobp_col;  // column j = (z^j)^p
    std::map<u32, FieldElem> subroot;         // b -> image of level-b root
    std::vector<std::pair<u64, int>> group_order_fact;  // factors of p^deg - 1
    std::unique_ptr<ZechTable> zech;
};

/// Compatible models of F_{p^d} for a chosen set of degrees d.  Immutable
/// after construction; all operations are const and thread-safe.
class TowerCore {
public:
    TowerCore(u32 p, const std::vector<u32>& degrees);

    u32 p() const { return zp_.p; }
    const Zp& zp() const { return zp_; }
    bool has_level(u32 d) const { return levels_.count(d) != 0; }
    const TowerLevel& level(u32 d) const;
    std::vector<u32> level_degrees() const;

    FieldElem zero(u32 d) const { return FieldElem(std::vector<u32>(d, 0)); }
    FieldElem one(u32 d) const;
    /// Element of F_p embedded as a constant at level d.
    FieldElem scalar(u32 d, u32 a) const;
    /// The defining root z of level d (degree-1 coordinate vector).
    FieldElem gen_root(u32 d) const;

    bool is_zero(const FieldElem& a) const;
    bool is_one(const FieldElem& a) const;
    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem mul_scalar(const FieldElem& a, u32 s) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }
    FieldElem pow(const FieldElem& a, u64 e) const;
    /// x^(p^times)
    FieldElem frob_p(const FieldElem& a, u32 times = 1) const;

    /// Multiplicative order (0 is rejected).
    u64 order_of(const FieldElem& a) const;

    /// Embedding into a larger level (deg a | d); compatible along chains.
    FieldElem embed(const FieldElem& a, u32 d) const;
    /// Inverse of embed when a lies in the image of level d; nullopt otherwise.
    std::optional<FieldElem> contract(const FieldElem& a, u32 d) const;
    /// True iff a is fixed by x -> x^(p^b), i.e. lies in the level-b subfield.
    bool in_subfield(const FieldElem& a, u32 b) const;

    /// Evaluate a polynomial with F_p coefficients at a level element.
    FieldElem eval_fp_poly(const std::vector<u32>& poly, const FieldElem& x) const;

private:
    Zp zp_;
    std::map<u32, TowerLevel> levels_;

    void build_level(u32 d);
    void build_embeddings(u32 d);
};

/// View of a tower as extensions of a base field F_q, q = p^s: view level i
/// is the core level of degree s*i.  Holds the per-level data that depends
/// on the choice of base (tensor bases, canonical generators, ...).
class TowerView {
public:
    struct LevelData {
        u32 core_deg = 0;
        // column-major d x d matrices over F_p; tensor coordinate (b*s + a)
        // corresponds to u^a * z^b with u the embedded base root.
        std::vector<std::vector<u32>> to_internal;    // tensor -> internal
        std::vector<std::vector<u32>> from_internal;  // internal -> tensor
        std::vector<std::vector<u32>> qpow_col;       // column j = (z^j)^q
        FieldElem generator;                          // canonical generator
    };

    TowerView(std::shared_ptr<const TowerCore> core, u32 s, u32 max_level);

    const TowerCore& core() const { return *core_; }
    std::shared_ptr<const TowerCore> core_ptr() const { return core_; }
    u32 p() const { return core_->p(); }
    u32 s() const { return s_; }
    u64 q() const { return q_; }
    u32 max_level() const { return max_level_; }
    u32 core_deg(u32 level) const { return s_ * level; }
    u32 level_of(const FieldElem& a) const;

    /// View over F_{q^2} sharing this core (even-degree levels).
    TowerView squared() const;

    // -- base field helpers (level 1 elements) --
    FieldElem zero() const { return core_->zero(s_); }
    FieldElem one() const { return core_->one(s_); }
    FieldElem scalar(u32 a) const { return core_->scalar(s_, a); }
    u64 base_index(const FieldElem& a) const;       // packed coords
    FieldElem base_from_index(u64 idx) const;

    // -- generic ops forwarded to the core --
    FieldElem add(const FieldElem& a, const FieldElem& b) const { return core_->add(a, b); }
    FieldElem sub(const FieldElem& a, const FieldElem& b) const { return core_->sub(a, b); }
    FieldElem neg(const FieldElem& a) const { return core_->neg(a); }
    FieldElem mul(const FieldElem& a, const FieldElem& b) const { return core_->mul(a, b); }
    FieldElem inv(const FieldElem& a) const { return core_->inv(a); }
    FieldElem div(const FieldElem& a, const FieldElem& b) const { return core_->div(a, b); }
    FieldElem pow(const FieldElem& a, u64 e) const { return core_->pow(a, e); }
    bool is_zero(const FieldElem& a) const { return core_->is_zero(a); }
    bool is_one(const FieldElem& a) const { return core_->is_one(a); }

    /// x^(q^j) via the precomputed q-power map of x's level.
    FieldElem frobenius(const FieldElem& a, u32 j = 1) const;
    /// Embed a view-level element into a higher view level (d | m).
    FieldElem embed_level(const FieldElem& a, u32 target_level) const;
    /// Contract to the base field if possible.
    std::optional<FieldElem> contract_to_base(const FieldElem& a) const;
    bool in_base(const FieldElem& a) const;

    /// Tensor coordinates: length s*i vector over F_p, blocks of s entries
    /// per tower basis index (the external serialization order).
    std::vector<u32> tensor_coords(const FieldElem& a) const;
    FieldElem from_tensor_coords(u32 level, const std::vector<u32>& t) const;

    /// Total-order key: tensor coordinates read from highest basis index
    /// down (0 is minimal at every level).
    std::vector<u32> element_key(const FieldElem& a) const;
    int cmp(const FieldElem& a, const FieldElem& b) const;

    /// Norm and trace to the base field, as base elements.
    FieldElem norm_to_base(const FieldElem& a) const;
    FieldElem trace_to_base(const FieldElem& a) const;
    /// Absolute trace to F_p, as an integer in [0, p).
    u32 abs_trace(const FieldElem& a) const;
    /// Characteristic polynomial over F_q of a level-d element: monic of
    /// degree d, coefficients are base elements (low to high).
    std::vector<FieldElem> char_poly(const FieldElem& a) const;
    /// Minimal polynomial over F_q (monic irreducible).
    std::vector<FieldElem> min_poly(const FieldElem& a) const;
    /// Degree over the base = size of the q-Frobenius orbit.
    u32 degree_over_base(const FieldElem& a) const;

    /// Canonical generator of (F_{q^i})^* (smallest under element_key).
    const FieldElem& generator(u32 level) const;
    /// Smallest element of order exactly m (m | q^i - 1), as a power of the
    /// canonical generator.
    FieldElem element_of_order(u32 level, u64 m) const;

    // canonical constants used downstream
    /// Smallest level-2 element outside the base field.
    FieldElem omega() const;
    /// Smallest base element with nonzero absolute trace.
    FieldElem trace_one_elem() const;
    /// Smallest non-square in the base field (odd q only).
    FieldElem nonsquare() const;

    const LevelData& level_data(u32 level) const;

private:
    std::shared_ptr<const TowerCore> core_;
    u32 s_ = 1;
    u64 q_ = 0;
    u32 max_level_ = 0;
    std::vector<LevelData> data_;  // index = level - 1

    void build_level_data(u32 level);
};

/// A tower plus its primary view over F_q = F_{p^e}.
struct Tower {
    std::shared_ptr<const TowerCore> core;
    std::shared_ptr<const TowerView> view;
};

/// Build models of F_{q^i} for 1 <= i <= max_degree, q = p^e, with
/// embeddings between all nested levels precomputed.  extra_core_degrees
/// lets callers provision levels for derived views (e.g. F_{q^2}).
Tower build_tower(u32 p, u32 e, u32 max_degree,
                  const std::vector<u32>& extra_core_degrees = {});

/// Lexicographically smallest monic irreducible of given degree over F_p
/// (coefficients compared low-to-high as the major key).
std::vector<u32> smallest_irreducible_fp(u32 p, u32 d);

}  // namespace p1enum

#endif
