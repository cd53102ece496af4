#include "p1enum/gfield.hpp"

#include <algorithm>
#include <numeric>

namespace p1enum {

static u64 checked_pow_u64(u64 b, u32 e, u64 cap) {
    u64 r = 1;
    for (u32 i = 0; i < e; ++i) {
        if (r > cap / b) return 0;
        r *= b;
    }
    return r;
}

TowerView::TowerView(std::shared_ptr<const TowerCore> core, u32 s, u32 max_level)
    : core_(std::move(core)), s_(s), max_level_(max_level) {
    q_ = checked_pow_u64(core_->p(), s, u64(1) << 62);
    if (q_ == 0) throw std::invalid_argument("view: base field too large");
    data_.resize(max_level_);
    for (u32 i = 1; i <= max_level_; ++i) build_level_data(i);
}

TowerView TowerView::squared() const {
    return TowerView(core_, 2 * s_, max_level_ / 2);
}

u32 TowerView::level_of(const FieldElem& a) const {
    u32 d = a.deg();
    if (d % s_ != 0 || d == 0) throw std::invalid_argument("view: element not at a view level");
    return d / s_;
}

const TowerView::LevelData& TowerView::level_data(u32 level) const {
    if (level == 0 || level > max_level_) throw std::invalid_argument("view: bad level");
    return data_[level - 1];
}

static std::vector<std::vector<u32>> invert_matrix(const Zp& F,
                                                   const std::vector<std::vector<u32>>& cols) {
    // cols is column-major d x d; returns column-major inverse
    u32 d = u32(cols.size());
    std::vector<std::vector<u32>> M(d, std::vector<u32>(2 * d, 0));
    for (u32 j = 0; j < d; ++j)
        for (u32 i = 0; i < d; ++i) M[i][j] = cols[j][i];
    for (u32 i = 0; i < d; ++i) M[i][d + i] = 1;
    u32 rank = 0;
    for (u32 c = 0; c < d; ++c) {
        u32 r = rank;
        while (r < d && M[r][c] == 0) ++r;
        if (r == d) throw std::logic_error("view: singular tensor matrix");
        std::swap(M[rank], M[r]);
        u32 iv = F.inv(M[rank][c]);
        for (u32 j = 0; j < 2 * d; ++j) M[rank][j] = F.mul(M[rank][j], iv);
        for (u32 i = 0; i < d; ++i) {
            if (i != rank && M[i][c] != 0) {
                u32 f = M[i][c];
                for (u32 j = 0; j < 2 * d; ++j) M[i][j] = F.sub(M[i][j], F.mul(f, M[rank][j]));
            }
        }
        ++rank;
    }
    std::vector<std::vector<u32>> inv(d, std::vector<u32>(d));
    for (u32 j = 0; j < d; ++j)
        for (u32 i = 0; i < d; ++i) inv[j][i] = M[i][d + j];
    return inv;
}

void TowerView::build_level_data(u32 i) {
    const u32 d = s_ * i;
    if (!core_->has_level(d)) throw std::invalid_argument("view: core level missing");
    LevelData& D = data_[i - 1];
    D.core_deg = d;
    const Zp& F = core_->zp();

    // tensor basis u^a z^b, u = embedded base root, z = level root
    std::vector<FieldElem> upow(s_), zpow(i);
    FieldElem u = (i == 1) ? core_->gen_root(d)
                           : core_->embed(core_->gen_root(s_), d);
    upow[0] = core_->one(d);
    for (u32 a = 1; a < s_; ++a) upow[a] = core_->mul(upow[a - 1], u);
    zpow[0] = core_->one(d);
    if (i > 1) {
        FieldElem z = core_->gen_root(d);
        for (u32 b = 1; b < i; ++b) zpow[b] = core_->mul(zpow[b - 1], z);
    }
    D.to_internal.resize(d);
    for (u32 b = 0; b < i; ++b)
        for (u32 a = 0; a < s_; ++a)
            D.to_internal[b * s_ + a] = core_->mul(upow[a], zpow[b]).c;
    D.from_internal = invert_matrix(F, D.to_internal);

    // q-power matrix: columns (z^j)^q = (z^q)^j
    D.qpow_col.resize(d);
    FieldElem zq = core_->frob_p(core_->gen_root(d), s_);
    FieldElem acc = core_->one(d);
    for (u32 j = 0; j < d; ++j) {
        D.qpow_col[j] = acc.c;
        if (j + 1 < d) acc = core_->mul(acc, zq);
    }

    // canonical generator: smallest element (by key) of full order
    const TowerLevel& L = core_->level(d);
    if (!L.group_order_fact.empty()) {
        u64 qd = 1;
        for (auto& [pr, e] : L.group_order_fact)
            for (int t = 0; t < e; ++t) qd *= pr;
        // qd = p^d - 1
        for (u64 k = 1;; ++k) {
            if (k > qd) throw std::logic_error("view: no generator found");
            // key digits of k, most significant first
            std::vector<u32> key(d, 0);
            u64 v = k;
            for (u32 j = d; j-- > 0 && v;) {
                key[j] = u32(v % core_->p());
                v /= core_->p();
            }
            std::vector<u32> tensor(key.rbegin(), key.rend());
            FieldElem cand = from_tensor_coords(i, tensor);
            if (core_->is_zero(cand)) continue;
            bool prim = true;
            for (auto& [pr, e] : L.group_order_fact) {
                (void)e;
                if (core_->is_one(core_->pow(cand, qd / pr))) { prim = false; break; }
            }
            if (prim) { D.generator = cand; break; }
        }
    }
}

u64 TowerView::base_index(const FieldElem& a) const {
    u64 v = 0;
    for (u32 j = a.deg(); j-- > 0;) v = v * core_->p() + a.c[j];
    return v;
}

FieldElem TowerView::base_from_index(u64 idx) const {
    std::vector<u32> c(s_);
    for (u32 j = 0; j < s_; ++j) { c[j] = u32(idx % core_->p()); idx /= core_->p(); }
    return FieldElem(std::move(c));
}

FieldElem TowerView::frobenius(const FieldElem& a, u32 j) const {
    u32 level = level_of(a);
    const LevelData& D = level_data(level);
    const Zp& F = core_->zp();
    u32 d = a.deg();
    FieldElem cur = a;
    u32 reps = j % level;  // x^(q^level) = x
    for (u32 t = 0; t < reps; ++t) {
        std::vector<u64> acc(d, 0);
        for (u32 col = 0; col < d; ++col) {
            if (cur.c[col] == 0) continue;
            u64 cc = cur.c[col];
            const auto& C = D.qpow_col[col];
            for (u32 r = 0; r < d; ++r) acc[r] += cc * C[r];
        }
        for (u32 r = 0; r < d; ++r) cur.c[r] = u32(acc[r] % F.p);
    }
    return cur;
}

FieldElem TowerView::embed_level(const FieldElem& a, u32 target_level) const {
    u32 from = level_of(a);
    if (target_level % from != 0)
        throw std::invalid_argument("embed_level: source level does not divide target");
    return core_->embed(a, s_ * target_level);
}

std::optional<FieldElem> TowerView::contract_to_base(const FieldElem& a) const {
    u32 level = level_of(a);
    if (level == 1) return a;
    std::vector<u32> t = tensor_coords(a);
    for (size_t j = s_; j < t.size(); ++j)
        if (t[j] != 0) return std::nullopt;
    t.resize(s_);
    return FieldElem(std::move(t));
}

bool TowerView::in_base(const FieldElem& a) const {
    if (level_of(a) == 1) return true;
    return core_->in_subfield(a, s_);
}

std::vector<u32> TowerView::tensor_coords(const FieldElem& a) const {
    u32 level = level_of(a);
    const LevelData& D = level_data(level);
    const Zp& F = core_->zp();
    u32 d = a.deg();
    std::vector<u64> acc(d, 0);
    for (u32 col = 0; col < d; ++col) {
        if (a.c[col] == 0) continue;
        u64 cc = a.c[col];
        const auto& C = D.from_internal[col];
        for (u32 r = 0; r < d; ++r) acc[r] += cc * C[r];
    }
    std::vector<u32> t(d);
    for (u32 r = 0; r < d; ++r) t[r] = u32(acc[r] % F.p);
    return t;
}

FieldElem TowerView::from_tensor_coords(u32 level, const std::vector<u32>& t) const {
    const LevelData& D = level_data(level);
    const Zp& F = core_->zp();
    u32 d = D.core_deg;
    if (t.size() != d) throw std::invalid_argument("from_tensor: bad length");
    std::vector<u64> acc(d, 0);
    for (u32 col = 0; col < d; ++col) {
        if (t[col] == 0) continue;
        u64 cc = t[col];
        const auto& C = D.to_internal[col];
        for (u32 r = 0; r < d; ++r) acc[r] += cc * C[r];
    }
    std::vector<u32> c(d);
    for (u32 r = 0; r < d; ++r) c[r] = u32(acc[r] % F.p);
    return FieldElem(std::move(c));
}

std::vector<u32> TowerView::element_key(const FieldElem& a) const {
    std::vector<u32> t = tensor_coords(a);
    std::reverse(t.begin(), t.end());
    return t;
}

int TowerView::cmp(const FieldElem& a, const FieldElem& b) const {
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    std::vector<u32> ka = element_key(a), kb = element_key(b);
    if (ka < kb) return -1;
    if (kb < ka) return 1;
    return 0;
}

FieldElem TowerView::norm_to_base(const FieldElem& a) const {
    u32 level = level_of(a);
    FieldElem prod = a;
    FieldElem conj = a;
    for (u32 j = 1; j < level; ++j) {
        conj = frobenius(conj, 1);
        prod = core_->mul(prod, conj);
    }
    auto r = contract_to_base(prod);
    if (!r) throw std::logic_error("norm: not in base field");
    return *r;
}

FieldElem TowerView::trace_to_base(const FieldElem& a) const {
    u32 level = level_of(a);
    FieldElem sum = a;
    FieldElem conj = a;
    for (u32 j = 1; j < level; ++j) {
        conj = frobenius(conj, 1);
        sum = core_->add(sum, conj);
    }
    auto r = contract_to_base(sum);
    if (!r) throw std::logic_error("trace: not in base field");
    return *r;
}

u32 TowerView::abs_trace(const FieldElem& a) const {
    FieldElem sum = a;
    FieldElem conj = a;
    for (u32 j = 1; j < a.deg(); ++j) {
        conj = core_->frob_p(conj);
        sum = core_->add(sum, conj);
    }
    for (size_t j = 1; j < sum.c.size(); ++j)
        if (sum.c[j] != 0) throw std::logic_error("abs_trace: not in prime field");
    return sum.c[0];
}

u32 TowerView::degree_over_base(const FieldElem& a) const {
    u32 level = level_of(a);
    for (u32 r = 1; r <= level; ++r) {
        if (level % r != 0) continue;
        if (frobenius(a, r) == a) return r;
    }
    return level;
}

std::vector<FieldElem> TowerView::char_poly(const FieldElem& a) const {
    u32 level = level_of(a);
    u32 d = a.deg();
    // product of (X - a^(q^j)), coefficients low..high at the element's level
    std::vector<FieldElem> poly{core_->one(d)};
    FieldElem conj = a;
    for (u32 j = 0; j < level; ++j) {
        if (j > 0) conj = frobenius(conj, 1);
        // poly *= (X - conj)
        std::vector<FieldElem> next(poly.size() + 1, core_->zero(d));
        for (size_t t = 0; t < poly.size(); ++t) {
            next[t + 1] = core_->add(next[t + 1], poly[t]);
            next[t] = core_->sub(next[t], core_->mul(poly[t], conj));
        }
        poly = std::move(next);
    }
    std::vector<FieldElem> out(poly.size());
    for (size_t t = 0; t < poly.size(); ++t) {
        auto c = contract_to_base(poly[t]);
        if (!c) throw std::logic_error("char_poly: coefficient not rational");
        out[t] = *c;
    }
    return out;
}

std::vector<FieldElem> TowerView::min_poly(const FieldElem& a) const {
    u32 level = level_of(a);
    u32 d = a.deg();
    u32 r = degree_over_base(a);
    std::vector<FieldElem> poly{core_->one(d)};
    FieldElem conj = a;
    for (u32 j = 0; j < r; ++j) {
        if (j > 0) conj = frobenius(conj, 1);
        std::vector<FieldElem> next(poly.size() + 1, core_->zero(d));
        for (size_t t = 0; t < poly.size(); ++t) {
            next[t + 1] = core_->add(next[t + 1], poly[t]);
            next[t] = core_->sub(next[t], core_->mul(poly[t], conj));
        }
        poly = std::move(next);
    }
    (void)level;
    std::vector<FieldElem> out(poly.size());
    for (size_t t = 0; t < poly.size(); ++t) {
        auto c = contract_to_base(poly[t]);
        if (!c) throw std::logic_error("min_poly: coefficient not rational");
        out[t] = *c;
    }
    return out;
}

const FieldElem& TowerView::generator(u32 level) const {
    const LevelData& D = level_data(level);
    if (D.generator.c.empty())
        throw std::runtime_error("generator: group order exceeds machine bounds");
    return D.generator;
}

FieldElem TowerView::element_of_order(u32 level, u64 m) const {
    if (m == 0) throw std::invalid_argument("element_of_order: m = 0");
    const FieldElem& g = generator(level);
    const TowerLevel& L = core_->level(s_ * level);
    u64 qd = 1;
    for (auto& [pr, e] : L.group_order_fact)
        for (int t = 0; t < e; ++t) qd *= pr;
    if (qd % m != 0) throw std::invalid_argument("element_of_order: m does not divide q^i - 1");
    if (m == 1) return core_->one(s_ * level);
    if (m == qd) return g;
    if (m > (u64(1) << 24)) throw std::runtime_error("element_of_order: order too large to canonicalize");
    FieldElem base = core_->pow(g, qd / m);
    FieldElem cur = base;
    std::optional<FieldElem> best;
    std::vector<u32> best_key;
    for (u64 k = 1; k < m; ++k) {
        if (k > 1) cur = core_->mul(cur, base);
        if (std::gcd(k, m) != 1) continue;
        std::vector<u32> key = element_key(cur);
        if (!best || key < best_key) { best = cur; best_key = key; }
    }
    return *best;
}

FieldElem TowerView::omega() const {
    if (max_level_ < 2) throw std::invalid_argument("omega: level 2 not built");
    u32 d = 2 * s_;
    for (u64 k = 1;; ++k) {
        std::vector<u32> key(d, 0);
        u64 v = k;
        for (u32 j = d; j-- > 0 && v;) { key[j] = u32(v % core_->p()); v /= core_->p(); }
        if (v) throw std::logic_error("omega: search exhausted");
        std::vector<u32> tensor(key.rbegin(), key.rend());
        FieldElem cand = from_tensor_coords(2, tensor);
        if (!in_base(cand)) return cand;
    }
}

FieldElem TowerView::trace_one_elem() const {
    for (u64 k = 0; k < q_; ++k) {
        std::vector<u32> key(s_, 0);
        u64 v = k;
        for (u32 j = s_; j-- > 0 && v;) { key[j] = u32(v % core_->p()); v /= core_->p(); }
        std::vector<u32> tensor(key.rbegin(), key.rend());
        FieldElem cand(std::move(tensor));
        if (abs_trace(cand) != 0) return cand;
    }
    throw std::logic_error("trace_one_elem: none found");
}

FieldElem TowerView::nonsquare() const {
    if (core_->p() == 2) throw std::invalid_argument("nonsquare: even characteristic");
    for (u64 k = 1; k < q_; ++k) {
        std::vector<u32> key(s_, 0);
        u64 v = k;
        for (u32 j = s_; j-- > 0 && v;) { key[j] = u32(v % core_->p()); v /= core_->p(); }
        std::vector<u32> tensor(key.rbegin(), key.rend());
        FieldElem cand(std::move(tensor));
        if (core_->is_zero(cand)) continue;
        if (!core_->is_one(core_->pow(cand, (q_ - 1) / 2))) return cand;
    }
    throw std::logic_error("nonsquare: none found");
}

Tower build_tower(u32 p, u32 e, u32 max_degree, const std::vector<u32>& extra_core_degrees) {
    if (p < 2 || e == 0 || max_degree == 0) throw std::invalid_argument("build_tower: bad arguments");
    u64 q = checked_pow_u64(p, e, u64(1) << 30);
    if (q == 0) throw std::invalid_argument("build_tower: base field exceeds resource bounds");
    std::vector<u32> degs;
    for (u32 i = 1; i <= max_degree; ++i) degs.push_back(e * i);
    for (u32 d : extra_core_degrees) degs.push_back(d);
    auto core = std::make_shared<TowerCore>(p, degs);
    auto view = std::make_shared<TowerView>(core, e, max_degree);
    return Tower{core, view};
}

}  // namespace p1enum
