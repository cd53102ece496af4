#include "p1enum/gfield.hpp"

#include "p1enum/fpx.hpp"
#include "p1enum/unipoly.hpp"

#include <algorithm>
#include <numeric>

namespace p1enum {

// ---------------------------------------------------------------- integers

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return u64((unsigned __int128)a * b % m);
}

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

static u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mulmod_u64(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

std::vector<std::pair<u64, int>> factorize_u64(u64 n) {
    std::vector<u64> primes;
    std::vector<u64> stack{n};
    while (!stack.empty()) {
        u64 m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_prime_u64(m)) { primes.push_back(m); continue; }
        // peel small factors first
        bool found = false;
        for (u64 p = 2; p < 100 && p * p <= m; ++p) {
            if (m % p == 0) {
                stack.push_back(p);
                stack.push_back(m / p);
                found = true;
                break;
            }
        }
        if (!found) {
            u64 d = pollard_rho(m);
            stack.push_back(d);
            stack.push_back(m / d);
        }
    }
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<u64, int>> out;
    for (u64 p : primes) {
        if (!out.empty() && out.back().first == p) out.back().second++;
        else out.emplace_back(p, 1);
    }
    return out;
}

// ---------------------------------------------------------------- Zp

u32 Zp::inv(u32 a) const {
    if (a == 0) throw std::invalid_argument("Zp: inverse of zero");
    i64 t = 0, nt = 1, r = i64(p), nr = i64(a);
    while (nr != 0) {
        i64 q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return u32(t < 0 ? t + p : t);
}

u32 Zp::pow(u32 a, u64 e) const {
    u64 r = 1, b = a % p;
    while (e) {
        if (e & 1) r = (r * b) % p;
        b = (b * b) % p;
        e >>= 1;
    }
    return u32(r);
}

// ---------------------------------------------------------------- moduli

std::vector<u32> smallest_irreducible_fp(u32 p, u32 d) {
    Zp F{p};
    if (d == 1) return {0, 1};  // z itself
    // enumerate monic candidates ordered with the constant coefficient as
    // the most significant key digit
    std::vector<u32> digits(d, 0);
    for (;;) {
        fpx::Poly cand(d + 1, 0);
        cand[d] = 1;
        for (u32 i = 0; i < d; ++i) cand[i] = digits[i];
        if (fpx::is_irreducible(F, cand)) return cand;
        // increment: c_{d-1} fastest, c_0 slowest
        u32 i = d;
        while (i > 0) {
            --i;
            if (++digits[d - 1 - i] < p) break;
            digits[d - 1 - i] = 0;
            if (i == 0) throw std::logic_error("no irreducible found");
        }
    }
}

// ---------------------------------------------------------------- TowerCore

TowerCore::TowerCore(u32 p, const std::vector<u32>& degrees) {
    if (p < 2 || p >= kMaxPrime || !is_prime_u64(p))
        throw std::invalid_argument("tower: characteristic must be a prime < 2^20");
    zp_ = Zp{p};
    std::vector<u32> degs = degrees;
    degs.push_back(1);
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    for (u32 d : degs) {
        if (d == 0 || d > 4096) throw std::invalid_argument("tower: bad level degree");
        build_level(d);
        build_embeddings(d);
    }
}

const TowerLevel& TowerCore::level(u32 d) const {
    auto it = levels_.find(d);
    if (it == levels_.end()) throw std::invalid_argument("tower: level not built");
    return it->second;
}

std::vector<u32> TowerCore::level_degrees() const {
    std::vector<u32> out;
    for (auto& [d, _] : levels_) out.push_back(d);
    return out;
}

void TowerCore::build_level(u32 d) {
    TowerLevel lv;
    lv.deg = d;
    lv.modulus = smallest_irreducible_fp(zp_.p, d);

    // reduction rows x^{d+k} mod modulus
    lv.xred.resize(d);
    fpx::Poly row(d, 0);  // x^d mod m = -(m mod x^d)
    for (u32 i = 0; i < d; ++i) row[i] = zp_.neg(lv.modulus[i]);
    for (u32 k = 0; k < d; ++k) {
        lv.xred[k] = row;
        lv.xred[k].resize(d, 0);
        // row <- x*row mod m
        fpx::Poly nrow(d, 0);
        u32 top = d >= 1 && row.size() >= d ? row[d - 1] : 0;
        for (u32 i = d - 1; i >= 1; --i) nrow[i] = row[i - 1];
        nrow[0] = 0;
        if (top != 0)
            for (u32 i = 0; i < d; ++i)
                nrow[i] = zp_.add(nrow[i], zp_.mul(top, lv.xred[0][i]));
        row = std::move(nrow);
    }

    levels_.emplace(d, std::move(lv));
    TowerLevel& L = levels_.at(d);

    // p-power matrix: columns (z^j)^p = (z^p)^j
    FieldElem zp_elem = pow(gen_root(d), zp_.p);
    L.frobp_col.resize(d);
    FieldElem acc = one(d);
    for (u32 j = 0; j < d; ++j) {
        L.frobp_col[j] = acc.c;
        if (j + 1 < d) acc = mul(acc, zp_elem);
    }

    // group order factorization when p^d fits
    unsigned __int128 q = 1;
    bool fits = true;
    for (u32 i = 0; i < d; ++i) {
        q *= zp_.p;
        if (q > ((unsigned __int128)1 << 62)) { fits = false; break; }
    }
    if (fits) L.group_order_fact = factorize_u64(u64(q) - 1);

    // log tables for small fields
    if (fits && u64(q) <= (1u << 16)) {
        u32 qs = u32(q);
        auto pack = [&](const FieldElem& x) {
            u32 v = 0;
            for (u32 i = x.deg(); i-- > 0;) v = v * zp_.p + x.c[i];
            return v;
        };
        auto unpack = [&](u32 v) {
            std::vector<u32> c(d);
            for (u32 i = 0; i < d; ++i) { c[i] = v % zp_.p; v /= zp_.p; }
            return FieldElem(std::move(c));
        };
        // smallest primitive element by packed index
        FieldElem g;
        for (u32 cand = 1;; ++cand) {
            if (cand >= qs) throw std::logic_error("no primitive element");
            FieldElem x = unpack(cand);
            bool prim = true;
            for (auto& [pr, _] : L.group_order_fact) {
                if (is_one(pow(x, (u64(qs) - 1) / pr))) { prim = false; break; }
            }
            if (prim) { g = x; break; }
        }
        auto T = std::make_unique<ZechTable>();
        T->q = qs;
        T->qm1 = qs - 1;
        T->exp_.resize(qs - 1);
        T->log_.assign(qs, ZechTable::kNone);
        FieldElem cur = one(d);
        for (u32 k = 0; k < qs - 1; ++k) {
            u32 pk = pack(cur);
            T->exp_[k] = pk;
            T->log_[pk] = k;
            cur = mul(cur, g);
        }
        T->zech_.assign(qs - 1, ZechTable::kNone);
        FieldElem e1 = one(d);
        for (u32 k = 0; k < qs - 1; ++k) {
            FieldElem v = add(e1, unpack(T->exp_[k]));
            u32 pv = pack(v);
            T->zech_[k] = (pv == 0) ? ZechTable::kNone : T->log_[pv];
        }
        u32 pm1 = pack(neg(e1));
        T->log_m1 = T->log_[pm1];
        L.zech = std::move(T);
    }
}

// BCS-style compatible embeddings: for each previously built level b | d,
// choose the image of the level-b root among the roots of its modulus in
// level d, constrained by the embeddings already fixed for b' | b.
void TowerCore::build_embeddings(u32 d) {
    TowerLevel& L = levels_.at(d);
    std::vector<u32> subdegs;
    for (auto& [b, _] : levels_)
        if (b < d && d % b == 0) subdegs.push_back(b);
    std::sort(subdegs.begin(), subdegs.end());
    for (u32 b : subdegs) {
        if (b == 1) {
            // modulus of level 1 is z; its root is 0
            L.subroot.emplace(1, zero(d));
            continue;
        }
        // find one root of m_b inside level d:
        // 1. the subfield of size p^b as the kernel of frob^b - id
        std::vector<std::vector<u32>> A(d, std::vector<u32>(d, 0));
        for (u32 j = 0; j < d; ++j) {
            FieldElem col(std::vector<u32>(d, 0));
            col.c[j] = 1;
            FieldElem img = frob_p(col, b);
            for (u32 i = 0; i < d; ++i) A[i][j] = img.c[i];
            A[j][j] = zp_.sub(A[j][j], 1);
        }
        // kernel basis by Gaussian elimination
        std::vector<std::vector<u32>> M = A;
        std::vector<int> pivot_col(d, -1);
        u32 rank = 0;
        for (u32 c = 0; c < d && rank < d; ++c) {
            u32 r = rank;
            while (r < d && M[r][c] == 0) ++r;
            if (r == d) continue;
            std::swap(M[rank], M[r]);
            u32 iv = zp_.inv(M[rank][c]);
            for (u32 j = 0; j < d; ++j) M[rank][j] = zp_.mul(M[rank][j], iv);
            for (u32 i = 0; i < d; ++i) {
                if (i != rank && M[i][c] != 0) {
                    u32 f = M[i][c];
                    for (u32 j = 0; j < d; ++j)
                        M[i][j] = zp_.sub(M[i][j], zp_.mul(f, M[rank][j]));
                }
            }
            pivot_col[rank] = int(c);
            ++rank;
        }
        std::vector<FieldElem> kernel;
        std::vector<bool> is_pivot(d, false);
        for (u32 r = 0; r < rank; ++r) is_pivot[size_t(pivot_col[r])] = true;
        for (u32 c = 0; c < d; ++c) {
            if (is_pivot[c]) continue;
            std::vector<u32> v(d, 0);
            v[c] = 1;
            for (u32 r = 0; r < rank; ++r)
                v[size_t(pivot_col[r])] = zp_.neg(M[r][c]);
            kernel.emplace_back(std::move(v));
        }
        if (kernel.size() != b) throw std::logic_error("embedding: bad subfield dimension");

        // 2. a generator rho of the subfield (deterministic search)
        const fpx::Poly& mb = levels_.at(b).modulus;
        SplitMix64 rng(hash_combine_u64(0x70316e756du, (u64(d) << 32) | b));
        FieldElem rho;
        fpx::Poly mu;
        for (int attempt = 0;; ++attempt) {
            if (attempt > 500) throw std::logic_error("embedding: no subfield generator");
            FieldElem cand = zero(d);
            for (auto& k : kernel)
                cand = add(cand, mul_scalar(k, u32(rng.next() % zp_.p)));
            if (is_zero(cand)) continue;
            // minimal polynomial of cand over F_p via linear algebra
            std::vector<FieldElem> pows{one(d)};
            for (u32 i = 1; i <= b; ++i) pows.push_back(mul(pows.back(), cand));
            // find least k with 1, cand, ..., cand^k dependent
            std::vector<std::vector<u32>> rows;  // echelon rows over F_p, d wide
            std::vector<std::vector<u32>> coefs; // expression of each row
            bool full_degree = true;
            fpx::Poly dep;
            for (u32 k = 0; k <= b; ++k) {
                std::vector<u32> v = pows[k].c;
                std::vector<u32> expr(b + 1, 0);
                expr[k] = 1;
                for (size_t r = 0; r < rows.size(); ++r) {
                    // eliminate with stored echelon rows
                    u32 lead = 0;
                    while (lead < d && rows[r][lead] == 0) ++lead;
                    if (lead < d && v[lead] != 0) {
                        u32 f = zp_.mul(v[lead], zp_.inv(rows[r][lead]));
                        for (u32 j = 0; j < d; ++j) v[j] = zp_.sub(v[j], zp_.mul(f, rows[r][j]));
                        for (u32 j = 0; j <= b; ++j) expr[j] = zp_.sub(expr[j], zp_.mul(f, coefs[r][j]));
                    }
                }
                bool zero_v = std::all_of(v.begin(), v.end(), [](u32 x) { return x == 0; });
                if (zero_v) {
                    if (k < b) full_degree = false;
                    dep = expr;
                    fpx::trim(dep);
                    break;
                }
                rows.push_back(v);
                coefs.push_back(expr);
            }
            if (!full_degree) continue;
            mu = dep;
            fpx::make_monic(zp_, mu);
            rho = cand;
            break;
        }

        // 3. root of m_b over the synthetic copy F_p[w]/mu
        unsigned __int128 qb = 1;
        for (u32 i = 0; i < b; ++i) qb *= zp_.p;
        if (qb > ((unsigned __int128)1 << 62))
            throw std::runtime_error("embedding: subfield too large");
        SynthOps S{&zp_, &mu, zp_.p, b, u64(qb)};
        up::PV<SynthOps> mb_lift(mb.size());
        for (size_t i = 0; i < mb.size(); ++i)
            mb_lift[i] = mb[i] ? fpx::Poly{mb[i]} : fpx::Poly{};
        auto rts = up::roots(S, mb_lift, hash_combine_u64(0x726f6f74u, (u64(d) << 32) | b));
        if (rts.empty()) throw std::logic_error("embedding: modulus has no subfield root");
        // map the first root into level d (evaluate its w-expression at rho)
        FieldElem beta = zero(d);
        {
            const fpx::Poly& r0 = rts[0];
            FieldElem rp = one(d);
            for (size_t j = 0; j < r0.size(); ++j) {
                if (r0[j]) beta = add(beta, mul_scalar(rp, r0[j]));
                if (j + 1 < r0.size()) rp = mul(rp, rho);
            }
        }
        // 4. all conjugate roots; keep those compatible with embeddings
        // already chosen for levels b' | b, pick the smallest
        std::vector<FieldElem> candidates;
        FieldElem c0 = beta;
        for (u32 j = 0; j < b; ++j) {
            candidates.push_back(c0);
            c0 = frob_p(c0);
        }
        const TowerLevel& Lb = levels_.at(b);
        std::optional<FieldElem> best;
        for (const FieldElem& cand : candidates) {
            bool ok = true;
            for (auto& [bp, root_in_b] : Lb.subroot) {
                if (bp == 1) continue;
                // image of the level-bp root through (z_b -> cand)
                FieldElem via = eval_fp_poly(root_in_b.c, cand);
                if (!(via == L.subroot.at(bp))) { ok = false; break; }
            }
            if (ok && (!best || cand.c < best->c)) best = cand;
        }
        if (!best) throw std::logic_error("embedding: no compatible root");
        L.subroot.emplace(b, *best);
    }
}

FieldElem TowerCore::one(u32 d) const {
    std::vector<u32> c(d, 0);
    c[0] = 1;
    return FieldElem(std::move(c));
}

FieldElem TowerCore::scalar(u32 d, u32 a) const {
    std::vector<u32> c(d, 0);
    c[0] = a % zp_.p;
    return FieldElem(std::move(c));
}

FieldElem TowerCore::gen_root(u32 d) const {
    std::vector<u32> c(d, 0);
    if (d > 1) c[1] = 1;
    return FieldElem(std::move(c));
}

bool TowerCore::is_zero(const FieldElem& a) const {
    return std::all_of(a.c.begin(), a.c.end(), [](u32 x) { return x == 0; });
}

bool TowerCore::is_one(const FieldElem& a) const {
    if (a.c.empty() || a.c[0] != 1) return false;
    for (size_t i = 1; i < a.c.size(); ++i)
        if (a.c[i] != 0) return false;
    return true;
}

FieldElem TowerCore::add(const FieldElem& a, const FieldElem& b) const {
    FieldElem r = a;
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = zp_.add(r.c[i], b.c[i]);
    return r;
}

FieldElem TowerCore::sub(const FieldElem& a, const FieldElem& b) const {
    FieldElem r = a;
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = zp_.sub(r.c[i], b.c[i]);
    return r;
}

FieldElem TowerCore::neg(const FieldElem& a) const {
    FieldElem r = a;
    for (auto& x : r.c) x = zp_.neg(x);
    return r;
}

FieldElem TowerCore::mul(const FieldElem& a, const FieldElem& b) const {
    u32 d = a.deg();
    if (d != b.deg()) throw std::invalid_argument("mul: level mismatch");
    if (d == 1) return FieldElem({zp_.mul(a.c[0], b.c[0])});
    const TowerLevel& L = level(d);
    std::vector<u64> acc(2 * d - 1, 0);
    for (u32 i = 0; i < d; ++i) {
        if (a.c[i] == 0) continue;
        u64 ai = a.c[i];
        for (u32 j = 0; j < d; ++j) acc[i + j] += ai * b.c[j];
    }
    std::vector<u32> r(d, 0);
    for (u32 i = 0; i < d; ++i) r[i] = u32(acc[i] % zp_.p);
    for (u32 k = d; k < 2 * d - 1; ++k) {
        u32 ck = u32(acc[k] % zp_.p);
        if (ck == 0) continue;
        const auto& row = L.xred[k - d];
        for (u32 i = 0; i < d; ++i) r[i] = zp_.add(r[i], zp_.mul(ck, row[i]));
    }
    return FieldElem(std::move(r));
}

FieldElem TowerCore::mul_scalar(const FieldElem& a, u32 s) const {
    FieldElem r = a;
    for (auto& x : r.c) x = zp_.mul(x, s);
    return r;
}

FieldElem TowerCore::inv(const FieldElem& a) const {
    if (is_zero(a)) throw std::invalid_argument("inv: zero");
    u32 d = a.deg();
    if (d == 1) return FieldElem({zp_.inv(a.c[0])});
    fpx::Poly ap = a.c;
    fpx::trim(ap);
    fpx::Poly r = fpx::invmod(zp_, ap, level(d).modulus);
    r.resize(d, 0);
    return FieldElem(std::move(r));
}

FieldElem TowerCore::pow(const FieldElem& a, u64 e) const {
    FieldElem r = one(a.deg());
    FieldElem b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return r;
}

FieldElem TowerCore::frob_p(const FieldElem& a, u32 times) const {
    u32 d = a.deg();
    if (d == 1) return a;
    const TowerLevel& L = level(d);
    FieldElem cur = a;
    for (u32 t = 0; t < times; ++t) {
        std::vector<u64> acc(d, 0);
        for (u32 j = 0; j < d; ++j) {
            if (cur.c[j] == 0) continue;
            u64 cj = cur.c[j];
            const auto& col = L.frobp_col[j];
            for (u32 i = 0; i < d; ++i) acc[i] += cj * col[i];
        }
        for (u32 i = 0; i < d; ++i) cur.c[i] = u32(acc[i] % zp_.p);
    }
    return cur;
}

u64 TowerCore::order_of(const FieldElem& a) const {
    if (is_zero(a)) throw std::invalid_argument("order_of: zero");
    const TowerLevel& L = level(a.deg());
    if (L.group_order_fact.empty() && a.deg() > 1)
        throw std::runtime_error("order_of: group order not available");
    u64 n = 1;
    for (auto& [p, e] : L.group_order_fact)
        for (int i = 0; i < e; ++i) n *= p;
    if (a.deg() == 1) n = zp_.p - 1;
    u64 ord = n;
    for (auto& [p, e] : L.group_order_fact) {
        for (int i = 0; i < e; ++i) {
            if (is_one(pow(a, ord / p))) ord /= p;
            else break;
        }
    }
    return ord;
}

FieldElem TowerCore::embed(const FieldElem& a, u32 d) const {
    u32 b = a.deg();
    if (b == d) return a;
    if (d % b != 0) throw std::invalid_argument("embed: not a subfield");
    const TowerLevel& L = level(d);
    auto it = L.subroot.find(b);
    if (it == L.subroot.end()) throw std::invalid_argument("embed: embedding not built");
    return eval_fp_poly(a.c, it->second);
}

std::optional<FieldElem> TowerCore::contract(const FieldElem& a, u32 d) const {
    u32 big = a.deg();
    if (big == d) return a;
    if (big % d != 0) return std::nullopt;
    if (!in_subfield(a, d)) return std::nullopt;
    // solve embed(y) = a by Gaussian elimination on the embedding matrix
    const TowerLevel& L = level(big);
    const FieldElem& root = L.subroot.at(d);
    std::vector<std::vector<u32>> M(big, std::vector<u32>(d + 1, 0));
    FieldElem rp = one(big);
    for (u32 j = 0; j < d; ++j) {
        for (u32 i = 0; i < big; ++i) M[i][j] = rp.c[i];
        if (j + 1 < d) rp = mul(rp, root);
    }
    for (u32 i = 0; i < big; ++i) M[i][d] = a.c[i];
    u32 rank = 0;
    std::vector<int> where(d, -1);
    for (u32 c = 0; c < d && rank < big; ++c) {
        u32 r = rank;
        while (r < big && M[r][c] == 0) ++r;
        if (r == big) continue;
        std::swap(M[rank], M[r]);
        u32 iv = zp_.inv(M[rank][c]);
        for (u32 j = 0; j <= d; ++j) M[rank][j] = zp_.mul(M[rank][j], iv);
        for (u32 i = 0; i < big; ++i) {
            if (i != rank && M[i][c] != 0) {
                u32 f = M[i][c];
                for (u32 j = 0; j <= d; ++j) M[i][j] = zp_.sub(M[i][j], zp_.mul(f, M[rank][j]));
            }
        }
        where[c] = int(rank);
        ++rank;
    }
    std::vector<u32> y(d, 0);
    for (u32 c = 0; c < d; ++c)
        if (where[c] >= 0) y[c] = M[size_t(where[c])][d];
    FieldElem res(std::move(y));
    if (!(embed(res, big) == a)) return std::nullopt;
    return res;
}

bool TowerCore::in_subfield(const FieldElem& a, u32 b) const {
    if (a.deg() == b) return true;
    if (a.deg() % b != 0) return false;
    return frob_p(a, b) == a;
}

FieldElem TowerCore::eval_fp_poly(const std::vector<u32>& poly, const FieldElem& x) const {
    FieldElem r = zero(x.deg());
    for (size_t i = poly.size(); i-- > 0;) {
        r = mul(r, x);
        r.c[0] = zp_.add(r.c[0], poly[i] % zp_.p);
    }
    return r;
}

}  // namespace p1enum
