#include "p1enum/enum_places.hpp"

#include "p1enum/polyfactor.hpp"

#include <algorithm>

namespace p1enum {

std::pair<u32, u32> decompose_prime_power(u64 q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    u64 p = q;
    for (u64 d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    u32 e = 0;
    u64 v = q;
    while (v > 1) {
        if (v % p != 0) throw std::invalid_argument("q is not a prime power");
        v /= p;
        ++e;
    }
    if (p >= kMaxPrime) throw std::invalid_argument("characteristic exceeds resource bounds");
    return {u32(p), e};
}

u32 required_tower_degree(u64 q, u32 n) {
    u32 need = n;
    if (n >= 3 && n % 2 == 1) {
        if ((q + 1) % n == 0) need = std::max(need, 2 * n);
        if (n >= 5) {
            for (u32 m = 1; m <= (n + 1) / 2; ++m)
                need = std::max(need, required_tower_degree(q, m));
        }
    } else if (n >= 6 && n % 2 == 0) {
        u32 sub = required_tower_degree(q * q, n / 2);
        need = std::max(need, 2 * sub);
    }
    return need;
}

Tower tower_for(u64 q, u32 n) {
    auto [p, e] = decompose_prime_power(q);
    return build_tower(p, e, required_tower_degree(q, n));
}

// =====================================================================

namespace {

// ---------- function sub-streams for the odd algorithm ----------

enum class FnKind : u32 {
    Generic = 0,
    TripleInf = 1,   // D = 3 P_inf (n in {5, 7})
    DoubleInfZero = 2,  // D = 2 P_inf + P_0 (n = 5)
    QuadInf = 3,     // D = 4 P_inf (n = 7)
};

bool is_m_pinf(const TowerView& V, const Divisor& D, u32 m) {
    (void)V;
    return D.parts.size() == 1 && D.parts[0].first.deg == 1 && D.parts[0].first.root.inf &&
           D.parts[0].second == m;
}

bool is_2pinf_p0(const TowerView& V, const Divisor& D) {
    if (D.parts.size() != 2) return false;
    const auto& a = D.parts[0];
    const auto& b = D.parts[1];
    if (a.first.deg != 1 || b.first.deg != 1) return false;
    if (!a.first.root.inf) return false;
    if (b.first.root.inf || !V.is_zero(b.first.root.alpha)) return false;
    return a.second == 2 && b.second == 1;
}

struct FnStreamState {
    FnKind kind = FnKind::Generic;
    FnDomain dom;       // generic kind
    u64 code = 0;       // cursor within the kind's code space
    u64 space = 0;
};

HomPoly hp_from_elems(const TowerView& V, std::vector<FieldElem> cs) {
    HomPoly f;
    f.c = std::move(cs);
    (void)V;
    return f;
}

FnStreamState make_fn_state(const TowerView& V, const Divisor& D, u32 n) {
    FnStreamState st;
    u64 q = V.q();
    bool special = (n == 5 || n == 7);
    if (special && is_m_pinf(V, D, 3)) {
        st.kind = FnKind::TripleInf;
        st.space = (V.p() == 2) ? 1 : 2;
        return st;
    }
    if (n == 5 && is_2pinf_p0(V, D)) {
        st.kind = FnKind::DoubleInfZero;
        st.space = q;  // ranks over s in F_q, s = 1 skipped
        return st;
    }
    if (n == 7 && is_m_pinf(V, D, 4)) {
        st.kind = FnKind::QuadInf;
        u64 cube_classes = (q - 1) % 3 == 0 ? 3 : 1;
        if (V.p() == 2) st.space = 2 * q + cube_classes;
        else st.space = q + cube_classes;
        return st;
    }
    st.kind = FnKind::Generic;
    st.dom = fn_domain(V, D);
    st.space = st.dom.code_space;
    return st;
}

// cube-class representatives of F_q^x: {1} or {1, g, g^2}
FieldElem cube_class_rep(const TowerView& V, u64 idx) {
    if (idx == 0) return V.one();
    FieldElem g = V.generator(1);
    return idx == 1 ? g : V.mul(g, g);
}

std::optional<RationalMap> fn_state_at(const TowerView& V, const FnStreamState& st, u64 code) {
    u64 q = V.q();
    switch (st.kind) {
        case FnKind::Generic:
            return fn_at(V, st.dom, code);
        case FnKind::TripleInf: {
            // (x^2 + s y^2) / (x y), s = 1 or a non-square
            FieldElem s = code == 0 ? V.one() : V.nonsquare();
            HomPoly num = hp_from_elems(V, {s, V.zero(), V.one()});
            HomPoly den = hp_from_elems(V, {V.zero(), V.one(), V.zero()});
            return make_map_coprime(V, num, den);
        }
        case FnKind::DoubleInfZero: {
            // (x^2 + s x y) / (x y + y^2), s != 1
            FieldElem s = V.base_from_index(code);
            if (V.is_one(s)) return std::nullopt;
            HomPoly num = hp_from_elems(V, {V.zero(), s, V.one()});
            HomPoly den = hp_from_elems(V, {V.one(), V.one(), V.zero()});
            return make_map_coprime(V, num, den);
        }
        case FnKind::QuadInf: {
            u64 fam1 = (V.p() == 2) ? 2 * q : q;
            if (code < fam1) {
                if (V.p() == 2) {
                    // (x^3 + x^2 y + r x y^2 + s y^3) / (x^2 y + x y^2 + r y^3),
                    // r in {0, nu}, s != 0, nu of absolute trace 1
                    u64 rsel = code / q;
                    FieldElem s = V.base_from_index(code % q);
                    if (V.is_zero(s)) return std::nullopt;
                    FieldElem r = rsel == 0 ? V.zero() : V.trace_one_elem();
                    HomPoly num = hp_from_elems(V, {s, r, V.one(), V.one()});
                    HomPoly den = hp_from_elems(V, {r, V.one(), V.one(), V.zero()});
                    return make_map_coprime(V, num, den);
                }
                // (x^3 + r x y^2 + r y^3) / (x^2 y + r y^3), r != 0
                FieldElem r = V.base_from_index(code);
                if (V.is_zero(r)) return std::nullopt;
                HomPoly num = hp_from_elems(V, {r, r, V.zero(), V.one()});
                HomPoly den = hp_from_elems(V, {r, V.zero(), V.one(), V.zero()});
                return make_map_coprime(V, num, den);
            }
            // (x^3 + r y^3) / (x^2 y), r over the cube classes
            FieldElem r = cube_class_rep(V, code - fam1);
            HomPoly num = hp_from_elems(V, {r, V.zero(), V.zero(), V.one()});
            HomPoly den = hp_from_elems(V, {V.zero(), V.zero(), V.one(), V.zero()});
            return make_map_coprime(V, num, den);
        }
    }
    return std::nullopt;
}

}  // namespace

// =====================================================================

struct PlacesStream::Impl {
    std::shared_ptr<const TowerView> V;
    u32 n = 0;
    u64 seed = 0;
    u64 emitted_state_bytes = 0;

    enum class Kind : u32 { List, Degree4, Odd, Even } kind = Kind::List;

    // List
    std::vector<HomPoly> list;
    u64 idx = 0;

    // Degree4
    u64 rank = 0;
    std::set<std::vector<u32>> seen_cross;

    // Odd
    u32 stage = 0;  // 0 = degree-1-frobenius families, 1 = divisor loop, 2 = done
    u32 d = 0;      // current divisor degree
    std::unique_ptr<DivisorOrbitStream> dstream;
    bool have_divisor = false;
    Divisor D;
    FnStreamState fn;
    bool have_fn = false;       // fn.code points at the current function
    std::vector<HomPoly> emit;  // one entry per fresh cross value, sorted
    u64 emit_idx = 0;

    // Even
    std::shared_ptr<const TowerView> V2;
    std::unique_ptr<PlacesStream> psub;
    bool have_P = false;
    Place P;
    std::vector<u32> crossP, crossC;
    bool cross_equal = false;
    std::vector<Mat2> psis, psis_conj;
    u64 gamma_idx = 0;

    Impl(std::shared_ptr<const TowerView> v, u32 nn, u64 sd) : V(std::move(v)), n(nn), seed(sd) {
        const TowerView& Vv = *V;
        if (n == 0) throw std::invalid_argument("places enumeration: n must be positive");
        if (n == 1) {
            kind = Kind::List;
            list = {hp_y(Vv)};
        } else if (n == 2) {
            kind = Kind::List;
            HomPoly q2 = hp_zero(Vv, 2);
            // canonical irreducible quadratic: smallest by poly_key
            for (u64 r = 0;; ++r) {
                q2.c[2] = Vv.one();
                q2.c[1] = Vv.base_from_index(r / Vv.q());
                q2.c[0] = Vv.base_from_index(r % Vv.q());
                if (is_irreducible(Vv, q2)) break;
            }
            list = {q2};
        } else if (n == 3) {
            kind = Kind::List;
            list = ff1_representatives(Vv, 3);
            if (list.size() != 1) throw std::logic_error("degree-3 base case: expected one orbit");
        } else if (n == 4) {
            kind = Kind::Degree4;
        } else if (n % 2 == 1) {
            kind = Kind::Odd;
            list = ff1_representatives(Vv, n);
        } else {
            kind = Kind::Even;
            V2 = std::make_shared<TowerView>(Vv.squared());
            psub = std::make_unique<PlacesStream>(V2, n / 2, seed);
        }
    }

    // ---------- odd machinery ----------

    bool fn_survives_filter(const RationalMap& F) {
        if (fn.kind != FnKind::Generic) return true;  // explicit family members
        const TowerView& Vv = *V;
        auto fkey = map_key(Vv, F);
        bool minimal = true;
        for_each_divisor_stabilizer(Vv, D, [&](const Mat2& G) {
            if (!minimal) return;
            RationalMap FG = act_on_map(Vv, G, F);
            if (FG.degree() == F.degree() && map_key(Vv, FG) < fkey) minimal = false;
        });
        return minimal;
    }

    void compute_emissions(const RationalMap& F) {
        const TowerView& Vv = *V;
        emit.clear();
        emit_idx = 0;
        RationalMap G = iterate_map(Vv, F, n);
        HomPoly g = fixed_point_poly(Vv, G);
        if (hp_is_zero(Vv, g)) throw std::logic_error("odd algorithm: degenerate iterate");
        auto cands = factors_of_degree(Vv, g, n, seed_for_poly(Vv, seed, g));
        std::vector<std::pair<std::vector<u32>, HomPoly>> L;
        for (auto& f : cands) {
            if (!is_frobenius_function_for(Vv, F, f)) continue;
            L.emplace_back(cross_key(Vv, f), f);
        }
        std::sort(L.begin(), L.end(), [&](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return poly_cmp(Vv, a.second, b.second) < 0;
        });
        for (size_t i = 0; i < L.size(); ++i) {
            if (i > 0 && L[i].first == L[i - 1].first) continue;
            emit.push_back(L[i].second);
        }
    }

    // position fn.code at the next surviving function at or after fn.code,
    // computing its emissions; false when the code space is exhausted
    bool seek_fn() {
        const TowerView& Vv = *V;
        while (fn.code < fn.space) {
            auto F = fn_state_at(Vv, fn, fn.code);
            if (F && fn_survives_filter(*F)) {
                compute_emissions(*F);
                have_fn = true;
                if (!emit.empty()) return true;
            }
            ++fn.code;
        }
        have_fn = false;
        return false;
    }

    bool next_odd(HomPoly& out) {
        const TowerView& Vv = *V;
        for (;;) {
            if (stage == 0) {
                if (idx < list.size()) {
                    out = list[idx++];
                    return true;
                }
                stage = 1;
                d = 3;
                dstream = std::make_unique<DivisorOrbitStream>(V, d, seed);
                have_divisor = false;
            }
            if (stage == 2) return false;
            if (have_divisor && emit_idx < emit.size()) {
                out = emit[emit_idx++];
                return true;
            }
            if (have_divisor && have_fn) {
                ++fn.code;
                if (seek_fn()) continue;
            }
            // advance divisor
            Divisor nd;
            if (dstream && dstream->next(nd)) {
                D = std::move(nd);
                have_divisor = true;
                fn = make_fn_state(Vv, D, n);
                have_fn = false;
                emit.clear();
                emit_idx = 0;
                seek_fn();
                continue;
            }
            ++d;
            if (d > (n + 1) / 2) {
                stage = 2;
                dstream.reset();
                have_divisor = false;
                return false;
            }
            dstream = std::make_unique<DivisorOrbitStream>(V, d, seed);
            have_divisor = false;
        }
    }

    // ---------- degree 4 ----------

    bool next_deg4(HomPoly& out) {
        const TowerView& Vv = *V;
        u64 q = Vv.q();
        u64 space = q * q * q * q;
        while (rank < space) {
            u64 r = rank++;
            HomPoly f = hp_zero(Vv, 4);
            f.c[4] = Vv.one();
            // scan in poly_key order: c3 is the most significant digit
            u64 w = r;
            for (u32 i = 0; i < 4; ++i) {
                f.c[i] = Vv.base_from_index(w % q);
                w /= q;
            }
            if (!is_irreducible(Vv, f)) continue;
            auto ck = cross_key(Vv, f);
            if (!seen_cross.insert(ck).second) continue;
            out = f;
            return true;
        }
        return false;
    }

    // ---------- even machinery ----------

    bool setup_P(const HomPoly& fP) {
        const TowerView& Vv = *V;
        const TowerView& W = *V2;
        P = place_from_poly(W, fP, seed);
        crossP = cross_key(W, P.poly);
        Place Pc = conjugate_place(Vv, P);
        crossC = cross_key(W, Pc.poly);
        if (crossC < crossP) return false;  // the conjugate orbit comes first
        cross_equal = crossC == crossP;
        psis = maps_place_to_place(W, P, P);
        psis_conj.clear();
        if (cross_equal) psis_conj = maps_place_to_place(W, P, Pc);
        gamma_idx = 0;
        return true;
    }

    bool next_even(HomPoly& out) {
        const TowerView& Vv = *V;
        const TowerView& W = *V2;
        const TowerCore& C = Vv.core();
        u64 reps = coset_rep_count(Vv.q());
        for (;;) {
            if (have_P && gamma_idx < reps) {
                Mat2 G = coset_rep_at(Vv, gamma_idx);
                ++gamma_idx;
                CosetLabel lg = orbit_label(Vv, G);
                bool skip = false;
                for (auto& psi : psis) {
                    Mat2 gp = mat_mul(C, G, mat_embed(C, psi, Vv.core_deg(2)));
                    if (label_cmp(Vv, orbit_label(Vv, gp), lg) < 0) {
                        skip = true;
                        break;
                    }
                }
                if (skip) continue;
                if (cross_equal) {
                    Mat2 Gq = conjugate_mat(Vv, G);
                    for (auto& psi : psis_conj) {
                        Mat2 gp = mat_mul(C, Gq, mat_embed(C, psi, Vv.core_deg(2)));
                        if (label_cmp(Vv, orbit_label(Vv, gp), lg) < 0) {
                            skip = true;
                            break;
                        }
                    }
                    if (skip) continue;
                }
                HomPoly fg = act_on_poly(W, G, P.poly);
                if (hp_coeffs_in_subview(Vv, fg)) continue;  // a lift, handled elsewhere
                HomPoly prod = hp_mul(W, fg, hp_conjugate(Vv, fg));
                HomPoly res = hp_zero(Vv, n);
                for (u32 i = 0; i <= n; ++i) {
                    auto cb = Vv.contract_to_base(prod.c[i]);
                    if (!cb) throw std::logic_error("even algorithm: product not rational");
                    res.c[i] = *cb;
                }
                out = std::move(res);
                return true;
            }
            HomPoly fP;
            if (!psub->next(fP)) return false;
            have_P = setup_P(fP);
        }
    }

    bool next(HomPoly& out) {
        switch (kind) {
            case Kind::List:
                if (idx < list.size()) {
                    out = list[idx++];
                    return true;
                }
                return false;
            case Kind::Degree4:
                return next_deg4(out);
            case Kind::Odd:
                return next_odd(out);
            case Kind::Even:
                return next_even(out);
        }
        return false;
    }

    // ---------- persistence ----------

    void save(Writer& w) const {
        w.put_u32(u32(kind));
        w.put_u32(n);
        switch (kind) {
            case Kind::List:
                w.put_u64(idx);
                break;
            case Kind::Degree4:
                w.put_u64(rank);
                w.put_u32(u32(seen_cross.size()));
                for (auto& k : seen_cross) {
                    w.put_u32(u32(k.size()));
                    for (u32 v : k) w.put_u32(v);
                }
                break;
            case Kind::Odd:
                w.put_u32(stage);
                w.put_u64(idx);
                w.put_u32(d);
                w.put_bool(dstream != nullptr);
                if (dstream) dstream->save(w);
                w.put_bool(have_divisor);
                if (have_divisor) {
                    w.put_divisor(D);
                    w.put_bool(have_fn);
                    w.put_u64(fn.code);
                    w.put_u64(emit_idx);
                }
                break;
            case Kind::Even:
                psub->save(w);
                w.put_bool(have_P);
                if (have_P) {
                    w.put_poly(P.poly);
                    w.put_u64(gamma_idx);
                }
                break;
        }
    }

    void load(Reader& r) {
        u32 k = r.get_u32();
        if (k != u32(kind)) throw std::runtime_error("resume state: enumerator kind mismatch");
        u32 nn = r.get_u32();
        if (nn != n) throw std::runtime_error("resume state: degree mismatch");
        switch (kind) {
            case Kind::List:
                idx = r.get_u64();
                break;
            case Kind::Degree4: {
                rank = r.get_u64();
                seen_cross.clear();
                u32 cnt = r.get_u32();
                for (u32 i = 0; i < cnt; ++i) {
                    u32 len = r.get_u32();
                    std::vector<u32> key(len);
                    for (u32 j = 0; j < len; ++j) key[j] = r.get_u32();
                    seen_cross.insert(std::move(key));
                }
                break;
            }
            case Kind::Odd: {
                stage = r.get_u32();
                idx = r.get_u64();
                d = r.get_u32();
                bool has_ds = r.get_bool();
                if (has_ds) {
                    dstream = std::make_unique<DivisorOrbitStream>(V, d, seed);
                    dstream->load(r);
                }
                have_divisor = r.get_bool();
                if (have_divisor) {
                    D = r.get_divisor();
                    fn = make_fn_state(*V, D, n);
                    have_fn = r.get_bool();
                    fn.code = r.get_u64();
                    u64 ei = r.get_u64();
                    emit.clear();
                    emit_idx = 0;
                    if (have_fn) {
                        auto F = fn_state_at(*V, fn, fn.code);
                        if (!F) throw std::runtime_error("resume state: invalid function code");
                        compute_emissions(*F);
                        if (ei > emit.size()) throw std::runtime_error("resume state: emit index");
                        emit_idx = ei;
                    }
                }
                break;
            }
            case Kind::Even: {
                psub->load(r);
                have_P = r.get_bool();
                if (have_P) {
                    HomPoly fP = r.get_poly();
                    u64 gi = r.get_u64();
                    if (!setup_P(fP)) throw std::runtime_error("resume state: invalid place");
                    gamma_idx = gi;
                }
                break;
            }
        }
    }

    u64 seen_bytes() const {
        u64 b = 0;
        if (kind == Kind::Degree4)
            for (auto& k : seen_cross) b += 4 * k.size();
        if (dstream) b += dstream->seen_bytes();
        if (psub) b += psub->seen_bytes();
        return b;
    }
};

PlacesStream::PlacesStream(std::shared_ptr<const TowerView> V, u32 n, u64 seed)
    : impl_(std::make_unique<Impl>(std::move(V), n, seed)) {}

PlacesStream::~PlacesStream() = default;

bool PlacesStream::next(HomPoly& out) { return impl_->next(out); }

void PlacesStream::save(Writer& w) const { impl_->save(w); }

void PlacesStream::load(Reader& r) { impl_->load(r); }

u64 PlacesStream::seen_bytes() const { return impl_->seen_bytes(); }

u64 PlacesStream::state_bytes() const {
    Writer w;
    save(w);
    u64 total = w.buf.size();
    u64 seen = seen_bytes();
    return total > seen ? total - seen : 0;
}

static constexpr u32 kStateMagic = 0x50314553;  // "P1ES"
static constexpr u32 kStateVersion = 1;

std::vector<u8> save_places_state(const PlacesStream& s, u64 q, u32 n, u64 seed) {
    Writer w;
    w.put_u32(kStateMagic);
    w.put_u32(kStateVersion);
    w.put_u64(q);
    w.put_u32(n);
    w.put_u64(seed);
    s.save(w);
    return std::move(w.buf);
}

void load_places_state(PlacesStream& s, const std::vector<u8>& blob, u64 q, u32 n, u64 seed) {
    Reader r(blob);
    if (r.get_u32() != kStateMagic) throw std::runtime_error("resume state: bad magic");
    if (r.get_u32() != kStateVersion) throw std::runtime_error("resume state: version mismatch");
    if (r.get_u64() != q || r.get_u32() != n)
        throw std::runtime_error("resume state: parameters do not match");
    (void)r.get_u64();  // seed recorded for information; output is seed-independent
    s.load(r);
    if (!r.done()) throw std::runtime_error("resume state: trailing bytes");
    (void)seed;
}

}  // namespace p1enum
