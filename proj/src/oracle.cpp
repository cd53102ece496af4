#include "p1enum/oracle.hpp"

#include "p1enum/orbits.hpp"
#include "p1enum/polyfactor.hpp"

#include <algorithm>
#include <map>

namespace p1enum {

void for_each_monic_form(const TowerView& V, u32 n,
                         const std::function<void(const HomPoly&)>& fn) {
    u64 q = V.q();
    for (u32 k = 0; k <= n; ++k) {
        u64 count = 1;
        for (u32 i = 0; i < k; ++i) count *= q;
        for (u64 code = 0; code < count; ++code) {
            HomPoly f = hp_zero(V, n);
            f.c[k] = V.one();
            u64 v = code;
            for (u32 i = 0; i < k; ++i) {
                f.c[i] = V.base_from_index(v % q);
                v /= q;
            }
            fn(f);
        }
    }
}

void for_each_irreducible(const TowerView& V, u32 n,
                          const std::function<void(const HomPoly&)>& fn) {
    u64 q = V.q();
    if (n == 1) fn(hp_y(V));
    u64 count = 1;
    for (u32 i = 0; i < n; ++i) count *= q;
    for (u64 code = 0; code < count; ++code) {
        HomPoly f = hp_zero(V, n);
        f.c[n] = V.one();
        u64 v = code;
        for (u32 i = 0; i < n; ++i) {
            f.c[i] = V.base_from_index(v % q);
            v /= q;
        }
        if (is_irreducible(V, f)) fn(f);
    }
}

namespace {

std::vector<BruteOrbit> partition(const TowerView& V, std::vector<HomPoly> all, u64 budget) {
    u64 group = pgl2_order(V.q());
    if (all.size() * group > budget)
        throw std::runtime_error("brute force oracle: budget exceeded");
    std::map<std::vector<u32>, size_t> index;
    for (size_t i = 0; i < all.size(); ++i) index.emplace(poly_key(V, all[i]), i);
    std::vector<bool> seen(all.size(), false);
    std::vector<BruteOrbit> out;
    auto G = enumerate_group(V);
    for (size_t i = 0; i < all.size(); ++i) {
        if (seen[i]) continue;
        std::map<std::vector<u32>, HomPoly> orbit;
        for (auto& M : G) {
            HomPoly g = act_on_poly(V, M, all[i]);
            orbit.emplace(poly_key(V, g), g);
        }
        BruteOrbit ob;
        for (auto& [key, g] : orbit) {
            auto it = index.find(key);
            if (it == index.end())
                throw std::logic_error("oracle: orbit left the candidate set");
            seen[it->second] = true;
            ob.members.push_back(g);
        }
        ob.stab_order = group / ob.members.size();
        if (group % ob.members.size() != 0)
            throw std::logic_error("oracle: orbit size does not divide group order");
        out.push_back(std::move(ob));
    }
    return out;
}

}  // namespace

std::vector<BruteOrbit> brute_force_place_orbits(const TowerView& V, u32 n, u64 budget) {
    std::vector<HomPoly> all;
    for_each_irreducible(V, n, [&](const HomPoly& f) { all.push_back(f); });
    return partition(V, std::move(all), budget);
}

std::vector<BruteOrbit> brute_force_divisor_orbits(const TowerView& V, u32 n, u64 budget) {
    std::vector<HomPoly> all;
    for_each_monic_form(V, n, [&](const HomPoly& f) { all.push_back(f); });
    return partition(V, std::move(all), budget);
}

u64 brute_stabilizer_order(const TowerView& V, const HomPoly& f) {
    u64 count = 0;
    HomPoly fm = hp_monicize(V, f);
    for_each_group_element(V, [&](const Mat2& M) {
        if (hp_eq(V, act_on_poly(V, M, fm), fm)) ++count;
    });
    return count;
}

Counts counting_formulas(u64 q, u32 n) {
    Counts c{};
    c.group_order = q * q * q - q;
    c.coset_index = q * q * q + q;
    u64 tot = 0, qk = 1;
    for (u32 k = 0; k <= n; ++k) {
        tot += qk;
        qk *= q;
    }
    c.divisor_total = tot;
    if (n == 1) {
        c.places = q + 1;
    } else {
        // (1/n) sum_{d | n} mu(d) q^(n/d)
        i64 acc = 0;
        for (u32 d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            // mu(d)
            int mu = 1;
            u32 m = d;
            for (u32 p = 2; p * p <= m; ++p) {
                if (m % p == 0) {
                    m /= p;
                    if (m % p == 0) { mu = 0; break; }
                    mu = -mu;
                }
            }
            if (mu != 0 && m > 1) mu = -mu;
            if (mu == 0) continue;
            u64 pw = 1;
            for (u32 i = 0; i < n / d; ++i) pw *= q;
            acc += i64(mu) * i64(pw);
        }
        c.places = u64(acc) / n;
    }
    return c;
}

}  // namespace p1enum
