// Command-line surface: enumeration, verification, counting, benchmarking
// and self-test, with stable serialized output.
//
// Exit codes: 0 ok, 1 usage error, 2 verification mismatch, 3 resource
// budget refused.

#include "CLI11.hpp"

#include "p1enum/acceptance.hpp"
#include "p1enum/enum_places.hpp"
#include "p1enum/oracle.hpp"
#include "p1enum/serialize.hpp"
#include "p1enum/unipoly.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

using namespace p1enum;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;

struct Budget {
    u64 max_scan = u64(1) << 34;       // candidate scans (q^n etc.)
    u64 max_poly_degree = 10000;       // factorization input degree
    u64 max_oracle = 1'000'000'000ull; // brute-force actions
};

u64 ipow_sat(u64 b, u32 e) {
    u64 r = 1;
    for (u32 i = 0; i < e; ++i) {
        if (r > (~0ull) / b) return ~0ull;
        r *= b;
    }
    return r;
}

int check_budget(u64 q, u32 n, const Budget& B) {
    if (ipow_sat(q, n) > B.max_scan) {
        std::cerr << "refused: q^n exceeds --max-scan (" << B.max_scan << ")\n";
        return kExitBudget;
    }
    if (n >= 5 && n % 2 == 1) {
        u64 deg = 1 + ipow_sat((n - 1) / 2, n);
        if (deg > B.max_poly_degree) {
            std::cerr << "refused: iterate degree 1 + ((n-1)/2)^n = " << deg
                      << " exceeds --max-poly-degree (" << B.max_poly_degree << ")\n";
            return kExitBudget;
        }
    }
    return kExitOk;
}

std::string place_record(const TowerView& V, const HomPoly& f, const std::string& format,
                         bool with_cross, bool with_stab) {
    if (format == "text") return record_text(V, f);
    std::string extra;
    if (with_cross && f.degree() >= 4) {
        extra += "\"cross_poly\":[";
        auto cp = cross_polynomial(V, f);
        for (size_t i = 0; i < cp.size(); ++i) {
            if (i) extra += ',';
            extra += '[';
            auto t = serialize_elem_coords(V, cp[i]);
            for (size_t j = 0; j < t.size(); ++j) {
                if (j) extra += ',';
                extra += std::to_string(t[j]);
            }
            extra += ']';
        }
        extra += ']';
    }
    if (with_stab) {
        if (!extra.empty()) extra += ',';
        extra += "\"stab_order\":" + std::to_string(brute_stabilizer_order(V, f));
    }
    return record_jsonl(V, f, extra);
}

int cmd_places(u64 q, u32 n, const std::string& format, u64 seed, const std::string& resume,
               i64 limit, bool with_cross, bool with_stab, const Budget& B) {
    if (int rc = check_budget(q, n, B); rc != kExitOk) return rc;
    Tower T = tower_for(q, n);
    PlacesStream s(T.view, n, seed);
    if (!resume.empty()) {
        std::ifstream in(resume, std::ios::binary);
        if (in) {
            std::vector<u8> blob((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
            load_places_state(s, blob, q, n, seed);
        }
    }
    HomPoly f;
    i64 count = 0;
    while ((limit < 0 || count < limit) && s.next(f)) {
        std::cout << place_record(*T.view, f, format, with_cross, with_stab) << '\n';
        ++count;
    }
    if (!resume.empty()) {
        auto blob = save_places_state(s, q, n, seed);
        std::ofstream out(resume, std::ios::binary | std::ios::trunc);
        out.write(reinterpret_cast<const char*>(blob.data()), std::streamsize(blob.size()));
    }
    return kExitOk;
}

int cmd_divisors(u64 q, u32 n, const std::string& format, u64 seed, i64 limit,
                 bool with_stab, const Budget& B) {
    if (int rc = check_budget(q, n, B); rc != kExitOk) return rc;
    u32 deg = 0;
    for (u32 m = 1; m <= n; ++m) deg = std::max(deg, required_tower_degree(q, m));
    auto [p, e] = decompose_prime_power(q);
    Tower T = build_tower(p, e, deg);
    DivisorOrbitStream s(T.view, n, seed);
    Divisor D;
    i64 count = 0;
    while ((limit < 0 || count < limit) && s.next(D)) {
        HomPoly f = poly_of_divisor(*T.view, D);
        std::cout << place_record(*T.view, f, format, false, with_stab) << '\n';
        ++count;
    }
    return kExitOk;
}

int cmd_count(u64 q, u32 n, const Budget& B) {
    if (int rc = check_budget(q, n, B); rc != kExitOk) return rc;
    Counts c = counting_formulas(q, n);
    std::cout << "degree-" << n << " places over F_" << q << ": " << c.places << '\n';
    std::cout << "degree-" << n << " effective divisors: " << c.divisor_total << '\n';
    std::cout << "|PGL_2(F_" << q << ")| = " << c.group_order << '\n';
    std::cout << "coset index in PGL_2(F_" << q * q << ") = " << c.coset_index << '\n';
    Tower T = tower_for(q, n);
    PlacesStream s(T.view, n, 1);
    HomPoly f;
    u64 place_orbits = 0;
    while (s.next(f)) ++place_orbits;
    std::cout << "enumerated place orbit representatives: " << place_orbits << '\n';
    u32 deg = 0;
    for (u32 m = 1; m <= n; ++m) deg = std::max(deg, required_tower_degree(q, m));
    auto [p, e] = decompose_prime_power(q);
    Tower Td = build_tower(p, e, deg);
    DivisorOrbitStream ds(Td.view, n, 1);
    Divisor D;
    u64 div_orbits = 0;
    while (ds.next(D)) ++div_orbits;
    std::cout << "enumerated divisor orbit representatives: " << div_orbits << '\n';
    return kExitOk;
}

int cmd_verify(u64 q, u32 n, const std::string& mode, const Budget& B) {
    if (int rc = check_budget(q, n, B); rc != kExitOk) return rc;
    if (mode == "oracle") {
        u64 cost = ipow_sat(q, n + 3);
        if (cost > B.max_oracle) {
            std::cerr << "refused: oracle cost q^(n+3) exceeds --max-oracle\n";
            return kExitBudget;
        }
        Tower T = tower_for(q, n);
        PlacesStream s(T.view, n, 1);
        std::vector<HomPoly> reps;
        HomPoly f;
        while (s.next(f)) reps.push_back(f);
        auto orbits = brute_force_place_orbits(*T.view, n, B.max_oracle);
        std::map<std::vector<u32>, size_t> where;
        for (size_t i = 0; i < orbits.size(); ++i)
            for (auto& g : orbits[i].members) where.emplace(poly_key(*T.view, g), i);
        std::vector<u32> hits(orbits.size(), 0);
        bool ok = true;
        for (auto& g : reps) {
            auto it = where.find(poly_key(*T.view, g));
            if (it == where.end()) {
                std::cout << "MISMATCH: emitted non-place " << record_text(*T.view, g) << '\n';
                ok = false;
            } else {
                hits[it->second]++;
            }
        }
        for (size_t i = 0; i < hits.size(); ++i) {
            if (hits[i] != 1) {
                std::cout << "MISMATCH: orbit of " << record_text(*T.view, orbits[i].members[0])
                          << " hit " << hits[i] << " times\n";
                ok = false;
            }
        }
        std::cout << "places: " << reps.size() << " representatives, " << orbits.size()
                  << " brute-force orbits\n";
        // divisor comparison when affordable
        u64 dcost = ipow_sat(q, n + 1) * pgl2_order(q);
        if (dcost <= B.max_oracle) {
            u32 deg = 0;
            for (u32 m = 1; m <= n; ++m) deg = std::max(deg, required_tower_degree(q, m));
            auto [p, e] = decompose_prime_power(q);
            Tower Td = build_tower(p, e, deg);
            DivisorOrbitStream ds(Td.view, n, 1);
            std::vector<HomPoly> dreps;
            Divisor D;
            while (ds.next(D)) dreps.push_back(poly_of_divisor(*Td.view, D));
            auto dorb = brute_force_divisor_orbits(*Td.view, n, B.max_oracle);
            std::map<std::vector<u32>, size_t> dwhere;
            for (size_t i = 0; i < dorb.size(); ++i)
                for (auto& g : dorb[i].members) dwhere.emplace(poly_key(*Td.view, g), i);
            std::vector<u32> dhits(dorb.size(), 0);
            for (auto& g : dreps) {
                auto it = dwhere.find(poly_key(*Td.view, g));
                if (it == dwhere.end()) {
                    std::cout << "MISMATCH: emitted non-divisor " << record_text(*Td.view, g)
                              << '\n';
                    ok = false;
                } else {
                    dhits[it->second]++;
                }
            }
            for (size_t i = 0; i < dhits.size(); ++i)
                if (dhits[i] != 1) {
                    std::cout << "MISMATCH: divisor orbit " << i << " hit " << dhits[i]
                              << " times\n";
                    ok = false;
                }
            std::cout << "divisors: " << dreps.size() << " representatives, " << dorb.size()
                      << " brute-force orbits\n";
        }
        std::cout << (ok ? "oracle check PASS" : "oracle check FAIL") << '\n';
        return ok ? kExitOk : kExitMismatch;
    }
    if (mode == "mass") {
        Tower T = tower_for(q, n);
        PlacesStream s(T.view, n, 1);
        HomPoly f;
        u64 group = pgl2_order(q);
        u64 mass = 0, reps = 0;
        while (s.next(f)) {
            mass += group / brute_stabilizer_order(*T.view, f);
            ++reps;
        }
        u64 expect = counting_formulas(q, n).places;
        std::cout << "sum of orbit sizes over " << reps << " representatives: " << mass
                  << ", places: " << expect << '\n';
        if (mass != expect) {
            std::cout << "mass check FAIL\n";
            return kExitMismatch;
        }
        std::cout << "mass check PASS\n";
        return kExitOk;
    }
    if (mode == "cosets") {
        auto [p, e] = decompose_prime_power(q);
        Tower T = build_tower(p, e, 2);
        const TowerView& V = *T.view;
        u64 reps = coset_rep_count(q);
        std::set<std::vector<u32>> labels;
        std::vector<Mat2> mats;
        for (u64 i = 0; i < reps; ++i) {
            Mat2 G = coset_rep_at(V, i);
            mats.push_back(G);
            CosetLabel L = orbit_label(V, G);
            std::vector<u32> key;
            for (auto* el : {&L.x, &L.y, &L.z}) {
                auto k = V.element_key(*el);
                key.insert(key.end(), k.begin(), k.end());
            }
            labels.insert(std::move(key));
        }
        bool ok = labels.size() == reps;
        SplitMix64 rng(17);
        const TowerCore& C = V.core();
        for (int it = 0; it < 100 && ok; ++it) {
            std::optional<Mat2> g;
            while (!g) g = pgl2_elem_at(V, rng.next() % pgl2_code_space(q));
            Mat2 G = mats[rng.next() % mats.size()];
            Mat2 gG = mat_mul(C, mat_embed(C, *g, V.core_deg(2)), G);
            if (label_cmp(V, orbit_label(V, G), orbit_label(V, gG)) != 0) ok = false;
        }
        std::cout << reps << " coset representatives, " << labels.size()
                  << " distinct labels\n";
        std::cout << (ok ? "coset check PASS" : "coset check FAIL") << '\n';
        return ok ? kExitOk : kExitMismatch;
    }
    std::cerr << "unknown mode\n";
    return kExitUsage;
}

int cmd_bench(u32 n, const std::vector<u64>& qlist, const std::string& csv, u64 seed,
              const Budget& B) {
    std::ofstream out;
    std::ostream* os = &std::cout;
    if (!csv.empty()) {
        out.open(csv, std::ios::trunc);
        if (!out) {
            std::cerr << "cannot open " << csv << '\n';
            return kExitUsage;
        }
        os = &out;
    }
    (*os) << "q,n,count,elapsed_ns,peak_state_bytes\n";
    for (u64 q : qlist) {
        if (int rc = check_budget(q, n, B); rc != kExitOk) return rc;
        auto t0 = std::chrono::steady_clock::now();
        Tower T = tower_for(q, n);
        PlacesStream s(T.view, n, seed);
        HomPoly f;
        u64 count = 0, peak = 0, peak_seen = 0;
        while (s.next(f)) {
            ++count;
            peak = std::max(peak, s.state_bytes());
            peak_seen = std::max(peak_seen, s.seen_bytes());
        }
        u64 ns = u64(std::chrono::duration_cast<std::chrono::nanoseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count());
        (*os) << q << ',' << n << ',' << count << ',' << ns << ',' << peak << '\n';
        std::cout << "# q=" << q << " n=" << n << " seen_set_bytes_peak=" << peak_seen << '\n';
    }
    return kExitOk;
}

int cmd_selftest(bool quick) {
    bool all = true;
    for (int id = 1; id <= acceptance::kNumCriteria; ++id) {
        auto res = acceptance::run_criterion(id, quick);
        std::cout << "criterion " << res.id << " (" << res.name << "): "
                  << (res.pass ? "PASS" : "FAIL");
        if (!res.detail.empty()) std::cout << " - " << res.detail;
        std::cout << std::endl;
        all = all && res.pass;
    }
    return all ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbit enumeration for places and divisors of the projective line"};
    app.require_subcommand(1);
    Budget budget;
    app.add_option("--max-scan", budget.max_scan, "largest allowed q^n scan");
    app.add_option("--max-poly-degree", budget.max_poly_degree,
                   "largest allowed factorization degree");
    app.add_option("--max-oracle", budget.max_oracle, "largest allowed brute-force cost");

    u64 q = 2;
    u32 n = 3;
    u64 seed = 1;
    std::string format = "text";
    std::string resume;
    std::string mode = "oracle";
    std::string csv;
    std::string qlist_str;
    i64 limit = -1;
    bool with_cross = false, with_stab = false, quick = false;

    auto* places = app.add_subcommand("places", "stream degree-n place orbit representatives");
    places->add_option("--q", q, "field size (prime power)")->required();
    places->add_option("--n", n, "place degree")->required();
    places->add_option("--format", format, "text|jsonl")
        ->check(CLI::IsMember({"text", "jsonl"}));
    places->add_option("--seed", seed, "factorization seed (output independent)");
    places->add_option("--resume", resume, "resume-state file");
    places->add_option("--limit", limit, "stop after this many records");
    places->add_flag("--with-cross", with_cross, "annotate records with the cross polynomial");
    places->add_flag("--with-stab", with_stab, "annotate records with the stabilizer order");

    auto* divisors =
        app.add_subcommand("divisors", "stream degree-n divisor orbit representatives");
    divisors->add_option("--q", q)->required();
    divisors->add_option("--n", n)->required();
    divisors->add_option("--format", format)->check(CLI::IsMember({"text", "jsonl"}));
    divisors->add_option("--seed", seed);
    divisors->add_option("--limit", limit);
    divisors->add_flag("--with-stab", with_stab);

    auto* verify = app.add_subcommand("verify", "run an acceptance check at one (q, n)");
    verify->add_option("--q", q)->required();
    verify->add_option("--n", n)->required();
    verify->add_option("--mode", mode, "oracle|mass|cosets")
        ->check(CLI::IsMember({"oracle", "mass", "cosets"}));

    auto* count = app.add_subcommand("count", "counting formulas and enumerated totals");
    count->add_option("--q", q)->required();
    count->add_option("--n", n)->required();

    auto* bench = app.add_subcommand("bench", "time enumeration across a q list");
    bench->add_option("--n", n)->required();
    bench->add_option("--q-list", qlist_str, "comma-separated prime powers")->required();
    bench->add_option("--csv", csv, "output CSV path");
    bench->add_option("--seed", seed);

    auto* selftest = app.add_subcommand("selftest", "run the desk-scale acceptance grid");
    selftest->add_flag("--quick", quick, "trim the heaviest cells");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (places->parsed())
            return cmd_places(q, n, format, seed, resume, limit, with_cross, with_stab, budget);
        if (divisors->parsed()) return cmd_divisors(q, n, format, seed, limit, with_stab, budget);
        if (verify->parsed()) return cmd_verify(q, n, mode, budget);
        if (count->parsed()) return cmd_count(q, n, budget);
        if (bench->parsed()) {
            std::vector<u64> qlist;
            std::stringstream ss(qlist_str);
            std::string tok;
            while (std::getline(ss, tok, ',')) qlist.push_back(std::stoull(tok));
            if (qlist.empty()) {
                std::cerr << "empty --q-list\n";
                return kExitUsage;
            }
            return cmd_bench(n, qlist, csv, seed, budget);
        }
        if (selftest->parsed()) return cmd_selftest(quick);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    }
    return kExitUsage;
}
