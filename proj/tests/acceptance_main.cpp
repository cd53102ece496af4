// Acceptance suite driver: one pass/fail line per criterion.
//
//   acceptance <id>      run a single criterion (1..9)
//   acceptance all       run the whole suite
//   acceptance all quick  trim the heaviest cells

#include "p1enum/acceptance.hpp"

#include <cstdio>
#include <cstring>
#include <string>

int main(int argc, char** argv) {
    using p1enum::acceptance::kNumCriteria;
    using p1enum::acceptance::run_criterion;

    std::string sel = argc > 1 ? argv[1] : "all";
    bool quick = argc > 2 && std::strcmp(argv[2], "quick") == 0;
    int first = 1, last = kNumCriteria;
    if (sel != "all") {
        first = last = std::atoi(sel.c_str());
        if (first < 1 || first > kNumCriteria) {
            std::fprintf(stderr, "usage: acceptance <1..%d|all> [quick]\n", kNumCriteria);
            return 1;
        }
    }
    bool all_pass = true;
    for (int id = first; id <= last; ++id) {
        auto res = run_criterion(id, quick);
        std::printf("criterion %d (%s): %s%s%s\n", res.id, res.name.c_str(),
                    res.pass ? "PASS" : "FAIL", res.detail.empty() ? "" : " - ",
                    res.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && res.pass;
    }
    return all_pass ? 0 : 1;
}
