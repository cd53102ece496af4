#ifndef P1ENUM_ACCEPTANCE_HPP
#define P1ENUM_ACCEPTANCE_HPP

// The desk-scale acceptance grid: oracle equivalence for places and
// divisors, exact mass formulas, coset machinery, the Frobenius-function
// suite, degree-1 family checks, scaling, streaming and determinism.

#include <string>
#include <vector>

namespace p1enum::acceptance {

struct Result {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Run one criterion (1..9).  quick trims the heaviest cells (used by the
/// CLI selftest); the full suite runs everything.
Result run_criterion(int id, bool quick = false);

inline constexpr int kNumCriteria = 9;

}  // namespace p1enum::acceptance

#endif
