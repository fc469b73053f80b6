#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "idem/semiring.hpp"

namespace idem {

/// Seeded random element of the carrier; mixes finite values with the
/// admitted tags. Finite payloads stay in a small range so mul chains keep
/// full precision.
Value random_element(const Semiring& sr, std::uint64_t& state);

struct CheckOutcome {
    std::string name;
    int failures = 0;
};

struct CheckReport {
    std::string semiring;
    int cases = 0;
    int failures = 0;
    std::vector<CheckOutcome> checks;
};

/// Randomized law suite for one instance: associativity of both operations,
/// commutativity, distributivity on both sides, neutrality of zero/one,
/// absorption, idempotency and the freshman-dream power law where flagged,
/// order consistency, closure fixed point and monotonicity, root round
/// trips. add results compare exactly; mul chains compare within 1e-12
/// relative (nonneg-real accumulates rounding there).
CheckReport run_axiom_suite(const Semiring& sr, int cases,
                            std::uint64_t seed);

}  // namespace idem
