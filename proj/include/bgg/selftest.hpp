#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bgg/cones.hpp"

namespace bgg {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // instance counts, or the first failure
};

struct SelfTestReport {
    std::vector<CriterionResult> criteria;

    bool all_pass() const;
    std::string to_string() const;  // one PASS/FAIL line per criterion plus a summary
};

// Runs every acceptance criterion; pure and deterministic.
SelfTestReport run_selftest();

// Deterministic instance families shared by the self test and `generate`.
// Nullhomotopy links over rotating fixture pairs; pattern instances vary the
// middle row, the kernel/cokernel parts and the seam degree with the seed.
TwoRowDiagram seeded_nullhomotopy_instance(uint64_t seed);
TwoRowDiagram seeded_pattern_instance(uint64_t seed);

}  // namespace bgg
