#pragma once

// Desk-scale verification suites for the three theorems:
//   small-surgery: 0 < n < 2g never yields simple knot Floer homology, and
//                  the total hfk rank strictly exceeds the total hf rank;
//   converse:      staircases with n >= 2g are simple and every Spin^c class
//                  of the surgered manifold has hf rank exactly 1;
//   large-forward: a rank-1 complex whose epsilon maps all vanish on (-g, g]
//                  is recognized as a staircase.
// Instances come either from the exhaustive staircase enumeration up to a
// genus bound or from the seeded random generator; either way the run is
// deterministic and failures carry the instance in the file format.

#include <cstdint>
#include <string>
#include <vector>

#include "floercone/staircase.hpp"

namespace floercone {

enum class SuiteKind { SmallSurgery, Converse, LargeForward };

const char* suite_name(SuiteKind kind);
SuiteKind suite_from_name(const std::string& name); // throws UsageError

struct SuiteParams {
    SuiteKind suite = SuiteKind::Converse;
    int max_genus = 2;
    int max_n = 6;
    int random_count = 0; // 0 = enumerate all staircases up to max_genus
    std::uint64_t seed = 0;
};

struct SuiteFailure {
    std::string detail;
    std::string instance_json;
};

struct SuiteReport {
    std::string suite;
    int instances = 0;
    int checks = 0;
    int skipped = 0; // instances outside the suite's hypotheses
    std::vector<SuiteFailure> failures;
    std::int64_t elapsed_ms = 0;

    bool passed() const { return failures.empty(); }
};

/// All staircase specs with nonempty steps drawn from {1, ..., max_genus}
/// (so genus = max step <= max_genus), d_top = 0, in a fixed enumeration
/// order.
std::vector<StaircaseSpec> enumerate_staircases(int max_genus);

SuiteReport run_suite(const SuiteParams& params);

} // namespace floercone
