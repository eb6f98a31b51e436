#pragma once

// Staircase normal forms: the complexes with one generator per occupied
// symmetric level, degrees given by the delta recursion, and the alternating
// differential pattern. These are exactly the knot complexes whose large
// surgeries have simple knot Floer homology, so construction and recognition
// here drive the theorem-verification suites.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "floercone/knot_complex.hpp"

namespace floercone {

/// The data determining a staircase: strictly increasing positive steps
/// n_1 < ... < n_k (k = 0 is the one-generator complex) and the degree of
/// the top generator.
struct StaircaseSpec {
    std::vector<int> steps;
    int d_top = 0;

    int k() const { return static_cast<int>(steps.size()); }
    int genus() const { return steps.empty() ? 0 : steps.back(); }
    /// Level n_i for i in [-k, k]; n_0 = 0, n_{-i} = -n_i.
    int level(int i) const;
    std::string describe() const;

    friend bool operator==(const StaircaseSpec&, const StaircaseSpec&) = default;
};

/// Throws InvalidSpec unless steps are strictly increasing and positive.
void require_valid(const StaircaseSpec& spec);

/// delta_i for i in [-k, k]: delta_k = d_top, then descending
///   delta_i = delta_{i+1} + 2(n_{i+1} - n_i) - 1   if k - i is odd,
///   delta_i = delta_{i+1} + 1                      if k - i is even.
/// Satisfies delta_{-i} = 2 n_i + delta_i.
std::map<int, int> delta_sequence(const StaircaseSpec& spec);

/// The staircase complex: generators x_i at (n_i, delta_i) with
/// d(x_i) = x_{i+1} when i != k and k - i is even, and xi(x_i) = x_{-i}.
/// Always validates, has genus n_k, homology rank 1 and d-invariant d_top.
KnotComplex make_staircase(const StaircaseSpec& spec);

/// Outcome of staircase recognition; `reason` names the first failed
/// condition when `spec` is empty.
struct RecognitionResult {
    std::optional<StaircaseSpec> spec;
    std::string reason;

    bool ok() const { return spec.has_value(); }
};

/// Decides whether b is generator-for-generator a staircase complex (after
/// the canonical reordering). Structural equality is the right test here: the
/// occupied levels of a staircase are one-dimensional and the degrees are
/// strictly decreasing, so no nontrivial filtered basis change exists.
RecognitionResult recognize_staircase(const KnotComplex& b);

/// Symmetrized Alexander polynomial read off the bigraded dimensions.
struct AlexanderPoly {
    std::map<int, int> coeffs; // level -> coefficient, zeros omitted
};

/// a_s = sigma * sum_m (-1)^m dim B(s, m), with the global sign chosen to
/// make the coefficient sum positive. Throws NotNormalizable when the sum
/// vanishes.
AlexanderPoly alexander(const KnotComplex& b);

/// Deterministic generator of valid complexes for the suites: a symmetric
/// (level, degree) multiset obeying the duality grading law, a random
/// strictly-level-increasing degree-(-1) differential with d^2 = 0 (sampled
/// from the kernel of the already-fixed part, top level down), and a
/// grading-compatible involution. Same seed, same complex.
KnotComplex random_symmetric_complex(int levels_bound, int dim_bound, std::uint64_t seed);

} // namespace floercone
