#pragma once

// Integral surgery formulas. C_n(s) = B{>=s} ⊕ B{>=n+1-s} ⊕ B computes the
// knot Floer homology of the surgered knot at level s; the glued, truncated
// complex G_n[s] of cones at levels in one residue class mod n computes the
// Heegaard Floer homology of the surgered manifold at the Spin^c class [s].
// Surgery outputs are rank tables only: no homological degrees are assigned
// to cone generators.
//
// Only positive integral coefficients n >= 1 are accepted; mirror the knot
// to reach negative surgeries.

#include <cstddef>
#include <vector>

#include "floercone/gf2.hpp"
#include "floercone/knot_complex.hpp"

namespace floercone::surgery {

enum class Slot { X, Y, Z };

struct ConeGen {
    Slot slot;
    std::size_t parent; // generator index in the knot complex
};

/// The three-slot mapping cone C_n(s) with differential
/// d(x, y, z) = (d x, d y, d z + x + y), where the X and Y slots are the
/// slices B{>=s} and B{>=n+1-s} included into the Z slot B.
class ConeComplex {
public:
    ConeComplex(const KnotComplex& b, int n, int s);

    int n() const { return n_; }
    int s() const { return s_; }
    std::size_t dim() const { return gens_.size(); }
    const std::vector<ConeGen>& gens() const { return gens_; }
    const gf2::BitMatrix& differential() const { return dmat_; }

    std::size_t x_dim() const { return x_dim_; }
    std::size_t y_dim() const { return y_dim_; }
    std::size_t z_offset() const { return x_dim_ + y_dim_; }

    std::size_t homology_rank() const;

private:
    int n_, s_;
    std::size_t x_dim_ = 0, y_dim_ = 0;
    std::vector<ConeGen> gens_;
    gf2::BitMatrix dmat_;
};

ConeComplex build_cone(const KnotComplex& b, int n, int s);

/// Level s -> rank H_*(C_n(s)) for every s in (-g, n+g]; ranks outside that
/// window vanish, which is spot-checked at s = -g and s = n+g+1.
RankReport hfk_ranks(const KnotComplex& b, int n);

/// Rank of the reduced cone H{>=s} ⊕ H{>=n+1-s} ⊕ H with differential
/// (x, y, z) |-> (0, 0, iota_* x + iota_* y); always equals hfk_ranks(b,n)[s].
std::size_t hfk_rank_reduced(const KnotComplex& b, int n, int s);

/// The chain map Upsilon_s : C_n(s) -> C_n(s+n),
/// (x, y, z) |-> (0, d(Xi(pi_s x)), Xi(pi_s x)), and its induced matrix on
/// homology in the canonical bases. The chain-map law is asserted.
struct UpsilonMap {
    gf2::BitMatrix chain;
    gf2::BitMatrix induced;
};

UpsilonMap upsilon(const KnotComplex& b, int n, int s);

/// Direct sum of the cones C_n(t) over t ≡ s (mod n) truncated to
/// -g < t <= n+g, glued by the Upsilon maps from block t to block t+n.
class GluedComplex {
public:
    GluedComplex(const KnotComplex& b, int n, int s_class);

    int n() const { return n_; }
    int s_class() const { return s_class_; }
    const std::vector<int>& block_levels() const { return levels_; }
    const std::vector<ConeComplex>& blocks() const { return blocks_; }
    const gf2::BitMatrix& differential() const { return dmat_; }
    std::size_t dim() const { return dmat_.rows(); }

    std::size_t homology_rank() const;

private:
    int n_, s_class_;
    std::vector<int> levels_;
    std::vector<ConeComplex> blocks_;
    gf2::BitMatrix dmat_;
};

GluedComplex build_glued(const KnotComplex& b, int n, int s_class);

/// Spin^c class [s] in {0, ..., n-1} -> rank H_*(G_n[s]).
RankReport hf_ranks(const KnotComplex& b, int n);

/// Simplicity of the surgered knot, decided two independent ways: (A) total
/// hfk rank equals total hf rank, and (B) every induced (Upsilon_s)_* on
/// (-g, n+g] vanishes. The two must agree; a disagreement throws
/// CriterionMismatch (it would falsify the implementation, not the theorem).
struct SimplicityReport {
    bool simple = false;
    std::vector<int> witness_levels; // s with (Upsilon_s)_* != 0
    int hfk_total = 0;
    int hf_total = 0;
};

SimplicityReport is_simple(const KnotComplex& b, int n);

/// epsilon_s = q_{-s} ∘ Xi_s ∘ tau_s : H{<s} -> H{<=-s}, defined for
/// -g < s <= g (OutOfRange otherwise). For n >= 2g these source and target
/// ranks are the cone ranks at s and s+n.
struct EpsilonReport {
    gf2::BitMatrix matrix;
    int rank_h_below = 0;  // rank H{<s}
    int rank_h_le_neg = 0; // rank H{<=-s}
};

EpsilonReport epsilon(const KnotComplex& b, int s);

} // namespace floercone::surgery
