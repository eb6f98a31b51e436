#pragma once

// The reduced, bigraded, filtered chain complex underlying everything here:
// generators carry an Alexander level `a` (the integer identification of
// relative Spin^c classes) and a homological degree `m`. The differential
// strictly increases `a` and drops `m` by exactly 1; the duality involution
// xi sends a generator at (a, m) to one at (-a, m + 2a). Complexes are
// immutable once constructed and all operations are pure, so values can be
// shared freely across threads.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "floercone/gf2.hpp"

namespace floercone {

struct Generator {
    std::string id;
    int a = 0; // Alexander level
    int m = 0; // homological degree

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Rank table keyed by an integer index (level, degree or Spin^c class,
/// depending on the operation that produced it).
using RankReport = std::map<int, int>;

int total_rank(const RankReport& report);

class KnotComplex {
public:
    KnotComplex() = default; // the empty complex

    /// Builds the complex from raw data and canonicalizes the generator
    /// order to (a, m, id). Duplicate ids and references to unknown ids
    /// throw SchemaError; semantic invariant violations do not throw, they
    /// are collected for validate().
    KnotComplex(std::string name, std::vector<Generator> generators,
                const std::map<std::string, std::vector<std::string>>& differential,
                const std::map<std::string, std::string>& duality);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return gens_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& gen(std::size_t i) const { return gens_.at(i); }
    std::size_t index_of(const std::string& id) const; // throws SchemaError

    /// Target indices of the differential on generator i, ascending.
    const std::vector<std::size_t>& d_targets(std::size_t i) const { return d_.at(i); }
    /// Duality partner index of generator i (npos if the file omitted it).
    std::size_t xi(std::size_t i) const { return xi_.at(i); }
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Complete list of invariant violations, each naming the offending
    /// generator(s); empty means the complex is valid.
    const std::vector<std::string>& validate() const { return violations_; }
    bool is_valid() const { return violations_.empty(); }
    void require_valid() const; // throws ValidationError listing the violations

    /// Matrix of the differential in the canonical basis; column j is d(gen j).
    const gf2::BitMatrix& differential_matrix() const { return dmat_; }

    int genus() const;     // max level; throws EmptyComplex
    int min_level() const; // = -genus() for valid complexes
    int d_invariant() const; // throws NotRankOne unless total homology rank is 1

    std::map<std::string, std::vector<std::string>> differential_by_id() const;
    std::map<std::string, std::string> duality_by_id() const;

private:
    std::string name_;
    std::vector<Generator> gens_;
    std::vector<std::vector<std::size_t>> d_;
    std::vector<std::size_t> xi_;
    gf2::BitMatrix dmat_;
    std::vector<std::string> violations_;

    void check_invariants();
};

/// B{>=s}, B{>s}, B{<=s}, B{<s} and the single level B{s}.
enum class SliceKind { GE, GT, LE, LT, AT };

const char* slice_kind_name(SliceKind kind);

/// Sub- or quotient complex of a KnotComplex with its induced differential.
/// GE/GT slices are subcomplexes (the differential raises the level), the
/// others are quotient complexes; either way the induced entry from member j
/// to member i is just the parent entry, with out-of-range targets dropped.
/// Empty slices are ordinary values of dimension 0.
class SliceComplex {
public:
    SliceComplex(const KnotComplex& parent, SliceKind kind, int level);

    SliceKind kind() const { return kind_; }
    int level() const { return level_; }
    std::size_t dim() const { return members_.size(); }
    const std::vector<std::size_t>& members() const { return members_; } // parent indices
    const Generator& gen(std::size_t i) const;
    const gf2::BitMatrix& differential() const { return dmat_; }
    std::size_t parent_dim() const { return parent_dim_; }

    /// Member-coordinate vector -> parent-coordinate vector.
    gf2::BitVec embed(const gf2::BitVec& v) const;
    /// Parent-coordinate vector -> member coordinates. With must_be_supported,
    /// throws InternalError if the vector has support outside the slice.
    gf2::BitVec project(const gf2::BitVec& parent_vec, bool must_be_supported) const;

private:
    SliceKind kind_;
    int level_;
    std::size_t parent_dim_;
    std::vector<std::size_t> members_;
    std::vector<Generator> gens_;
    gf2::BitMatrix dmat_;
};

SliceComplex slice(const KnotComplex& b, SliceKind kind, int s);

/// Homology rank per homological degree; only nonzero entries are listed.
RankReport homology_by_degree(const KnotComplex& b);
RankReport homology_by_degree(const SliceComplex& c);

// Structure maps, all as matrices between the canonical homology bases of
// the slices involved (HomologyBasis fixes the bases, so the matrices are
// reproducible bit for bit).

/// tau_s : H{<s} -> B{s}, [x] |-> level-s component of d(x). Well defined
/// because d^2 = 0; that is asserted on the boundary basis.
gf2::BitMatrix tau(const KnotComplex& b, int s);

/// q_s : B{s} -> H{<=s}, induced by the inclusion into the quotient complex.
gf2::BitMatrix q_map(const KnotComplex& b, int s);

/// p_s : H{<=s} -> H{>s}, induced by the differential.
gf2::BitMatrix p_map(const KnotComplex& b, int s);

/// iota_s : H{>=s} -> H, induced by the inclusion of the subcomplex.
gf2::BitMatrix iota(const KnotComplex& b, int s);

/// Xi_s : B{s} -> B{-s}, the duality involution on a single level.
gf2::BitMatrix xi_level_matrix(const KnotComplex& b, int s);

} // namespace floercone
