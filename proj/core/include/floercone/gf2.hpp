#pragma once

// Exact linear algebra over GF(2): the substrate for every homology
// computation in this project. Everything is dense and word-packed; the
// complexes we meet are well below 10^3 dimensions, so simplicity and
// exactness beat asymptotics.
//
// Conventions:
//   * matrices act on column vectors, (m * v)[r] = <row_r, v>;
//   * a Subspace is always held in reduced row echelon form, so equality of
//     subspaces is bit-equality of their bases.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace floercone::gf2 {

/// Fixed-length bit vector. Length is set at construction; out-of-range
/// access throws.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size);

    static BitVec unit(std::size_t size, std::size_t index);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    void add(const BitVec& other); // xor-accumulate; sizes must match
    bool dot(const BitVec& other) const;
    bool is_zero() const;
    std::optional<std::size_t> first_set() const;
    std::size_t popcount() const;

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense matrix over GF(2). Row and column counts are fixed at construction.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);

    const BitVec& row(std::size_t r) const;
    BitVec column(std::size_t c) const;
    void set_column(std::size_t c, const BitVec& v);

    BitVec apply(const BitVec& v) const;      // m * v
    BitMatrix multiply(const BitMatrix& other) const;
    BitMatrix transposed() const;
    bool is_zero() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVec> row_bits_;
};

/// Subspace of GF(2)^n, stored as the unique reduced row echelon basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim); // zero subspace

    static Subspace full(std::size_t ambient_dim);
    static Subspace span(std::size_t ambient_dim, std::vector<BitVec> vectors);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BitVec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// v reduced modulo this subspace (pivot coordinates eliminated).
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec& v) const;
    bool contains(const Subspace& other) const;

    /// Coordinates of v in basis(); nullopt if v is outside the subspace.
    std::optional<BitVec> coordinates(const BitVec& v) const;
    /// Linear combination of basis vectors selected by coords.
    BitVec combine(const BitVec& coords) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_dim_ = 0;
    std::vector<BitVec> basis_;   // RREF rows, sorted by pivot
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const BitMatrix& m);
Subspace kernel_basis(const BitMatrix& m);
Subspace image_basis(const BitMatrix& m);

/// dim ker(d_out) - dim im(d_in) for a composable pair with d_out * d_in = 0;
/// throws CompositionNonzero otherwise. Pass d_out = d_in = d for a
/// differential d with d^2 = 0.
std::size_t homology_rank(const BitMatrix& d_out, const BitMatrix& d_in);

/// Canonical complement of `inner` inside `outer` (inner must be contained in
/// outer): reduce outer's basis modulo inner and re-echelonize. The result C
/// satisfies C ⊕ inner = outer.
Subspace complement(const Subspace& outer, const Subspace& inner);

/// Matrix of the map induced by m from span(dom) to codom / codom_mod, in the
/// canonical bases (dom's echelon basis; complement(codom, codom_mod) for the
/// quotient). Throws NotInvariant unless codom_mod ⊆ codom and
/// m(dom) ⊆ codom.
BitMatrix restrict_quotient(const BitMatrix& m, const Subspace& dom,
                            const Subspace& codom_mod, const Subspace& codom);
/// Same with codom defaulting to the full target space of m.
BitMatrix restrict_quotient(const BitMatrix& m, const Subspace& dom,
                            const Subspace& codom_mod);

/// Homology of an endomorphism differential d with d^2 = 0, together with a
/// canonical basis of class representatives. reps is the canonical complement
/// of the boundaries inside the cycles, so rank() = reps.dim() and class_of
/// expresses an arbitrary cycle in that basis.
class HomologyBasis {
public:
    explicit HomologyBasis(const BitMatrix& d);

    std::size_t rank() const { return reps_.dim(); }
    const Subspace& cycles() const { return cycles_; }
    const Subspace& boundaries() const { return boundaries_; }
    const Subspace& reps() const { return reps_; }
    const BitVec& representative(std::size_t k) const { return reps_.basis().at(k); }

    BitVec class_of(const BitVec& cycle) const;

private:
    Subspace cycles_, boundaries_, reps_;
};

} // namespace floercone::gf2
