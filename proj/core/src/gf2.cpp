#include "floercone/gf2.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "floercone/errors.hpp"

namespace floercone::gf2 {

namespace {

[[noreturn]] void bounds_error(const char* what) {
    throw Error(errkind::out_of_range, std::string("gf2: ") + what);
}

// In-place reduction to the canonical reduced row echelon form. Zero rows are
// dropped; returns the pivot column of each surviving row, ascending.
std::vector<std::size_t> rref(std::vector<BitVec>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
        std::size_t pr = lead;
        while (pr < rows.size() && !rows[pr].get(col)) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[lead], rows[pr]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != lead && rows[r].get(col)) rows[r].add(rows[lead]);
        pivots.push_back(col);
        ++lead;
    }
    rows.resize(pivots.size());
    return pivots;
}

} // namespace

// --- BitVec ---------------------------------------------------------------

BitVec::BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

BitVec BitVec::unit(std::size_t size, std::size_t index) {
    BitVec v(size);
    v.set(index, true);
    return v;
}

bool BitVec::get(std::size_t i) const {
    if (i >= size_) bounds_error("BitVec index out of range");
    return (words_[i / 64] >> (i % 64)) & 1u;
}

void BitVec::set(std::size_t i, bool value) {
    if (i >= size_) bounds_error("BitVec index out of range");
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value)
        words_[i / 64] |= mask;
    else
        words_[i / 64] &= ~mask;
}

void BitVec::add(const BitVec& other) {
    if (other.size_ != size_) bounds_error("BitVec size mismatch in add");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
}

bool BitVec::dot(const BitVec& other) const {
    if (other.size_ != size_) bounds_error("BitVec size mismatch in dot");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1u;
}

bool BitVec::is_zero() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
}

std::optional<std::size_t> BitVec::first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0) return w * 64 + std::countr_zero(words_[w]);
    return std::nullopt;
}

std::size_t BitVec::popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

// --- BitMatrix --------------------------------------------------------------

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_bits_(rows, BitVec(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_) bounds_error("BitMatrix row out of range");
    return row_bits_[r].get(c);
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    if (r >= rows_) bounds_error("BitMatrix row out of range");
    row_bits_[r].set(c, value);
}

const BitVec& BitMatrix::row(std::size_t r) const {
    if (r >= rows_) bounds_error("BitMatrix row out of range");
    return row_bits_[r];
}

BitVec BitMatrix::column(std::size_t c) const {
    if (c >= cols_) bounds_error("BitMatrix column out of range");
    BitVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.set(r, row_bits_[r].get(c));
    return v;
}

void BitMatrix::set_column(std::size_t c, const BitVec& v) {
    if (c >= cols_ || v.size() != rows_) bounds_error("BitMatrix column mismatch");
    for (std::size_t r = 0; r < rows_; ++r) row_bits_[r].set(c, v.get(r));
}

BitVec BitMatrix::apply(const BitVec& v) const {
    if (v.size() != cols_) bounds_error("BitMatrix apply size mismatch");
    BitVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.set(r, row_bits_[r].dot(v));
    return out;
}

BitMatrix BitMatrix::multiply(const BitMatrix& other) const {
    if (other.rows_ != cols_) bounds_error("BitMatrix multiply shape mismatch");
    BitMatrix out(rows_, other.cols_);
    for (std::size_t c = 0; c < other.cols_; ++c) out.set_column(c, apply(other.column(c)));
    return out;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (row_bits_[r].get(c)) out.set(c, r, true);
    return out;
}

bool BitMatrix::is_zero() const {
    return std::all_of(row_bits_.begin(), row_bits_.end(),
                       [](const BitVec& r) { return r.is_zero(); });
}

// --- Subspace ---------------------------------------------------------------

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<BitVec> rows;
    rows.reserve(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) rows.push_back(BitVec::unit(ambient_dim, i));
    return span(ambient_dim, std::move(rows));
}

Subspace Subspace::span(std::size_t ambient_dim, std::vector<BitVec> vectors) {
    for (const BitVec& v : vectors)
        if (v.size() != ambient_dim) bounds_error("Subspace vector has wrong length");
    Subspace s(ambient_dim);
    s.pivots_ = rref(vectors, ambient_dim);
    s.basis_ = std::move(vectors);
    return s;
}

BitVec Subspace::reduce(BitVec v) const {
    if (v.size() != ambient_dim_) bounds_error("Subspace reduce size mismatch");
    for (std::size_t k = 0; k < basis_.size(); ++k)
        if (v.get(pivots_[k])) v.add(basis_[k]);
    return v;
}

bool Subspace::contains(const BitVec& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_) return false;
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const BitVec& v) { return contains(v); });
}

std::optional<BitVec> Subspace::coordinates(const BitVec& v) const {
    if (v.size() != ambient_dim_) bounds_error("Subspace coordinates size mismatch");
    BitVec coords(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) coords.set(k, v.get(pivots_[k]));
    if (combine(coords) == v) return coords;
    return std::nullopt;
}

BitVec Subspace::combine(const BitVec& coords) const {
    if (coords.size() != basis_.size()) bounds_error("Subspace combine size mismatch");
    BitVec out(ambient_dim_);
    for (std::size_t k = 0; k < basis_.size(); ++k)
        if (coords.get(k)) out.add(basis_[k]);
    return out;
}

// --- elimination-based operations -------------------------------------------

std::size_t rank(const BitMatrix& m) {
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return rref(rows, m.cols()).size();
}

Subspace kernel_basis(const BitMatrix& m) {
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    const std::vector<std::size_t> pivots = rref(rows, m.cols());

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<BitVec> kernel;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        BitVec v(m.cols());
        v.set(c, true);
        for (std::size_t k = 0; k < pivots.size(); ++k) v.set(pivots[k], rows[k].get(c));
        kernel.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), std::move(kernel));
}

Subspace image_basis(const BitMatrix& m) {
    std::vector<BitVec> cols;
    cols.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
    return Subspace::span(m.rows(), std::move(cols));
}

std::size_t homology_rank(const BitMatrix& d_out, const BitMatrix& d_in) {
    if (d_out.cols() != d_in.rows())
        bounds_error("homology_rank: d_out and d_in are not composable");
    if (!d_out.multiply(d_in).is_zero())
        throw Error(errkind::composition_nonzero, "homology_rank: d_out * d_in != 0");
    const std::size_t ker = d_out.cols() - rank(d_out);
    const std::size_t im = rank(d_in);
    return ker - im;
}

Subspace complement(const Subspace& outer, const Subspace& inner) {
    if (!outer.contains(inner))
        throw Error(errkind::internal, "complement: inner is not contained in outer");
    std::vector<BitVec> reduced;
    reduced.reserve(outer.dim());
    for (const BitVec& b : outer.basis()) {
        BitVec r = inner.reduce(b);
        if (!r.is_zero()) reduced.push_back(std::move(r));
    }
    Subspace c = Subspace::span(outer.ambient_dim(), std::move(reduced));
    if (c.dim() != outer.dim() - inner.dim())
        throw Error(errkind::internal, "complement: dimension mismatch");
    return c;
}

BitMatrix restrict_quotient(const BitMatrix& m, const Subspace& dom,
                            const Subspace& codom_mod, const Subspace& codom) {
    if (dom.ambient_dim() != m.cols() || codom.ambient_dim() != m.rows() ||
        codom_mod.ambient_dim() != m.rows())
        bounds_error("restrict_quotient: ambient dimension mismatch");
    if (!codom.contains(codom_mod))
        throw Error(errkind::not_invariant,
                    "restrict_quotient: codom_mod is not contained in the codomain");
    const Subspace quot = complement(codom, codom_mod);

    BitMatrix out(quot.dim(), dom.dim());
    for (std::size_t j = 0; j < dom.dim(); ++j) {
        const BitVec w = m.apply(dom.basis()[j]);
        if (!codom.contains(w))
            throw Error(errkind::not_invariant,
                        "restrict_quotient: image leaves the codomain");
        const BitVec r = codom_mod.reduce(w);
        const auto coords = quot.coordinates(r);
        if (!coords)
            throw Error(errkind::internal, "restrict_quotient: quotient coordinates missing");
        out.set_column(j, *coords);
    }
    return out;
}

BitMatrix restrict_quotient(const BitMatrix& m, const Subspace& dom,
                            const Subspace& codom_mod) {
    return restrict_quotient(m, dom, codom_mod, Subspace::full(m.rows()));
}

// --- HomologyBasis ------------------------------------------------------------

HomologyBasis::HomologyBasis(const BitMatrix& d) {
    if (d.rows() != d.cols()) bounds_error("HomologyBasis: differential must be square");
    cycles_ = kernel_basis(d);
    boundaries_ = image_basis(d);
    if (!cycles_.contains(boundaries_))
        throw Error(errkind::composition_nonzero, "HomologyBasis: d^2 != 0");
    reps_ = complement(cycles_, boundaries_);
}

BitVec HomologyBasis::class_of(const BitVec& cycle) const {
    if (!cycles_.contains(cycle))
        throw Error(errkind::internal, "class_of: vector is not a cycle");
    const auto coords = reps_.coordinates(boundaries_.reduce(cycle));
    if (!coords) throw Error(errkind::internal, "class_of: coordinates missing");
    return *coords;
}

} // namespace floercone::gf2
