#include <doctest.h>

#include <random>

#include "floercone/errors.hpp"
#include "floercone/gf2.hpp"
#include "oracle.hpp"

using namespace floercone;
using gf2::BitMatrix;
using gf2::BitVec;
using gf2::Subspace;

namespace {

BitMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (rows[i][j]) m.set(i, j, true);
    return m;
}

BitVec vec(const std::vector<int>& bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) v.set(i, true);
    return v;
}

} // namespace

TEST_CASE("rank: small cases") {
    CHECK(gf2::rank(BitMatrix::identity(2)) == 2);
    CHECK(gf2::rank(from_rows({{1, 1}})) == 1);
    CHECK(gf2::rank(BitMatrix(3, 3)) == 0);
    CHECK(gf2::rank(BitMatrix(0, 5)) == 0);
}

TEST_CASE("rank: the 5x5 cone differential of the trefoil at n=1, s=1") {
    // generators X:x1, Y:x1, Z:x-1, Z:x0, Z:x1; arrows X:x1 -> Z:x1,
    // Y:x1 -> Z:x1, Z:x-1 -> Z:x0
    const std::vector<std::vector<int>> d = {
        {0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0},
        {0, 0, 1, 0, 0},
        {1, 1, 0, 0, 0},
    };
    CHECK(oracle::rank(d) == 2); // hand Gaussian elimination
    CHECK(gf2::rank(from_rows(d)) == 2);
    CHECK(gf2::homology_rank(from_rows(d), from_rows(d)) == 1);
    CHECK(oracle::homology_rank(d) == 1);
}

TEST_CASE("kernel_basis") {
    const Subspace k1 = gf2::kernel_basis(from_rows({{1, 1}}));
    CHECK(k1.dim() == 1);
    CHECK(k1.basis()[0] == vec({1, 1}));

    CHECK(gf2::kernel_basis(BitMatrix(3, 3)).dim() == 3);
    CHECK(gf2::kernel_basis(BitMatrix::identity(3)).dim() == 0);
}

TEST_CASE("image_basis") {
    const Subspace im = gf2::image_basis(from_rows({{1, 1}}));
    CHECK(im.dim() == 1);
    CHECK(im.basis()[0] == vec({1}));

    CHECK(gf2::image_basis(BitMatrix(4, 2)).dim() == 0);

    // trefoil staircase differential: canonical order x-1, x0, x1 and the
    // only arrow is x-1 -> x0, so the column span is <e_1>
    BitMatrix d(3, 3);
    d.set(1, 0, true);
    const Subspace im2 = gf2::image_basis(d);
    CHECK(im2.dim() == 1);
    CHECK(im2.basis()[0] == vec({0, 1, 0}));
}

TEST_CASE("homology_rank") {
    CHECK(gf2::homology_rank(BitMatrix(3, 3), BitMatrix(3, 3)) == 3);

    BitMatrix d(3, 3);
    d.set(1, 0, true); // single arrow: ker 2, im 1
    CHECK(gf2::homology_rank(d, d) == 1);

    // failing pre: d * d != 0
    BitMatrix bad(2, 2);
    bad.set(0, 0, true);
    CHECK_THROWS_AS(gf2::homology_rank(bad, bad), Error);
    try {
        gf2::homology_rank(bad, bad);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == std::string(errkind::composition_nonzero));
    }
}

TEST_CASE("restrict_quotient: identity cases") {
    const BitMatrix id = BitMatrix::identity(3);
    const Subspace full = Subspace::full(3);
    const Subspace zero(3);

    CHECK(gf2::restrict_quotient(id, full, zero) == id);

    const BitMatrix collapsed = gf2::restrict_quotient(id, full, full);
    CHECK(collapsed.rows() == 0);
    CHECK(collapsed.cols() == 3);
    CHECK(collapsed.is_zero());
}

TEST_CASE("restrict_quotient: tau_0 of the trefoil staircase") {
    // d(x-1) = x0 in the canonical order x-1, x0, x1; the induced map
    // <x-1> -> <x0> is [1]
    BitMatrix d(3, 3);
    d.set(1, 0, true);
    const Subspace dom = Subspace::span(3, {vec({1, 0, 0})});
    const Subspace codom = Subspace::span(3, {vec({0, 1, 0})});
    const BitMatrix t = gf2::restrict_quotient(d, dom, Subspace(3), codom);
    REQUIRE(t.rows() == 1);
    REQUIRE(t.cols() == 1);
    CHECK(t.get(0, 0));

    // x0 is not inside <x1>: the induced map does not exist there
    const Subspace wrong = Subspace::span(3, {vec({0, 0, 1})});
    CHECK_THROWS_AS(gf2::restrict_quotient(d, dom, Subspace(3), wrong), Error);
}

TEST_CASE("subspace canonicalization is idempotent") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        std::vector<BitVec> vecs;
        for (std::size_t i = 0; i < 5; ++i) {
            BitVec v(n);
            for (std::size_t b = 0; b < n; ++b) v.set(b, rng() & 1);
            vecs.push_back(v);
        }
        const Subspace s = Subspace::span(n, vecs);
        const Subspace again = Subspace::span(n, s.basis());
        CHECK(s == again);
        for (const BitVec& v : vecs) CHECK(s.contains(v));
    }
}

TEST_CASE("rank/kernel/image dimension identities against the oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = rng() % 9, cols = rng() % 9;
        BitMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1);

        const std::size_t rk = gf2::rank(m);
        CHECK(rk == static_cast<std::size_t>(oracle::rank(oracle::to_ints(m))));
        CHECK(gf2::image_basis(m).dim() == rk);
        CHECK(gf2::kernel_basis(m).dim() + rk == cols);

        // every kernel basis vector really is in the kernel
        const Subspace kernel = gf2::kernel_basis(m);
        for (const BitVec& v : kernel.basis()) CHECK(m.apply(v).is_zero());
    }
}

TEST_CASE("coordinates/combine round-trip") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        std::vector<BitVec> vecs;
        for (int i = 0; i < 4; ++i) {
            BitVec v(n);
            for (std::size_t b = 0; b < n; ++b) v.set(b, rng() & 1);
            vecs.push_back(v);
        }
        const Subspace s = Subspace::span(n, vecs);
        BitVec coords(s.dim());
        for (std::size_t k = 0; k < s.dim(); ++k) coords.set(k, rng() & 1);
        const BitVec v = s.combine(coords);
        const auto back = s.coordinates(v);
        REQUIRE(back.has_value());
        CHECK(*back == coords);
    }
}
