#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hgpcert/bitmatrix.hpp"
#include "hgpcert/linalg.hpp"
#include "hgpcert/rng.hpp"

#include <stdexcept>

using namespace hgpcert;

namespace {

BitMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.next_bit()) m.set(r, c, true);
    return m;
}

// Nullspace by brute force: all 2^n vectors x with M x = 0, collected as
// a set of supports. Only for tiny n.
std::vector<BitVector> enumerate_nullspace(const BitMatrix& m) {
    std::vector<BitVector> out;
    const std::size_t n = m.cols();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        BitVector x(n);
        for (std::size_t i = 0; i < n; ++i)
            if ((bits >> i) & 1) x.set(i, true);
        if (m.mul(x).is_zero()) out.push_back(x);
    }
    return out;
}

// Rank by brute force: log2 of the number of distinct row combinations.
std::size_t enumerate_rank(const BitMatrix& m) {
    std::vector<std::string> seen;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m.rows()); ++bits) {
        BitVector x(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            if ((bits >> i) & 1) x.set(i, true);
        std::string s = m.mul_left(x).to_bitstring();
        if (std::find(seen.begin(), seen.end(), s) == seen.end()) seen.push_back(s);
    }
    std::size_t r = 0;
    while ((std::size_t{1} << r) < seen.size()) ++r;
    return r;
}

const char* kRepetition =
    "11..\n"
    ".11.\n"
    "..11";

}  // namespace

TEST_CASE("parse and format round-trip") {
    BitMatrix m = BitMatrix::parse(kRepetition);
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 4);
    CHECK(m.get(0, 0));
    CHECK_FALSE(m.get(0, 2));
    CHECK(m.to_string() == "11..\n.11.\n..11");
    CHECK(BitMatrix::parse(m.to_string()) == m);
    CHECK_THROWS_AS(BitMatrix::parse("01\n0"), std::invalid_argument);
    CHECK_THROWS_AS(BitMatrix::parse("0x"), std::invalid_argument);
}

TEST_CASE("empty matrices are first-class") {
    BitMatrix none;
    CHECK(none.rows() == 0);
    CHECK(none.cols() == 0);
    CHECK(rank(none) == 0);
    CHECK(kernel(none).rows() == 0);

    BitMatrix wide(0, 5);
    CHECK(kernel(wide).cols() == 5);  // everything is in the kernel
    CHECK(cokernel(wide).rows() == 0);

    BitMatrix tall(4, 0);
    CHECK(kernel(tall).cols() == 0);
    CHECK(cokernel(tall).rows() == 4);
    CHECK(kron(tall, wide).rows() == 0);
}

TEST_CASE("basic arithmetic identities") {
    Rng rng(7);
    BitMatrix m = random_matrix(rng, 5, 7);
    CHECK((m + m).is_zero());
    CHECK(BitMatrix::identity(5) * m == m);
    CHECK(m.transposed().transposed() == m);
    CHECK_THROWS_AS(m + BitMatrix(5, 6), std::invalid_argument);
    CHECK_THROWS_AS(m * m, std::invalid_argument);
    CHECK_THROWS_AS(select_columns(m, {7}), std::out_of_range);
}

TEST_CASE("stacking and selection") {
    BitMatrix a = BitMatrix::parse("10\n01");
    BitMatrix b = BitMatrix::parse("11\n11");
    CHECK(hstack(a, b) == BitMatrix::parse("1011\n0111"));
    CHECK(vstack(a, b) == BitMatrix::parse("10\n01\n11\n11"));
    // select preserves the given order
    CHECK(select_columns(hstack(a, b), {3, 0}) == BitMatrix::parse("11\n10"));
    CHECK(select_rows(vstack(a, b), {2, 0}) == BitMatrix::parse("11\n10"));
    CHECK(drop_columns(hstack(a, b), {1, 2}) == BitMatrix::parse("11\n01"));
}

TEST_CASE("kron basics") {
    CHECK(kron(BitMatrix::identity(2), BitMatrix::identity(3)) == BitMatrix::identity(6));
    CHECK(kron(BitMatrix::parse("11"), BitMatrix::identity(2)) == BitMatrix::parse("1.1.\n.1.1"));
}

TEST_CASE("kron mixed-product and associativity") {
    Rng rng(21);
    for (int t = 0; t < 20; ++t) {
        BitMatrix a = random_matrix(rng, 1 + rng.next_below(3), 1 + rng.next_below(3));
        BitMatrix b = random_matrix(rng, 1 + rng.next_below(3), 1 + rng.next_below(3));
        BitMatrix c = random_matrix(rng, a.cols(), 1 + rng.next_below(3));
        BitMatrix d = random_matrix(rng, b.cols(), 1 + rng.next_below(3));
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
        CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
    }
}

TEST_CASE("kron stays exact across word boundaries") {
    Rng rng(57);
    BitMatrix a = random_matrix(rng, 3, 37);
    BitMatrix b = random_matrix(rng, 2, 5);
    BitMatrix k = kron(a, b);
    REQUIRE(k.rows() == 6);
    REQUIRE(k.cols() == 185);
    for (std::size_t ia = 0; ia < 3; ++ia)
        for (std::size_t ja = 0; ja < 37; ++ja)
            for (std::size_t ib = 0; ib < 2; ++ib)
                for (std::size_t jb = 0; jb < 5; ++jb)
                    CHECK(k.get(ia * 2 + ib, ja * 5 + jb) ==
                          (a.get(ia, ja) && b.get(ib, jb)));
}

TEST_CASE("row reduction on knowns") {
    RowReducedForm id3 = row_reduce(BitMatrix::identity(3));
    CHECK(id3.rank == 3);
    CHECK(id3.pivot_cols == std::vector<std::size_t>{0, 1, 2});

    RowReducedForm zero = row_reduce(BitMatrix(2, 4));
    CHECK(zero.rank == 0);
    CHECK(zero.pivot_cols.empty());

    RowReducedForm rep = row_reduce(BitMatrix::parse(kRepetition));
    CHECK(rep.rank == 3);
}

TEST_CASE("row reduce properties on random matrices") {
    Rng rng(99);
    for (int t = 0; t < 60; ++t) {
        BitMatrix m = random_matrix(rng, 1 + rng.next_below(6), 1 + rng.next_below(6));
        RowReducedForm f = row_reduce(m);
        CHECK(f.rank == f.pivot_cols.size());
        // pivot columns are unit vectors in the reduced matrix
        for (std::size_t p = 0; p < f.pivot_cols.size(); ++p)
            for (std::size_t r = 0; r < m.rows(); ++r)
                CHECK(f.matrix.get(r, f.pivot_cols[p]) == (r == p));
        // same row space both ways
        for (std::size_t r = 0; r < m.rows(); ++r) {
            CHECK(rowspace_member(f.matrix, m.row(r)));
            CHECK(rowspace_member(m, f.matrix.row(r)));
        }
        CHECK(rank(m) == rank(m.transposed()));
    }
}

TEST_CASE("kernel matches exhaustive nullspace enumeration") {
    Rng rng(1234);
    for (int t = 0; t < 25; ++t) {
        BitMatrix m = random_matrix(rng, 4, 6);
        BitMatrix k = kernel(m);
        CHECK((m * k).is_zero());
        CHECK(k.cols() == 6 - rank(m));
        CHECK(enumerate_nullspace(m).size() == (std::size_t{1} << k.cols()));
        CHECK(rank(k) == k.cols());
        // every kernel column really is in the enumerated nullspace
        for (std::size_t c = 0; c < k.cols(); ++c) {
            BitVector col(6);
            for (std::size_t r = 0; r < 6; ++r)
                if (k.get(r, c)) col.set(r, true);
            CHECK(m.mul(col).is_zero());
        }
    }
}

TEST_CASE("kernel normal form has identity on free columns") {
    BitMatrix m = BitMatrix::parse(kRepetition);
    BitMatrix k = kernel(m);
    REQUIRE(k.cols() == 1);
    CHECK(k.transposed().to_string() == "1111");

    CHECK(kernel(BitMatrix::identity(4)).cols() == 0);

    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        BitMatrix r = random_matrix(rng, 3, 7);
        BitMatrix kr = kernel(r);
        RowReducedForm f = row_reduce(r);
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0, p = 0; c < r.cols(); ++c) {
            if (p < f.pivot_cols.size() && f.pivot_cols[p] == c)
                ++p;
            else
                free_cols.push_back(c);
        }
        CHECK(select_rows(kr.transposed(), {}).rows() == 0);
        BitMatrix block = select_columns(kr.transposed(), free_cols);
        CHECK(block == BitMatrix::identity(kr.cols()));
    }
}

TEST_CASE("cokernel matches exhaustive left-vector enumeration") {
    Rng rng(4321);
    for (int t = 0; t < 25; ++t) {
        BitMatrix m = random_matrix(rng, 5, 3);
        BitMatrix ck = cokernel(m);
        CHECK((ck * m).is_zero());
        CHECK(ck.rows() == 5 - rank(m));
        std::size_t annihilators = 0;
        for (std::uint64_t bits = 0; bits < 32; ++bits) {
            BitVector x(5);
            for (std::size_t i = 0; i < 5; ++i)
                if ((bits >> i) & 1) x.set(i, true);
            if (m.mul_left(x).is_zero()) {
                ++annihilators;
                CHECK(rowspace_member(ck, x));
            }
        }
        CHECK(annihilators == (std::size_t{1} << ck.rows()));
    }
}

TEST_CASE("cokernel of full-row-rank matrix is empty") {
    CHECK(cokernel(BitMatrix::parse(kRepetition)).rows() == 0);
}

TEST_CASE("kernel/cokernel duality and Euler identity") {
    Rng rng(777);
    for (int t = 0; t < 60; ++t) {
        BitMatrix m = random_matrix(rng, rng.next_below(7), rng.next_below(7));
        const std::size_t k = kernel(m).cols();
        const std::size_t kt = cokernel(m).rows();
        CHECK(k + m.rows() == m.cols() + kt);  // k - n + m - kT = 0
        // row space of kernel(M)^T equals row space of cokernel(M^T)
        BitMatrix a = kernel(m).transposed();
        BitMatrix b = cokernel(m.transposed());
        CHECK(a.rows() == b.rows());
        for (std::size_t r = 0; r < a.rows(); ++r) {
            CHECK(rowspace_member(b, a.row(r)));
            CHECK(rowspace_member(a, b.row(r)));
        }
    }
}

TEST_CASE("rank agrees with brute-force row-combination count") {
    Rng rng(31);
    for (int t = 0; t < 15; ++t) {
        BitMatrix m = random_matrix(rng, 1 + rng.next_below(5), 1 + rng.next_below(5));
        CHECK(rank(m) == enumerate_rank(m));
    }
}

TEST_CASE("rowspace membership and witness") {
    BitMatrix m = BitMatrix::parse(kRepetition);
    CHECK(rowspace_member(m, BitVector(4)));
    CHECK(rowspace_coefficients(m, BitVector(4))->is_zero());
    CHECK(rowspace_member(BitMatrix::parse("1111"), BitVector::parse("1111")));
    CHECK(rowspace_member(m, BitVector::parse("1100")));
    CHECK(rowspace_member(m, BitVector::parse("1010")));
    CHECK_FALSE(rowspace_member(m, BitVector::parse("1000")));
    CHECK_THROWS_AS(rowspace_member(m, BitVector(3)), std::invalid_argument);

    Rng rng(8);
    for (int t = 0; t < 40; ++t) {
        BitMatrix r = random_matrix(rng, 4, 9);
        BitVector coeffs(4);
        for (std::size_t i = 0; i < 4; ++i)
            if (rng.next_bit()) coeffs.set(i, true);
        BitVector v = r.mul_left(coeffs);
        auto witness = rowspace_coefficients(r, v);
        REQUIRE(witness.has_value());
        CHECK(r.mul_left(*witness) == v);
    }
}

TEST_CASE("determinism: identical inputs give bit-identical outputs") {
    Rng rng1(42), rng2(42);
    BitMatrix a = random_matrix(rng1, 6, 9);
    BitMatrix b = random_matrix(rng2, 6, 9);
    REQUIRE(a == b);
    CHECK(row_reduce(a).matrix == row_reduce(b).matrix);
    CHECK(kernel(a) == kernel(b));
    CHECK(cokernel(a) == cokernel(b));
}

TEST_CASE("vector helpers") {
    BitVector v = BitVector::parse("10110");
    CHECK(v.popcount() == 3);
    CHECK(v.support() == std::vector<std::size_t>{0, 2, 3});
    CHECK(v.dot(BitVector::parse("11000")));
    CHECK_FALSE(v.dot(BitVector::parse("10100")));
    CHECK(embed(v, 2, 9).to_bitstring() == "001011000");
    CHECK(slice(embed(v, 2, 9), 2, 7) == v);
    CHECK(BitVector::from_indices(5, {0, 2, 3}) == v);
    CHECK(v.is_subset_of(BitVector::parse("10111")));
    CHECK_FALSE(v.is_subset_of(BitVector::parse("10100")));
    CHECK(v.intersects(BitVector::parse("00010")));
    CHECK_FALSE(v.intersects(BitVector::parse("01001")));
}
