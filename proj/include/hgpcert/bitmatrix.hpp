#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hgpcert {

/// Dense bit-packed vector over GF(2). Bits past size() are kept zero so
/// word-level comparisons and popcounts need no masking.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_(word_count(n), 0) {}

    static BitVector unit(std::size_t n, std::size_t i);
    static BitVector from_indices(std::size_t n, const std::vector<std::size_t>& idx);
    /// Accepts '1' for one, '0' or '.' for zero.
    static BitVector parse(std::string_view text);

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    /// GF(2) inner product.
    bool dot(const BitVector& o) const;

    std::size_t popcount() const;
    bool is_zero() const;
    bool intersects(const BitVector& o) const;
    bool is_subset_of(const BitVector& mask) const;

    std::vector<std::size_t> support() const;

    std::string to_string(char zero = '.') const;
    std::string to_bitstring() const { return to_string('0'); }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    friend class BitMatrix;
    static std::size_t word_count(std::size_t bits) { return (bits + 63) >> 6; }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Dense bit-packed matrix over GF(2), row-major. Row operations are
/// word-wise XOR. 0xN and Mx0 matrices are valid and arise routinely.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) >> 6), w_(rows * stride_, 0) {}

    static BitMatrix identity(std::size_t n);
    /// One row per line; '1' = one, '0' or '.' = zero; blanks ignored.
    static BitMatrix parse(std::string_view text);
    static BitMatrix from_rows(const std::vector<BitVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (w_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (c & 63);
        if (v)
            w_[r * stride_ + (c >> 6)] |= mask;
        else
            w_[r * stride_ + (c >> 6)] &= ~mask;
    }

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);
    void xor_row(std::size_t dst, std::size_t src);
    void xor_row(std::size_t dst, const BitVector& v);
    void swap_rows(std::size_t a, std::size_t b);
    bool row_is_zero(std::size_t r) const;

    bool is_zero() const;
    BitMatrix transposed() const;

    /// M * x with x of length cols().
    BitVector mul(const BitVector& x) const;
    /// x^T * M with x of length rows().
    BitVector mul_left(const BitVector& x) const;

    BitMatrix operator+(const BitMatrix& o) const;
    BitMatrix operator*(const BitMatrix& o) const;

    std::string to_string(char zero = '.') const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<std::uint64_t> w_;

    const std::uint64_t* row_words(std::size_t r) const { return w_.data() + r * stride_; }
    std::uint64_t* row_words(std::size_t r) { return w_.data() + r * stride_; }
    friend BitMatrix kron(const BitMatrix&, const BitMatrix&);
    friend BitMatrix hstack(const BitMatrix&, const BitMatrix&);
    friend BitMatrix vstack(const BitMatrix&, const BitMatrix&);
};

BitMatrix kron(const BitMatrix& a, const BitMatrix& b);
BitMatrix hstack(const BitMatrix& a, const BitMatrix& b);
BitMatrix vstack(const BitMatrix& a, const BitMatrix& b);
/// Gathers columns in the given order (duplicates allowed).
BitMatrix select_columns(const BitMatrix& m, const std::vector<std::size_t>& idx);
BitMatrix select_rows(const BitMatrix& m, const std::vector<std::size_t>& idx);
/// Deletes the given columns, keeping the rest in order.
BitMatrix drop_columns(const BitMatrix& m, const std::vector<std::size_t>& idx);

/// Copies v into a length-n vector starting at bit offset.
BitVector embed(const BitVector& v, std::size_t offset, std::size_t n);
/// v[begin, end).
BitVector slice(const BitVector& v, std::size_t begin, std::size_t end);

}  // namespace hgpcert
