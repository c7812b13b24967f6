#include "hgpcert/bitmatrix.hpp"

#include <bit>
#include <stdexcept>

namespace hgpcert {

BitVector BitVector::unit(std::size_t n, std::size_t i) {
    if (i >= n) throw std::out_of_range("BitVector::unit: index out of range");
    BitVector v(n);
    v.set(i, true);
    return v;
}

BitVector BitVector::from_indices(std::size_t n, const std::vector<std::size_t>& idx) {
    BitVector v(n);
    for (std::size_t i : idx) {
        if (i >= n) throw std::out_of_range("BitVector::from_indices: index out of range");
        v.set(i, true);
    }
    return v;
}

BitVector BitVector::parse(std::string_view text) {
    BitVector v(text.size());
    std::size_t used = 0;
    for (char c : text) {
        switch (c) {
            case '1': v.set(used++, true); break;
            case '0':
            case '.': used++; break;
            case ' ':
            case '\t': break;
            default: throw std::invalid_argument("BitVector::parse: bad character");
        }
    }
    v.n_ = used;
    v.w_.resize(word_count(used));
    return v;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (n_ != o.n_) throw std::invalid_argument("BitVector: length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool BitVector::dot(const BitVector& o) const {
    if (n_ != o.n_) throw std::invalid_argument("BitVector::dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1u;
}

std::size_t BitVector::popcount() const {
    std::size_t c = 0;
    for (std::uint64_t x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
}

bool BitVector::is_zero() const {
    for (std::uint64_t x : w_)
        if (x) return false;
    return true;
}

bool BitVector::intersects(const BitVector& o) const {
    if (n_ != o.n_) throw std::invalid_argument("BitVector::intersects: length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

bool BitVector::is_subset_of(const BitVector& mask) const {
    if (n_ != mask.n_) throw std::invalid_argument("BitVector::is_subset_of: length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~mask.w_[i]) return false;
    return true;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> idx;
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
        std::uint64_t x = w_[wi];
        while (x) {
            idx.push_back(wi * 64 + static_cast<std::size_t>(std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return idx;
}

std::string BitVector::to_string(char zero) const {
    std::string s(n_, zero);
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::parse(std::string_view text) {
    std::vector<BitVector> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        if (!line.empty()) rows.push_back(BitVector::parse(line));
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return from_rows(rows);
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows) {
    if (rows.empty()) return BitMatrix();
    BitMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
        m.set_row(r, rows[r]);
    }
    return m;
}

BitVector BitMatrix::row(std::size_t r) const {
    if (r >= rows_) throw std::out_of_range("BitMatrix::row: index out of range");
    BitVector v(cols_);
    const std::uint64_t* src = row_words(r);
    for (std::size_t i = 0; i < stride_; ++i) v.w_[i] = src[i];
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    if (r >= rows_) throw std::out_of_range("BitMatrix::set_row: index out of range");
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::set_row: length mismatch");
    std::uint64_t* dst = row_words(r);
    for (std::size_t i = 0; i < stride_; ++i) dst[i] = v.w_[i];
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    std::uint64_t* d = row_words(dst);
    const std::uint64_t* s = row_words(src);
    for (std::size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
}

void BitMatrix::xor_row(std::size_t dst, const BitVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::xor_row: length mismatch");
    std::uint64_t* d = row_words(dst);
    for (std::size_t i = 0; i < stride_; ++i) d[i] ^= v.w_[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::uint64_t* ra = row_words(a);
    std::uint64_t* rb = row_words(b);
    for (std::size_t i = 0; i < stride_; ++i) std::swap(ra[i], rb[i]);
}

bool BitMatrix::row_is_zero(std::size_t r) const {
    const std::uint64_t* w = row_words(r);
    for (std::size_t i = 0; i < stride_; ++i)
        if (w[i]) return false;
    return true;
}

bool BitMatrix::is_zero() const {
    for (std::uint64_t x : w_)
        if (x) return false;
    return true;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* w = row_words(r);
        for (std::size_t wi = 0; wi < stride_; ++wi) {
            std::uint64_t x = w[wi];
            while (x) {
                std::size_t c = wi * 64 + static_cast<std::size_t>(std::countr_zero(x));
                t.set(c, r, true);
                x &= x - 1;
            }
        }
    }
    return t;
}

BitVector BitMatrix::mul(const BitVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("BitMatrix::mul: length mismatch");
    BitVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* w = row_words(r);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < stride_; ++i) acc ^= w[i] & x.w_[i];
        if (std::popcount(acc) & 1) y.set(r, true);
    }
    return y;
}

BitVector BitMatrix::mul_left(const BitVector& x) const {
    if (x.size() != rows_) throw std::invalid_argument("BitMatrix::mul_left: length mismatch");
    BitVector y(cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (!x.get(r)) continue;
        const std::uint64_t* w = row_words(r);
        for (std::size_t i = 0; i < stride_; ++i) y.w_[i] ^= w[i];
    }
    return y;
}

BitMatrix BitMatrix::operator+(const BitMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("BitMatrix::operator+: shape mismatch");
    BitMatrix r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] ^= o.w_[i];
    return r;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("BitMatrix::operator*: shape mismatch");
    BitMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        const std::uint64_t* w = row_words(i);
        std::uint64_t* out = r.row_words(i);
        for (std::size_t wi = 0; wi < stride_; ++wi) {
            std::uint64_t x = w[wi];
            while (x) {
                std::size_t j = wi * 64 + static_cast<std::size_t>(std::countr_zero(x));
                const std::uint64_t* src = o.row_words(j);
                for (std::size_t t = 0; t < o.stride_; ++t) out[t] ^= src[t];
                x &= x - 1;
            }
        }
    }
    return r;
}

std::string BitMatrix::to_string(char zero) const {
    std::string s;
    s.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : zero);
        if (r + 1 < rows_) s.push_back('\n');
    }
    return s;
}

namespace {

// dst ^= src shifted left by offset bits. The caller guarantees the shifted
// content fits; the carry write is skipped when it would fall past dst_words
// (the carried bits are zero in that case).
void xor_shifted(std::uint64_t* dst, std::size_t dst_words, const std::uint64_t* src,
                 std::size_t src_words, std::size_t offset) {
    const std::size_t word_off = offset >> 6;
    const std::size_t bit_off = offset & 63;
    if (bit_off == 0) {
        for (std::size_t i = 0; i < src_words; ++i) dst[word_off + i] ^= src[i];
    } else {
        for (std::size_t i = 0; i < src_words; ++i) {
            dst[word_off + i] ^= src[i] << bit_off;
            if (word_off + i + 1 < dst_words) dst[word_off + i + 1] ^= src[i] >> (64 - bit_off);
        }
    }
}

}  // namespace

BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    if (r.rows_ == 0 || r.cols_ == 0) return r;
    for (std::size_t ia = 0; ia < a.rows(); ++ia) {
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            if (!a.get(ia, ja)) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib) {
                std::uint64_t* dst = r.row_words(ia * b.rows() + ib);
                xor_shifted(dst, r.stride_, b.row_words(ib), b.stride_, ja * b.cols());
            }
        }
    }
    return r;
}

BitMatrix hstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
    BitMatrix r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint64_t* dst = r.row_words(i);
        xor_shifted(dst, r.stride_, a.row_words(i), a.stride_, 0);
        if (b.cols() > 0) xor_shifted(dst, r.stride_, b.row_words(i), b.stride_, a.cols());
    }
    return r;
}

BitMatrix vstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column count mismatch");
    BitMatrix r(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) r.set_row(i, a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i) r.set_row(a.rows() + i, b.row(i));
    return r;
}

BitMatrix select_columns(const BitMatrix& m, const std::vector<std::size_t>& idx) {
    BitMatrix r(m.rows(), idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] >= m.cols()) throw std::out_of_range("select_columns: index out of range");
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m.get(i, idx[j])) r.set(i, j, true);
    }
    return r;
}

BitMatrix select_rows(const BitMatrix& m, const std::vector<std::size_t>& idx) {
    BitMatrix r(idx.size(), m.cols());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= m.rows()) throw std::out_of_range("select_rows: index out of range");
        r.set_row(i, m.row(idx[i]));
    }
    return r;
}

BitMatrix drop_columns(const BitMatrix& m, const std::vector<std::size_t>& idx) {
    std::vector<bool> dropped(m.cols(), false);
    for (std::size_t i : idx) {
        if (i >= m.cols()) throw std::out_of_range("drop_columns: index out of range");
        dropped[i] = true;
    }
    std::vector<std::size_t> keep;
    keep.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!dropped[c]) keep.push_back(c);
    return select_columns(m, keep);
}

BitVector embed(const BitVector& v, std::size_t offset, std::size_t n) {
    if (offset + v.size() > n) throw std::out_of_range("embed: vector does not fit");
    BitVector r(n);
    for (std::size_t i : v.support()) r.set(offset + i, true);
    return r;
}

BitVector slice(const BitVector& v, std::size_t begin, std::size_t end) {
    if (begin > end || end > v.size()) throw std::out_of_range("slice: bad range");
    BitVector r(end - begin);
    for (std::size_t i = begin; i < end; ++i)
        if (v.get(i)) r.set(i - begin, true);
    return r;
}

}  // namespace hgpcert
