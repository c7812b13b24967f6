#include "hgpcert/linalg.hpp"

#include <stdexcept>

namespace hgpcert {

RowReducedForm row_reduce(const BitMatrix& m) {
    RowReducedForm f;
    f.matrix = m;
    BitMatrix& a = f.matrix;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < a.rows() && !a.get(pivot, c)) ++pivot;
        if (pivot == a.rows()) continue;
        a.swap_rows(r, pivot);
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != r && a.get(i, c)) a.xor_row(i, r);
        f.pivot_cols.push_back(c);
        ++r;
    }
    f.rank = r;
    return f;
}

ReductionWithTransform row_reduce_with_transform(const BitMatrix& m) {
    ReductionWithTransform f;
    f.reduced = m;
    f.transform = BitMatrix::identity(m.rows());
    BitMatrix& a = f.reduced;
    BitMatrix& t = f.transform;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < a.rows() && !a.get(pivot, c)) ++pivot;
        if (pivot == a.rows()) continue;
        a.swap_rows(r, pivot);
        t.swap_rows(r, pivot);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i != r && a.get(i, c)) {
                a.xor_row(i, r);
                t.xor_row(i, r);
            }
        }
        f.pivot_cols.push_back(c);
        ++r;
    }
    f.rank = r;
    return f;
}

std::size_t rank(const BitMatrix& m) { return row_reduce(m).rank; }

BitMatrix kernel(const BitMatrix& m) {
    RowReducedForm f = row_reduce(m);
    std::vector<std::size_t> free_cols;
    free_cols.reserve(m.cols() - f.rank);
    {
        std::size_t p = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (p < f.pivot_cols.size() && f.pivot_cols[p] == c)
                ++p;
            else
                free_cols.push_back(c);
        }
    }
    BitMatrix k(m.cols(), free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        k.set(free_cols[j], j, true);
        for (std::size_t p = 0; p < f.pivot_cols.size(); ++p)
            if (f.matrix.get(p, free_cols[j])) k.set(f.pivot_cols[p], j, true);
    }
    return k;
}

BitMatrix cokernel(const BitMatrix& m) { return kernel(m.transposed()).transposed(); }

BitMatrix row_basis(const BitMatrix& m) {
    RowReducedForm f = row_reduce(m);
    std::vector<std::size_t> keep(f.rank);
    for (std::size_t i = 0; i < f.rank; ++i) keep[i] = i;
    return select_rows(f.matrix, keep);
}

std::optional<BitVector> rowspace_coefficients(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.cols())
        throw std::invalid_argument("rowspace_coefficients: length mismatch");
    ReductionWithTransform f = row_reduce_with_transform(m);
    BitVector residual = v;
    BitVector coeff(m.rows());
    for (std::size_t p = 0; p < f.pivot_cols.size(); ++p) {
        if (residual.get(f.pivot_cols[p])) {
            residual ^= f.reduced.row(p);
            coeff ^= f.transform.row(p);
        }
    }
    if (!residual.is_zero()) return std::nullopt;
    return coeff;
}

bool rowspace_member(const BitMatrix& m, const BitVector& v) {
    return rowspace_coefficients(m, v).has_value();
}

}  // namespace hgpcert
