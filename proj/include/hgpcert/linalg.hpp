#pragma once

#include <optional>
#include <vector>

#include "hgpcert/bitmatrix.hpp"

namespace hgpcert {

/// Reduced row-echelon form. Pivot columns are chosen greedily left to
/// right, so the result is deterministic: identical inputs give
/// bit-identical outputs.
struct RowReducedForm {
    BitMatrix matrix;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

RowReducedForm row_reduce(const BitMatrix& m);

/// Row reduction that also tracks the transform: transform * m == reduced.
struct ReductionWithTransform {
    BitMatrix reduced;
    BitMatrix transform;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

ReductionWithTransform row_reduce_with_transform(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

/// Null-space basis as an n x k matrix whose columns satisfy m * col = 0.
/// Columns are ordered by ascending free column, and the free-column rows
/// form an identity block.
BitMatrix kernel(const BitMatrix& m);

/// Left-null-space basis as a kT x m matrix whose rows satisfy row * m = 0.
/// Equals kernel(m^T)^T.
BitMatrix cokernel(const BitMatrix& m);

/// Nonzero rows of the reduced form: a full-rank basis of the row space.
BitMatrix row_basis(const BitMatrix& m);

/// Coefficients x with x^T * m == v, if v lies in the row space of m.
std::optional<BitVector> rowspace_coefficients(const BitMatrix& m, const BitVector& v);

bool rowspace_member(const BitMatrix& m, const BitVector& v);

}  // namespace hgpcert
