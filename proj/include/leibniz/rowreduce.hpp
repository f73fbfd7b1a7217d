#pragma once

#include <cstddef>
#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

// Reduced row echelon form. The RREF of a matrix is unique, so `rref`
// doubles as a canonical form: two row spaces are equal iff their RREFs
// (with zero rows dropped) are equal.
struct Echelon {
    Matrix rref;
    std::vector<std::size_t> pivots; // pivot column of row i, strictly increasing
    std::size_t rank;
};

// Gauss-Jordan elimination over the matrix's field. The elimination sweep
// over rows is OpenMP-parallel for large matrices; pivot choice is the
// first nonzero entry in column order, so the result is independent of the
// thread count (and equals serial::row_reduce exactly).
Echelon row_reduce(const Matrix& m);

// Basis of the right null space {x : m x = 0}, canonical (columns are the
// standard free-variable basis from the RREF, in free-column order).
Matrix null_space_basis(const Matrix& m);

std::size_t rank(const Matrix& m);

namespace serial {
// Reference implementation, no threading; bit-identical to leibniz::row_reduce.
Echelon row_reduce(const Matrix& m);
} // namespace serial

} // namespace leibniz
