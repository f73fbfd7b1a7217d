#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "leibniz/field.hpp"

namespace leibniz {

// Dense matrix over a runtime Field, row-major. Zero-by-k and k-by-zero
// shapes are legal everywhere; they arise routinely as quotients by full
// subspaces and maps into zero-dimensional hom spaces.
class Matrix {
  public:
    Matrix(std::size_t rows, std::size_t cols, Field field);

    static Matrix identity(std::size_t n, const Field& field);
    static Matrix zero(std::size_t rows, std::size_t cols, const Field& field);
    // Column vector from entries (entries are reduced into the field).
    static Matrix column(const std::vector<Scalar>& entries, const Field& field);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows,
                            std::size_t cols, const Field& field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const Scalar& v);

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;

    // hstack/vstack require matching field and the shared dimension.
    Matrix hstack(const Matrix& right) const;
    Matrix vstack(const Matrix& below) const;

    std::vector<Scalar> row(std::size_t r) const;
    std::vector<Scalar> col(std::size_t c) const;
    // Matrix-vector product (v has cols() entries).
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    std::string to_string() const; // debugging aid

  private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> data_;

    friend class MatrixKernelAccess;
};

// Raw-storage access for the reduction/multiplication kernels.
class MatrixKernelAccess {
  public:
    static std::vector<Scalar>& data(Matrix& m) { return m.data_; }
    static const std::vector<Scalar>& data(const Matrix& m) { return m.data_; }
};

// Parallel dense product (OpenMP over result rows); dimensions must agree.
Matrix multiply(const Matrix& a, const Matrix& b);

namespace serial {
// Reference product, no threading; identical results to leibniz::multiply.
Matrix multiply(const Matrix& a, const Matrix& b);
} // namespace serial

inline Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }

} // namespace leibniz
