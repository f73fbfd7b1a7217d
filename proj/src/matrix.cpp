#include "leibniz/matrix.hpp"

#include <sstream>

namespace leibniz {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(std::size_t n, const Field& field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols, const Field& field) {
    return Matrix(rows, cols, field);
}

Matrix Matrix::column(const std::vector<Scalar>& entries, const Field& field) {
    Matrix m(entries.size(), 1, field);
    for (std::size_t i = 0; i < entries.size(); ++i) m.data_[i] = field.reduce(entries[i]);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows,
                         std::size_t cols, const Field& field) {
    Matrix m(rows.size(), cols, field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error("row length mismatch in from_rows");
        for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = field.reduce(rows[r][c]);
    }
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
    data_[r * cols_ + c] = field_.reduce(v);
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
    return t;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
        throw Error("shape/field mismatch in matrix addition");
    Matrix s(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = field_.add(data_[i], o.data_[i]);
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
        throw Error("shape/field mismatch in matrix subtraction");
    Matrix s(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = field_.sub(data_[i], o.data_[i]);
    return s;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix s(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = field_.mul(data_[i], c);
    return s;
}

Matrix Matrix::hstack(const Matrix& right) const {
    if (rows_ != right.rows_ || field_ != right.field_)
        throw Error("shape/field mismatch in hstack");
    Matrix m(rows_, cols_ + right.cols_, field_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m.data_[r * m.cols_ + c] = data_[r * cols_ + c];
        for (std::size_t c = 0; c < right.cols_; ++c)
            m.data_[r * m.cols_ + cols_ + c] = right.data_[r * right.cols_ + c];
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& below) const {
    if (cols_ != below.cols_ || field_ != below.field_)
        throw Error("shape/field mismatch in vstack");
    Matrix m(rows_ + below.rows_, cols_, field_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + data_.size());
    return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
    return std::vector<Scalar>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

std::vector<Scalar> Matrix::col(std::size_t c) const {
    std::vector<Scalar> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = data_[r * cols_ + c];
    return v;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw Error("vector length mismatch in apply");
    std::vector<Scalar> out(rows_, Scalar(0));
    for (std::size_t r = 0; r < rows_; ++r) {
        Scalar acc(0);
        for (std::size_t c = 0; c < cols_; ++c)
            if (data_[r * cols_ + c] != 0 && v[c] != 0) acc += data_[r * cols_ + c] * v[c];
        out[r] = field_.reduce(acc);
    }
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " over " << field_.name() << "\n";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << " ";
            os << field_.format(data_[r * cols_ + c]);
        }
        os << "]\n";
    }
    return os.str();
}

} // namespace leibniz
