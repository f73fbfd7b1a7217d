#pragma once

#include "leibniz/subspace.hpp"

namespace leibniz {

// Linear map F^d -> F^c as a c-by-d matrix acting on column vectors.
class LinearMap {
  public:
    LinearMap(Matrix m) : matrix_(std::move(m)) {}

    static LinearMap identity(std::size_t n, const Field& field);
    static LinearMap zero(std::size_t codomain, std::size_t domain, const Field& field);

    std::size_t domain_dim() const { return matrix_.cols(); }
    std::size_t codomain_dim() const { return matrix_.rows(); }
    const Matrix& matrix() const { return matrix_; }
    const Field& field() const { return matrix_.field(); }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const { return matrix_.apply(v); }
    LinearMap transpose() const { return LinearMap(matrix_.transpose()); }

    bool operator==(const LinearMap& o) const { return matrix_ == o.matrix_; }

  private:
    Matrix matrix_;
};

// compose(f, g) = f after g.
LinearMap compose(const LinearMap& f, const LinearMap& g);

Subspace kernel(const LinearMap& f);
Subspace image(const LinearMap& f);
std::size_t rank(const LinearMap& f);

} // namespace leibniz
