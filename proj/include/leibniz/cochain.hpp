#pragma once

#include "leibniz/algebra.hpp"

namespace leibniz {

// Bilinear map B x B -> F^m in coordinates, flattened at (i*n + j)*m + c
// for basis pair (e_i, e_j) and value component c. A cochain is the raw
// coefficient array shared by cocycles, coboundaries, and representatives;
// it knows nothing about cocycle conditions.
class TwoCochain {
  public:
    TwoCochain(std::size_t algebra_dim, std::size_t coeff_dim, Field field);
    static TwoCochain from_flat(std::vector<Scalar> values, std::size_t algebra_dim,
                                std::size_t coeff_dim, const Field& field);

    std::size_t algebra_dim() const { return n_; }
    std::size_t coeff_dim() const { return m_; }
    std::size_t flat_dim() const { return values_.size(); }
    const Field& field() const { return field_; }

    std::size_t index(std::size_t i, std::size_t j, std::size_t c) const {
        return (i * n_ + j) * m_ + c;
    }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t c) const {
        return values_[index(i, j, c)];
    }
    void set(std::size_t i, std::size_t j, std::size_t c, const Scalar& v);

    const std::vector<Scalar>& flat() const { return values_; }

    // f(e_i, e_j) in F^m.
    std::vector<Scalar> eval_basis(std::size_t i, std::size_t j) const;
    // Bilinear extension.
    std::vector<Scalar> eval(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

    TwoCochain operator+(const TwoCochain& o) const;
    TwoCochain operator-(const TwoCochain& o) const;
    bool operator==(const TwoCochain& o) const;
    bool operator!=(const TwoCochain& o) const { return !(*this == o); }

    // f'(x,y) = f(Px, Py) for a linear map P into this cochain's algebra.
    TwoCochain pullback(const LinearMap& P) const;
    // Post-compose the value with chi (an m' x m matrix): (chi . f)(x,y).
    TwoCochain map_coefficients(const Matrix& chi) const;

  private:
    std::size_t n_, m_;
    Field field_;
    std::vector<Scalar> values_;
};

// Direct evaluation of f(x, yz) = f(xy, z) + f(y, xz) on all basis triples;
// cheaper than a membership test against the assembled cocycle space.
bool satisfies_cocycle_identity(const LeibnizAlgebra& L, const TwoCochain& f);

} // namespace leibniz
