#pragma once

#include <array>
#include <string>

#include "leibniz/quotient.hpp"

namespace leibniz {

// Trivial coefficient module F^m: the algebra acts as zero on both sides.
struct TrivialModule {
    std::size_t dim;
};

// Finite-dimensional algebra over a runtime field, given by its structure
// constants: table(i,j,k) is the e_k coefficient of e_i * e_j. Whether the
// table satisfies the Leibniz identity x(yz) = (xy)z + y(xz) is checked by
// leibniz_violations, not enforced at construction, so invalid candidate
// tables can be represented and diagnosed.
class LeibnizAlgebra {
  public:
    LeibnizAlgebra(std::size_t dim, Field field, std::string name = "");

    static LeibnizAlgebra abelian(std::size_t dim, const Field& field);

    std::size_t dim() const { return dim_; }
    const Field& field() const { return field_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const Scalar& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
        return table_[(i * dim_ + j) * dim_ + k];
    }
    // e_i * e_j as a coordinate vector.
    std::vector<Scalar> product_basis(std::size_t i, std::size_t j) const;
    void set_product(std::size_t i, std::size_t j, const std::vector<Scalar>& value);

    // Bilinear extension to arbitrary coordinate vectors.
    std::vector<Scalar> product(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

    bool operator==(const LeibnizAlgebra& o) const {
        return dim_ == o.dim_ && field_ == o.field_ && table_ == o.table_;
    }
    bool operator!=(const LeibnizAlgebra& o) const { return !(*this == o); }

  private:
    std::size_t dim_;
    Field field_;
    std::string name_;
    std::vector<Scalar> table_; // flat, (i*dim + j)*dim + k
};

// Basis triples (i,j,k), 0-based, scanned row-major, where the Leibniz
// identity fails. Empty iff the table is a Leibniz algebra.
std::vector<std::array<std::size_t, 3>> leibniz_violations(const LeibnizAlgebra& L);
bool verify_leibniz(const LeibnizAlgebra& L);

// span{ u v : u in U, v in V }.
Subspace product_space(const LeibnizAlgebra& L, const Subspace& U, const Subspace& V);
// Derived subalgebra L' = span of all basis products.
Subspace derived(const LeibnizAlgebra& L);
// Two-sided annihilator { z : zx = xz = 0 for all x }.
Subspace center(const LeibnizAlgebra& L);
// Z is central iff Z is contained in the center; centrality makes the
// ideal condition automatic.
bool is_central_ideal(const LeibnizAlgebra& L, const Subspace& Z);
// Lower central series C_{k+1} = C_k L + L C_k reaches zero.
bool is_nilpotent(const LeibnizAlgebra& L);

struct AlgebraHom {
    LeibnizAlgebra domain;
    LeibnizAlgebra codomain;
    LinearMap map;

    // map(e_i e_j) == map(e_i) map(e_j) on all basis pairs.
    bool is_homomorphism() const;
};

struct QuotientAlgebra {
    LeibnizAlgebra algebra;  // table on the transversal coordinates
    QuotientSpace space;
    AlgebraHom projection;   // L -> algebra
    LinearMap section;       // algebra -> L, the pivot transversal embedding
};

// Quotient by a two-sided ideal (checked; throws Error otherwise). The
// projection is verified to be an algebra homomorphism at construction.
QuotientAlgebra quotient_algebra(const LeibnizAlgebra& L, const Subspace& I);

// Algebra maps L -> A for a trivial module A = F^m: exactly the linear maps
// vanishing on L'. Flattened as index(i,c) = i*m + c, i.e. the value
// component c at basis vector e_i.
Subspace hom_space(const LeibnizAlgebra& L, const TrivialModule& A);

// Matrix form (m x n) of a flattened hom vector, and back.
Matrix hom_to_matrix(const std::vector<Scalar>& flat, std::size_t n, std::size_t m,
                     const Field& field);
std::vector<Scalar> hom_from_matrix(const Matrix& map);

} // namespace leibniz
