#pragma once

#include "leibniz/linmap.hpp"

namespace leibniz {

// The quotient F^n / S presented in coordinates: `projection` maps a vector
// to its class in the pivot-free coordinates of the canonical transversal,
// and `section` embeds a class back as its transversal representative.
//
// Invariants: projection . section = id on F^q, and modded + transversal
// spans F^n with trivial intersection.
struct QuotientSpace {
    std::size_t ambient_dim;
    Subspace modded;       // S
    Subspace transversal;  // span of the non-pivot standard basis vectors
    LinearMap projection;  // q x n
    LinearMap section;     // n x q

    std::size_t dim() const { return projection.codomain_dim(); }
};

QuotientSpace quotient(std::size_t ambient_dim, const Subspace& s);
QuotientSpace quotient(const Subspace& s);

// Image of a subspace under the quotient projection, as a subspace of F^q.
Subspace project_subspace(const QuotientSpace& q, const Subspace& s);

// Positional index algebra for U tensor V, flattened (i, j) -> i*dim_v + j.
struct TensorSpace {
    std::size_t left_dim;
    std::size_t right_dim;

    std::size_t dim() const { return left_dim * right_dim; }
    std::size_t index(std::size_t i, std::size_t j) const { return i * right_dim + j; }
};

inline TensorSpace tensor_space(std::size_t u, std::size_t v) { return TensorSpace{u, v}; }

} // namespace leibniz
