#include "leibniz/linmap.hpp"

namespace leibniz {

LinearMap LinearMap::identity(std::size_t n, const Field& field) {
    return LinearMap(Matrix::identity(n, field));
}

LinearMap LinearMap::zero(std::size_t codomain, std::size_t domain, const Field& field) {
    return LinearMap(Matrix(codomain, domain, field));
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
    if (f.domain_dim() != g.codomain_dim())
        throw Error("dimension mismatch in compose");
    return LinearMap(multiply(f.matrix(), g.matrix()));
}

Subspace kernel(const LinearMap& f) {
    return Subspace::from_columns(null_space_basis(f.matrix()));
}

Subspace image(const LinearMap& f) {
    return Subspace::from_columns(f.matrix());
}

std::size_t rank(const LinearMap& f) { return rank(f.matrix()); }

} // namespace leibniz
