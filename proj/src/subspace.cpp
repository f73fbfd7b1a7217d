#include "leibniz/subspace.hpp"

namespace leibniz {

Subspace::Subspace(Matrix rows, std::vector<std::size_t> pivots, std::size_t ambient)
    : rows_(std::move(rows)), pivots_(std::move(pivots)), ambient_(ambient) {}

Subspace row_space(const Matrix& rows_matrix) {
    Echelon e = row_reduce(rows_matrix);
    const std::size_t n = rows_matrix.cols();
    Matrix basis(e.rank, n, rows_matrix.field());
    for (std::size_t r = 0; r < e.rank; ++r)
        for (std::size_t c = 0; c < n; ++c) basis.at(r, c) = e.rref.at(r, c);
    return Subspace(std::move(basis), std::move(e.pivots), n);
}

Subspace Subspace::zero(std::size_t ambient_dim, const Field& field) {
    return Subspace(Matrix(0, ambient_dim, field), {}, ambient_dim);
}

Subspace Subspace::full(std::size_t ambient_dim, const Field& field) {
    std::vector<std::size_t> piv(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) piv[i] = i;
    return Subspace(Matrix::identity(ambient_dim, field), std::move(piv), ambient_dim);
}

Subspace Subspace::from_columns(const Matrix& generators) {
    return row_space(generators.transpose());
}

Subspace Subspace::from_vectors(const std::vector<std::vector<Scalar>>& vecs,
                                std::size_t ambient_dim, const Field& field) {
    return row_space(Matrix::from_rows(vecs, ambient_dim, field));
}

std::vector<Scalar> Subspace::residue(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_)
        throw Error("vector length mismatch in residue");
    std::vector<Scalar> r = v;
    const Field& F = rows_.field();
    for (std::size_t i = 0; i < dim(); ++i) {
        const Scalar c = r[pivots_[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (rows_.at(i, j) != 0) r[j] = F.sub(r[j], F.mul(c, rows_.at(i, j)));
    }
    return r;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    for (const auto& x : residue(v))
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

std::vector<Scalar> Subspace::coords_of(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_) throw Error("vector length mismatch in coords_of");
    std::vector<Scalar> r = v;
    std::vector<Scalar> coords(dim(), Scalar(0));
    const Field& F = rows_.field();
    for (std::size_t i = 0; i < dim(); ++i) {
        const Scalar c = r[pivots_[i]];
        coords[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (rows_.at(i, j) != 0) r[j] = F.sub(r[j], F.mul(c, rows_.at(i, j)));
    }
    for (const auto& x : r)
        if (x != 0) throw Error("coords_of: vector outside subspace");
    return coords;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && rows_ == o.rows_;
}

Subspace sum(const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != t.ambient_dim() || s.field() != t.field())
        throw Error("ambient/field mismatch in sum");
    return row_space(s.basis_rows().vstack(t.basis_rows()));
}

Subspace intersect(const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != t.ambient_dim() || s.field() != t.field())
        throw Error("ambient/field mismatch in intersect");
    const std::size_t a = s.dim(), b = t.dim(), n = s.ambient_dim();
    if (a == 0 || b == 0) return Subspace::zero(n, s.field());
    // x in both spans iff A xa = B xb for some coefficients; solve [A | B] k = 0.
    Matrix A = s.basis();
    Matrix stacked = A.hstack(t.basis());
    Matrix K = null_space_basis(stacked);
    std::vector<std::vector<Scalar>> vecs;
    for (std::size_t k = 0; k < K.cols(); ++k) {
        std::vector<Scalar> xa(a);
        for (std::size_t i = 0; i < a; ++i) xa[i] = K.at(i, k);
        vecs.push_back(A.apply(xa));
    }
    return Subspace::from_vectors(vecs, n, s.field());
}

Subspace complement(const Subspace& s, const Subspace& inside) {
    if (!inside.contains(s))
        throw Error("complement: first argument is not contained in the second");
    Subspace grown = s;
    std::vector<std::vector<Scalar>> kept;
    for (std::size_t i = 0; i < inside.dim() && grown.dim() < inside.dim(); ++i) {
        std::vector<Scalar> cand = inside.basis_vector(i);
        if (grown.contains(cand)) continue;
        kept.push_back(cand);
        grown = sum(grown, Subspace::from_vectors({cand}, inside.ambient_dim(), inside.field()));
    }
    return Subspace::from_vectors(kept, inside.ambient_dim(), inside.field());
}

} // namespace leibniz
