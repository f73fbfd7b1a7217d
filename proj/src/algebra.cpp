#include "leibniz/algebra.hpp"

namespace leibniz {

LeibnizAlgebra::LeibnizAlgebra(std::size_t dim, Field field, std::string name)
    : dim_(dim), field_(field), name_(std::move(name)),
      table_(dim * dim * dim, Scalar(0)) {}

LeibnizAlgebra LeibnizAlgebra::abelian(std::size_t dim, const Field& field) {
    return LeibnizAlgebra(dim, field, "abelian:" + std::to_string(dim));
}

std::vector<Scalar> LeibnizAlgebra::product_basis(std::size_t i, std::size_t j) const {
    std::vector<Scalar> v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = structure_constant(i, j, k);
    return v;
}

void LeibnizAlgebra::set_product(std::size_t i, std::size_t j, const std::vector<Scalar>& value) {
    if (i >= dim_ || j >= dim_ || value.size() != dim_)
        throw Error("set_product: index or length out of range");
    for (std::size_t k = 0; k < dim_; ++k)
        table_[(i * dim_ + j) * dim_ + k] = field_.reduce(value[k]);
}

std::vector<Scalar> LeibnizAlgebra::product(const std::vector<Scalar>& x,
                                            const std::vector<Scalar>& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw Error("product: vector length mismatch");
    std::vector<Scalar> out(dim_, Scalar(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            const Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                const Scalar& t = structure_constant(i, j, k);
                if (t != 0) out[k] += c * t;
            }
        }
    }
    for (auto& v : out) v = field_.reduce(v);
    return out;
}

std::vector<std::array<std::size_t, 3>> leibniz_violations(const LeibnizAlgebra& L) {
    const std::size_t n = L.dim();
    const Field& F = L.field();
    std::vector<std::array<std::size_t, 3>> bad;

    // Sparse tables dominate in practice; skip pairs with no products at all.
    std::vector<char> nz(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                if (L.structure_constant(i, j, l) != 0) {
                    nz[i * n + j] = 1;
                    break;
                }

    std::vector<Scalar> acc(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (!nz[j * n + k] && !nz[i * n + j] && !nz[i * n + k]) continue;
                // e_w coefficient of e_i(e_j e_k) - (e_i e_j)e_k - e_j(e_i e_k)
                std::fill(acc.begin(), acc.end(), Scalar(0));
                for (std::size_t l = 0; l < n; ++l) {
                    const Scalar& t1 = L.structure_constant(j, k, l);
                    if (t1 != 0)
                        for (std::size_t w = 0; w < n; ++w) {
                            const Scalar& s = L.structure_constant(i, l, w);
                            if (s != 0) acc[w] += t1 * s;
                        }
                    const Scalar& t2 = L.structure_constant(i, j, l);
                    if (t2 != 0)
                        for (std::size_t w = 0; w < n; ++w) {
                            const Scalar& s = L.structure_constant(l, k, w);
                            if (s != 0) acc[w] -= t2 * s;
                        }
                    const Scalar& t3 = L.structure_constant(i, k, l);
                    if (t3 != 0)
                        for (std::size_t w = 0; w < n; ++w) {
                            const Scalar& s = L.structure_constant(j, l, w);
                            if (s != 0) acc[w] -= t3 * s;
                        }
                }
                for (std::size_t w = 0; w < n; ++w)
                    if (F.reduce(acc[w]) != 0) {
                        bad.push_back({i, j, k});
                        break;
                    }
            }
    return bad;
}

bool verify_leibniz(const LeibnizAlgebra& L) { return leibniz_violations(L).empty(); }

Subspace product_space(const LeibnizAlgebra& L, const Subspace& U, const Subspace& V) {
    if (U.ambient_dim() != L.dim() || V.ambient_dim() != L.dim())
        throw Error("product_space: ambient dimension mismatch");
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t a = 0; a < U.dim(); ++a)
        for (std::size_t b = 0; b < V.dim(); ++b)
            rows.push_back(L.product(U.basis_vector(a), V.basis_vector(b)));
    return Subspace::from_vectors(rows, L.dim(), L.field());
}

Subspace derived(const LeibnizAlgebra& L) {
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j) rows.push_back(L.product_basis(i, j));
    return Subspace::from_vectors(rows, L.dim(), L.field());
}

Subspace center(const LeibnizAlgebra& L) {
    const std::size_t n = L.dim();
    // Rows constrain z: (z e_j)_k = 0 and (e_j z)_k = 0 for all j, k.
    Matrix sys(2 * n * n, n, L.field());
    std::size_t r = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                sys.at(r, i) = L.structure_constant(i, j, k);
                sys.at(r + 1, i) = L.structure_constant(j, i, k);
            }
            r += 2;
        }
    return Subspace::from_columns(null_space_basis(sys));
}

bool is_central_ideal(const LeibnizAlgebra& L, const Subspace& Z) {
    if (Z.ambient_dim() != L.dim() || Z.field() != L.field()) return false;
    return center(L).contains(Z);
}

bool AlgebraHom::is_homomorphism() const {
    const std::size_t n = domain.dim();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Scalar> mi = map.matrix().col(i);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Scalar> lhs = map.apply(domain.product_basis(i, j));
            std::vector<Scalar> rhs = codomain.product(mi, map.matrix().col(j));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool is_nilpotent(const LeibnizAlgebra& L) {
    const Subspace full = Subspace::full(L.dim(), L.field());
    Subspace term = full;
    while (term.dim() > 0) {
        Subspace next = sum(product_space(L, term, full), product_space(L, full, term));
        if (next.dim() == term.dim()) return false;
        term = next;
    }
    return true;
}

QuotientAlgebra quotient_algebra(const LeibnizAlgebra& L, const Subspace& I) {
    const std::size_t n = L.dim();
    if (I.ambient_dim() != n || I.field() != L.field())
        throw Error("quotient_algebra: ambient/field mismatch");
    const Subspace full = Subspace::full(n, L.field());
    if (!I.contains(product_space(L, full, I)) || !I.contains(product_space(L, I, full)))
        throw Error("quotient_algebra: subspace is not a two-sided ideal");

    QuotientSpace q = quotient(n, I);
    const std::size_t m = q.dim();
    LeibnizAlgebra Q(m, L.field(),
                     L.name().empty() ? "quotient" : L.name() + "/ideal");
    for (std::size_t a = 0; a < m; ++a) {
        const std::vector<Scalar> va = q.section.matrix().col(a);
        for (std::size_t b = 0; b < m; ++b) {
            const std::vector<Scalar> prod = L.product(va, q.section.matrix().col(b));
            Q.set_product(a, b, q.projection.apply(prod));
        }
    }
    QuotientAlgebra out{Q, q, AlgebraHom{L, Q, q.projection}, q.section};
    // The induced table is well-defined because I is an ideal; this check
    // guards the pivot bookkeeping, not the mathematics.
    if (!out.projection.is_homomorphism())
        throw Error("quotient_algebra: projection failed the homomorphism check");
    return out;
}

Subspace hom_space(const LeibnizAlgebra& L, const TrivialModule& A) {
    const std::size_t n = L.dim(), m = A.dim;
    const Subspace d = derived(L);
    // One constraint per derived-basis vector and value component.
    Matrix sys(d.dim() * m, n * m, L.field());
    for (std::size_t r = 0; r < d.dim(); ++r) {
        const auto v = d.basis_vector(r);
        for (std::size_t c = 0; c < m; ++c)
            for (std::size_t i = 0; i < n; ++i) sys.at(r * m + c, i * m + c) = v[i];
    }
    return Subspace::from_columns(null_space_basis(sys));
}

Matrix hom_to_matrix(const std::vector<Scalar>& flat, std::size_t n, std::size_t m,
                     const Field& field) {
    if (flat.size() != n * m) throw Error("hom_to_matrix: length mismatch");
    Matrix out(m, n, field);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < m; ++c) out.at(c, i) = flat[i * m + c];
    return out;
}

std::vector<Scalar> hom_from_matrix(const Matrix& map) {
    std::vector<Scalar> flat(map.rows() * map.cols());
    for (std::size_t i = 0; i < map.cols(); ++i)
        for (std::size_t c = 0; c < map.rows(); ++c) flat[i * map.rows() + c] = map.at(c, i);
    return flat;
}

} // namespace leibniz
