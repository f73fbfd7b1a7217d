#include "leibniz/cohomology.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/rowreduce.hpp"

namespace leibniz {

Subspace cocycle_space(const LeibnizAlgebra& L, const TrivialModule& A) {
    const std::size_t n = L.dim();
    const std::size_t m = A.dim;
    const Field& F = L.field();
    const std::size_t cols = n * n * m;

    // One coefficient row per basis triple, shared across the m value
    // components: f(i,jk) - f(ij,k) - f(j,ik) = 0.
    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> coef(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::fill(coef.begin(), coef.end(), Scalar(0));
                for (std::size_t l = 0; l < n; ++l) {
                    coef[i * n + l] += L.structure_constant(j, k, l);
                    coef[l * n + k] -= L.structure_constant(i, j, l);
                    coef[j * n + l] -= L.structure_constant(i, k, l);
                }
                bool zero = true;
                for (auto& v : coef) {
                    v = F.reduce(v);
                    if (v != 0) zero = false;
                }
                if (zero) continue;
                for (std::size_t c = 0; c < m; ++c) {
                    std::vector<Scalar> row(cols, Scalar(0));
                    for (std::size_t p = 0; p < n * n; ++p)
                        if (coef[p] != 0) row[p * m + c] = coef[p];
                    rows.push_back(std::move(row));
                }
            }

    if (rows.empty()) return Subspace::full(cols, F);
    Matrix M = Matrix::from_rows(rows, cols, F);
    return Subspace::from_columns(null_space_basis(M));
}

Subspace coboundary_space(const LeibnizAlgebra& L, const TrivialModule& A) {
    const std::size_t n = L.dim();
    const std::size_t m = A.dim;
    const Field& F = L.field();

    // Columns: the coboundary of each eps = (basis functional l, component c).
    Matrix D(n * n * m, n * m, F);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                const Scalar& t = L.structure_constant(i, j, l);
                if (t == 0) continue;
                for (std::size_t c = 0; c < m; ++c)
                    D.set((i * n + j) * m + c, l * m + c, -t);
            }
    return Subspace::from_columns(D);
}

namespace {

// Rewrite the coboundaries in cocycle-basis coordinates and mod out.
QuotientSpace class_coordinates(const Subspace& z2, const Subspace& b2, const Field& F) {
    if (!z2.contains(b2)) throw Error("coboundaries escaped the cocycle space");
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t r = 0; r < b2.dim(); ++r)
        rows.push_back(z2.coords_of(b2.basis_vector(r)));
    return quotient(z2.dim(), Subspace::from_vectors(rows, z2.dim(), F));
}

} // namespace

CohomologyGroup::CohomologyGroup(LeibnizAlgebra L, TrivialModule A)
    : L_(std::move(L)), A_(A),
      z2_(cocycle_space(L_, A_)), b2_(coboundary_space(L_, A_)),
      quot_(class_coordinates(z2_, b2_, L_.field())) {
    reps_.reserve(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        std::vector<Scalar> cls(dim(), Scalar(0));
        cls[j] = Scalar(1);
        reps_.push_back(rep_of(cls));
    }
}

bool CohomologyGroup::is_cocycle(const TwoCochain& f) const {
    return f.algebra_dim() == L_.dim() && f.coeff_dim() == A_.dim &&
           z2_.contains(f.flat());
}

bool CohomologyGroup::is_coboundary(const TwoCochain& f) const {
    return f.algebra_dim() == L_.dim() && f.coeff_dim() == A_.dim &&
           b2_.contains(f.flat());
}

std::vector<Scalar> CohomologyGroup::class_of(const TwoCochain& f) const {
    if (!is_cocycle(f)) throw Error("class of a non-cocycle requested");
    return quot_.projection.apply(z2_.coords_of(f.flat()));
}

TwoCochain CohomologyGroup::rep_of(const std::vector<Scalar>& cls) const {
    if (cls.size() != dim()) throw Error("class coordinate length mismatch");
    std::vector<Scalar> z2c = quot_.section.apply(cls);
    std::vector<Scalar> flat = z2_.basis().apply(z2c);
    return TwoCochain::from_flat(std::move(flat), L_.dim(), A_.dim, L_.field());
}

CohomologyGroup h2(const LeibnizAlgebra& L, const TrivialModule& A) {
    return CohomologyGroup(L, A);
}

} // namespace leibniz
