#include "leibniz/quotient.hpp"

namespace leibniz {

QuotientSpace quotient(std::size_t ambient_dim, const Subspace& s) {
    if (s.ambient_dim() != ambient_dim)
        throw Error("ambient dimension mismatch in quotient");
    const Field F = s.field();
    const std::size_t n = ambient_dim, k = s.dim(), q = n - k;

    std::vector<std::size_t> non_pivots;
    {
        std::size_t pi = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (pi < s.pivots().size() && s.pivots()[pi] == c) { ++pi; continue; }
            non_pivots.push_back(c);
        }
    }

    // projection(e_j) = residue(e_j) read off at the non-pivot coordinates:
    // the identity on transversal coordinates, minus the matching basis row
    // on pivot coordinates.
    Matrix proj(q, n, F);
    for (std::size_t a = 0; a < q; ++a) proj.at(a, non_pivots[a]) = 1;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t a = 0; a < q; ++a)
            proj.at(a, s.pivots()[i]) = F.neg(s.basis_rows().at(i, non_pivots[a]));

    Matrix sect(n, q, F);
    std::vector<std::vector<Scalar>> transversal_vecs;
    for (std::size_t a = 0; a < q; ++a) {
        sect.at(non_pivots[a], a) = 1;
        std::vector<Scalar> e(n, Scalar(0));
        e[non_pivots[a]] = 1;
        transversal_vecs.push_back(std::move(e));
    }

    QuotientSpace out{n, s, Subspace::from_vectors(transversal_vecs, n, F),
                      LinearMap(std::move(proj)), LinearMap(std::move(sect))};

    // Self-checks; failures would mean a bug in the pivot bookkeeping.
    if (compose(out.projection, out.section) != LinearMap::identity(q, F))
        throw Error("quotient: projection . section is not the identity");
    if (intersect(out.modded, out.transversal).dim() != 0 || k + q != n)
        throw Error("quotient: transversal does not complement the subspace");
    return out;
}

QuotientSpace quotient(const Subspace& s) { return quotient(s.ambient_dim(), s); }

Subspace project_subspace(const QuotientSpace& q, const Subspace& s) {
    if (s.ambient_dim() != q.ambient_dim)
        throw Error("ambient dimension mismatch in project_subspace");
    if (s.dim() == 0) return Subspace::zero(q.dim(), s.field());
    return Subspace::from_columns(multiply(q.projection.matrix(), s.basis()));
}

} // namespace leibniz
