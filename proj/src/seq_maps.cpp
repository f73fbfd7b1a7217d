#include "leibniz/seq_maps.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

TwoCochain defining_cocycle(const LeibnizAlgebra& L, const Subspace& H,
                            const QuotientAlgebra& quo, const Matrix& section) {
    const std::size_t n = L.dim();
    const std::size_t q = quo.algebra.dim();
    const std::size_t h = H.dim();
    if (section.rows() != n || section.cols() != q)
        throw Error("defining cocycle: section shape mismatch");

    TwoCochain f(q, h, L.field());
    for (std::size_t a = 0; a < q; ++a) {
        const std::vector<Scalar> sa = section.col(a);
        for (std::size_t b = 0; b < q; ++b) {
            const std::vector<Scalar> sb = section.col(b);
            std::vector<Scalar> v = L.product(sa, sb);
            const std::vector<Scalar> lifted = section.apply(quo.algebra.product_basis(a, b));
            for (std::size_t i = 0; i < n; ++i) v[i] = L.field().reduce(v[i] - lifted[i]);
            const std::vector<Scalar> hc = H.coords_of(v); // central ideal: always lands in H
            for (std::size_t c = 0; c < h; ++c) f.set(a, b, c, hc[c]);
        }
    }
    return f;
}

Matrix transgression_matrix(const CohomologyGroup& h2_quotient, const TwoCochain& defining,
                            std::size_t coeff_dim) {
    const std::size_t h = defining.coeff_dim();
    const std::size_t m = coeff_dim;
    const Field& F = h2_quotient.algebra().field();
    Matrix tra(h2_quotient.dim(), h * m, F);
    Matrix chi(m, h, F);
    for (std::size_t b = 0; b < h; ++b)
        for (std::size_t c = 0; c < m; ++c) {
            chi.set(c, b, F.one());
            const std::vector<Scalar> cls = h2_quotient.class_of(defining.map_coefficients(chi));
            for (std::size_t r = 0; r < cls.size(); ++r) tra.set(r, b * m + c, cls[r]);
            chi.set(c, b, F.zero());
        }
    return tra;
}

FiveTermData five_term_data(const LeibnizAlgebra& L, const Subspace& H,
                            const TrivialModule& A) {
    if (!is_central_ideal(L, H)) throw Error("five-term data requires a central ideal");
    const std::size_t n = L.dim();
    const std::size_t m = A.dim;
    const Field& F = L.field();

    QuotientAlgebra quo = quotient_algebra(L, H);
    const std::size_t q = quo.algebra.dim();
    const std::size_t h = H.dim();

    Subspace hom_quotient = hom_space(quo.algebra, A);
    Subspace hom_total = hom_space(L, A);
    CohomologyGroup h2_quotient(quo.algebra, A);
    CohomologyGroup h2_total(L, A);
    TwoCochain defining = defining_cocycle(L, H, quo, quo.section.matrix());

    const Matrix& P = quo.projection.map.matrix();

    Matrix inf1(hom_total.dim(), hom_quotient.dim(), F);
    for (std::size_t j = 0; j < hom_quotient.dim(); ++j) {
        const Matrix X = hom_to_matrix(hom_quotient.basis_vector(j), q, m, F);
        const std::vector<Scalar> col = hom_total.coords_of(hom_from_matrix(X * P));
        for (std::size_t r = 0; r < col.size(); ++r) inf1.set(r, j, col[r]);
    }

    Matrix res(h * m, hom_total.dim(), F);
    const Matrix emb = H.basis();
    for (std::size_t j = 0; j < hom_total.dim(); ++j) {
        const Matrix X = hom_to_matrix(hom_total.basis_vector(j), n, m, F);
        const std::vector<Scalar> col = hom_from_matrix(X * emb);
        for (std::size_t r = 0; r < col.size(); ++r) res.set(r, j, col[r]);
    }

    Matrix tra = transgression_matrix(h2_quotient, defining, m);

    Matrix inf2(h2_total.dim(), h2_quotient.dim(), F);
    for (std::size_t j = 0; j < h2_quotient.dim(); ++j) {
        const std::vector<Scalar> col = h2_total.class_of(h2_quotient.reps()[j].pullback(quo.projection.map));
        for (std::size_t r = 0; r < col.size(); ++r) inf2.set(r, j, col[r]);
    }

    return FiveTermData{L, H, A, std::move(quo), std::move(hom_quotient), std::move(hom_total),
                        std::move(h2_quotient), std::move(h2_total), std::move(defining),
                        std::move(inf1), std::move(res), std::move(tra), std::move(inf2)};
}

DeltaData delta_map(const LeibnizAlgebra& L, const Subspace& Z,
                    const CohomologyGroup& h2_total_trivial) {
    if (h2_total_trivial.module().dim != 1)
        throw Error("delta map needs one-dimensional trivial coefficients");
    const Field& F = L.field();

    QuotientSpace mod_derived = quotient(L.dim(), derived(L));
    TensorSpace t1 = tensor_space(mod_derived.dim(), Z.dim());
    TensorSpace t2 = tensor_space(Z.dim(), mod_derived.dim());

    Matrix map(t1.dim() + t2.dim(), h2_total_trivial.dim(), F);
    for (std::size_t j = 0; j < h2_total_trivial.dim(); ++j) {
        const TwoCochain& g = h2_total_trivial.reps()[j];
        for (std::size_t a = 0; a < mod_derived.dim(); ++a) {
            const std::vector<Scalar> x = mod_derived.section.matrix().col(a);
            for (std::size_t b = 0; b < Z.dim(); ++b) {
                const std::vector<Scalar> z = Z.basis_vector(b);
                map.set(t1.index(a, b), j, g.eval(x, z)[0]);
                map.set(t1.dim() + t2.index(b, a), j, g.eval(z, x)[0]);
            }
        }
    }
    return DeltaData{std::move(mod_derived), t1, t2, std::move(map)};
}

} // namespace leibniz
