#include "leibniz/extension.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

CentralExtension from_cocycle(const LeibnizAlgebra& L, const TwoCochain& f,
                              const std::string& name) {
    const std::size_t n = L.dim();
    const std::size_t m = f.coeff_dim();
    const Field& F = L.field();
    if (f.algebra_dim() != n || f.field() != F)
        throw InputError("from_cocycle: cochain shape or field mismatch");
    if (!satisfies_cocycle_identity(L, f))
        throw InputError("from_cocycle: cochain is not a cocycle");

    LeibnizAlgebra total(n + m, F, name.empty() ? L.name() + ":ext" : name);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Scalar> prod(n + m, Scalar(0));
            const std::vector<Scalar> base_prod = L.product_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) prod[k] = base_prod[k];
            for (std::size_t c = 0; c < m; ++c) prod[n + c] = f.at(i, j, c);
            total.set_product(i, j, prod);
        }
    if (!verify_leibniz(total))
        throw Error("from_cocycle: twisted product failed the identity check");

    std::vector<std::vector<Scalar>> kernel_rows;
    for (std::size_t c = 0; c < m; ++c) {
        std::vector<Scalar> u(n + m, Scalar(0));
        u[n + c] = Scalar(1);
        kernel_rows.push_back(std::move(u));
    }
    Subspace kernel = Subspace::from_vectors(kernel_rows, n + m, F);
    if (!is_central_ideal(total, kernel))
        throw Error("from_cocycle: kernel escaped the center");

    Matrix P(n, n + m, F);
    Matrix S(n + m, n, F);
    for (std::size_t i = 0; i < n; ++i) {
        P.set(i, i, F.one());
        S.set(i, i, F.one());
    }
    return CentralExtension{L, std::move(total), std::move(kernel),
                            LinearMap(std::move(P)), LinearMap(std::move(S)), f};
}

CentralExtension split_extension(const LeibnizAlgebra& L, std::size_t m) {
    return from_cocycle(L, TwoCochain(L.dim(), m, L.field()), L.name() + ":split");
}

TwoCochain cocycle_of(const CentralExtension& ext) {
    const std::size_t n = ext.base.dim();
    const std::size_t m = ext.kernel.dim();
    const Field& F = ext.base.field();
    const Matrix& S = ext.section.matrix();

    TwoCochain f(n, m, F);
    for (std::size_t a = 0; a < n; ++a) {
        const std::vector<Scalar> sa = S.col(a);
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<Scalar> w = ext.total.product(sa, S.col(b));
            const std::vector<Scalar> lifted = S.apply(ext.base.product_basis(a, b));
            for (std::size_t k = 0; k < w.size(); ++k) w[k] = F.reduce(w[k] - lifted[k]);
            const std::vector<Scalar> hc = ext.kernel.coords_of(w);
            for (std::size_t c = 0; c < m; ++c) f.set(a, b, c, hc[c]);
        }
    }
    return f;
}

bool equivalent(const CentralExtension& a, const CentralExtension& b) {
    if (a.base != b.base || a.kernel.dim() != b.kernel.dim())
        throw Error("equivalent: extensions have different base or kernel dims");
    const TwoCochain diff = cocycle_of(a) - cocycle_of(b);
    return coboundary_space(a.base, TrivialModule{a.kernel.dim()}).contains(diff.flat());
}

bool is_stem(const CentralExtension& ext) {
    return derived(ext.total).contains(ext.kernel);
}

} // namespace leibniz
