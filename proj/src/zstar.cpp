#include "leibniz/zstar.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/rowreduce.hpp"

#include <random>

namespace leibniz {

Subspace center_image(const LeibnizAlgebra& total, const Matrix& projection_to_base) {
    return Subspace::from_columns(projection_to_base * center(total).basis());
}

Subspace z_star_annihilator(const LeibnizAlgebra& L) {
    const std::size_t n = L.dim();
    const Field& F = L.field();
    const Subspace Z = center(L);
    if (Z.dim() == 0) return Z;

    const Subspace z2 = cocycle_space(L, TrivialModule{1});
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t g = 0; g < z2.dim(); ++g) {
        const TwoCochain f = TwoCochain::from_flat(z2.basis_vector(g), n, 1, F);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Scalar> left(Z.dim(), Scalar(0)), right(Z.dim(), Scalar(0));
            for (std::size_t b = 0; b < Z.dim(); ++b) {
                const std::vector<Scalar> zb = Z.basis_vector(b);
                Scalar xl(0), xr(0);
                for (std::size_t j = 0; j < n; ++j) {
                    if (zb[j] == 0) continue;
                    xl += zb[j] * f.at(i, j, 0);
                    xr += zb[j] * f.at(j, i, 0);
                }
                left[b] = F.reduce(xl);
                right[b] = F.reduce(xr);
            }
            rows.push_back(std::move(left));
            rows.push_back(std::move(right));
        }
    }

    const Matrix cond = Matrix::from_rows(rows, Z.dim(), F);
    const Matrix in_center = null_space_basis(cond);
    return Subspace::from_columns(Z.basis() * in_center);
}

Subspace z_star_cover_route(const CohomologyGroup& h2F, const CentralExtension& cov) {
    return center_image(cov.total, cov.projection.matrix());
}

Subspace z_star_cover_route(const LeibnizAlgebra& L) {
    CohomologyGroup h2F(L, TrivialModule{1});
    return z_star_cover_route(h2F, cover_from_classes(L, h2F, h2F.reps()));
}

Subspace z_star(const LeibnizAlgebra& L) {
    const Subspace ann = z_star_annihilator(L);
    const Subspace cov = z_star_cover_route(L);
    if (!(ann == cov))
        throw FindingError("z_star routes disagree on '" + L.name() + "'");
    return ann;
}

bool is_unicentral(const LeibnizAlgebra& L) { return z_star(L) == center(L); }

namespace {

// Triangular mixing and coboundary shifts keep the classes a basis.
std::vector<TwoCochain> twisted_representatives(const CohomologyGroup& h2F,
                                                std::mt19937_64& rng) {
    std::vector<TwoCochain> reps = h2F.reps();
    const std::size_t t = reps.size();
    const Subspace& b2 = h2F.coboundaries();
    const LeibnizAlgebra& L = h2F.algebra();

    for (std::size_t c = 0; c < t; ++c) {
        if (c >= 1) {
            const std::size_t c2 = rng() % c;
            const std::size_t mode = rng() % 3;
            if (mode == 1) reps[c] = reps[c] + h2F.reps()[c2];
            if (mode == 2) reps[c] = reps[c] - h2F.reps()[c2];
        }
        if (b2.dim() > 0) {
            const std::size_t g = rng() % b2.dim();
            const std::size_t mode = rng() % 3;
            const TwoCochain cb =
                TwoCochain::from_flat(b2.basis_vector(g), L.dim(), 1, L.field());
            if (mode == 1) reps[c] = reps[c] + cb;
            if (mode == 2) reps[c] = reps[c] - cb;
        }
    }
    return reps;
}

} // namespace

StemCenterReport stem_center_image(const LeibnizAlgebra& L, std::uint64_t seed) {
    const Field& F = L.field();
    CohomologyGroup h2F(L, TrivialModule{1});
    CentralExtension cov = cover_from_classes(L, h2F, h2F.reps());
    const Subspace zs = z_star_annihilator(L);
    const Subspace zs_cov = z_star_cover_route(h2F, cov);
    if (!(zs == zs_cov))
        throw FindingError("z_star routes disagree on '" + L.name() + "'");
    const Subspace zc = center(L);
    const std::size_t t = h2F.dim();

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<StemVariantImage> variants;
    bool pass = true;

    variants.push_back({"cover", cov.kernel.dim(), zs_cov, true});

    for (int k = 0; k < 3 && t >= 1; ++k) {
        CentralExtension twisted =
            cover_from_classes(L, h2F, twisted_representatives(h2F, rng));
        Subspace img = center_image(twisted.total, twisted.projection.matrix());
        const bool ok = (img == zs);
        pass = pass && ok;
        variants.push_back({"cover_twisted:" + std::to_string(k), twisted.kernel.dim(),
                            std::move(img), ok});
    }

    for (int k = 0; k < 2 && t >= 2; ++k) {
        // Quotient of the cover by a complement of a proper sub-multiplier.
        const std::size_t s = 1 + rng() % (t - 1);
        std::vector<std::vector<Scalar>> sub_rows;
        for (std::size_t r = 0; r < s; ++r) {
            std::vector<Scalar> row(t, Scalar(0));
            for (std::size_t c = 0; c < t; ++c)
                row[c] = F.from_int(static_cast<long>(rng() % 3) - 1);
            sub_rows.push_back(std::move(row));
        }
        Subspace sub = Subspace::from_vectors(sub_rows, t, F);
        if (sub.dim() < s) {
            sub_rows.clear();
            for (std::size_t r = 0; r < s; ++r) {
                std::vector<Scalar> row(t, Scalar(0));
                row[r] = Scalar(1);
                sub_rows.push_back(std::move(row));
            }
            sub = Subspace::from_vectors(sub_rows, t, F);
        }
        const Subspace comp = complement(sub, Subspace::full(t, F));

        std::vector<std::vector<Scalar>> amb_rows;
        for (std::size_t r = 0; r < comp.dim(); ++r)
            amb_rows.push_back(cov.kernel.basis().apply(comp.basis_vector(r)));
        const Subspace killed = Subspace::from_vectors(amb_rows, cov.total.dim(), F);

        QuotientAlgebra q = quotient_algebra(cov.total, killed);
        const Matrix proj = cov.projection.matrix() * q.section.matrix();
        Subspace img = center_image(q.algebra, proj);

        const bool sandwiched = img.contains(zs) && zc.contains(img);
        pass = pass && sandwiched;
        variants.push_back({"stem_quotient:" + std::to_string(k), sub.dim(),
                            std::move(img), false});
        variants.back().matches_z_star = (variants.back().image == zs);
    }

    return StemCenterReport{zs, zc, std::move(variants), pass};
}

} // namespace leibniz
