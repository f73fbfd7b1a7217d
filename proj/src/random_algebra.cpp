#include "leibniz/random_algebra.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/extension.hpp"

#include <random>

namespace leibniz {

namespace {

// One central extension of L by a random 1-dimensional-per-component cocycle
// with coefficients in F^m drawn from {-2..2} on a cocycle-space basis. Falls
// back to the first basis cocycle so the step is never a plain direct sum
// unless the cocycle space is zero.
LeibnizAlgebra extend_once(const LeibnizAlgebra& L, std::size_t m, std::mt19937_64& rng) {
    const std::size_t n = L.dim();
    const Subspace z2 = cocycle_space(L, TrivialModule{1});
    std::vector<Scalar> flat(n * n * m, Scalar(0));
    bool nonzero = false;
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t g = 0; g < z2.dim(); ++g) {
            const long coeff = static_cast<long>(rng() % 5) - 2;
            if (coeff == 0) continue;
            nonzero = true;
            const std::vector<Scalar> bv = z2.basis_vector(g);
            for (std::size_t p = 0; p < n * n; ++p)
                if (bv[p] != 0) flat[p * m + c] += Scalar(coeff) * bv[p];
        }
    if (!nonzero && z2.dim() > 0) {
        const std::vector<Scalar> bv = z2.basis_vector(0);
        for (std::size_t p = 0; p < n * n; ++p) flat[p * m] = bv[p];
    }

    const TwoCochain f = TwoCochain::from_flat(std::move(flat), n, m, L.field());
    return from_cocycle(L, f).total;
}

} // namespace

LeibnizAlgebra random_nilpotent(const Field& F, std::size_t dim, std::uint64_t seed) {
    if (dim == 0) throw InputError("random_nilpotent: dimension must be positive");
    std::mt19937_64 rng(seed);

    std::size_t start = 1 + rng() % 2;
    if (start > dim) start = dim;
    LeibnizAlgebra L = LeibnizAlgebra::abelian(start, F);

    while (L.dim() < dim) {
        const std::size_t room = dim - L.dim();
        const std::size_t m = 1 + rng() % std::min<std::size_t>(2, room);
        L = extend_once(L, m, rng);
    }

    L.set_name("random:seed=" + std::to_string(seed) + ":dim=" + std::to_string(dim));
    return L;
}

LeibnizAlgebra random_nilpotent(const Field& F, std::size_t dim, std::uint64_t seed,
                                std::size_t steps) {
    if (dim == 0) throw InputError("random_nilpotent: dimension must be positive");
    std::mt19937_64 rng(seed);

    // Start large enough that `steps` extension steps of size <= 2 can land
    // exactly on dim; when dim is too small for the requested count the
    // effective count shrinks to dim - start.
    std::size_t start = dim > 2 * steps ? dim - 2 * steps : 1;
    LeibnizAlgebra L = LeibnizAlgebra::abelian(start, F);
    std::size_t left = std::min(steps, dim - start);

    while (left > 0) {
        const std::size_t remaining = dim - L.dim();
        const std::size_t lo = remaining > 2 * (left - 1) ? remaining - 2 * (left - 1) : 1;
        const std::size_t hi = std::min<std::size_t>(2, remaining - (left - 1));
        const std::size_t m = lo + (hi > lo ? rng() % (hi - lo + 1) : 0);
        L = extend_once(L, m, rng);
        --left;
    }

    L.set_name("random:seed=" + std::to_string(seed) + ":dim=" + std::to_string(dim) +
               ":steps=" + std::to_string(steps));
    return L;
}

} // namespace leibniz
