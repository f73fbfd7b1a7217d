#pragma once

#include "leibniz/algebra.hpp"

namespace leibniz {

// Iterated central extensions of a small abelian algebra by random cocycles;
// the result is always nilpotent. Deterministic in (field, dim, seed).
LeibnizAlgebra random_nilpotent(const Field& F, std::size_t dim, std::uint64_t seed);

// Same construction with an exact extension-step budget: starts from an
// abelian algebra of dimension max(1, dim - 2*steps) and performs
// min(steps, dim - start) steps, each enlarging by 1 or 2, landing exactly
// on dim. steps = 0 yields the abelian algebra of the requested dimension.
LeibnizAlgebra random_nilpotent(const Field& F, std::size_t dim, std::uint64_t seed,
                                std::size_t steps);

} // namespace leibniz
