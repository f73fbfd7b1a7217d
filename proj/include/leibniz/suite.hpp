#pragma once

#include "leibniz/algebra.hpp"

#include <cstdint>
#include <map>

namespace leibniz {

// Bounded, deduplicated family of central ideals of L: the zero ideal, the
// full center, every span of a single canonical center basis vector, and
// random low-dimensional subspaces of the center. Deterministic in seed.
std::vector<Subspace> central_ideal_samples(const LeibnizAlgebra& L, std::size_t cap,
                                            std::uint64_t seed);

struct SuiteConfig {
    Field field = Field::rationals();
    std::size_t random_count = 20; // random nilpotent algebras added to the catalog
    std::size_t max_dim = 5;       // random dimensions cycle through 2..max_dim
    std::uint64_t base_seed = 1;
    std::size_t ideal_cap = 6;
    std::string reproducer_dir = "."; // "" disables reproducer files
};

struct SuiteFailure {
    std::string algebra;
    std::string digest;
    std::string property;
    std::string detail;
    std::string reproducer; // written file, or "" when disabled/unwritable
};

struct SuiteOutcome {
    std::size_t algebras = 0;
    std::size_t checks = 0;
    std::map<std::string, std::size_t> checks_by_property;
    std::vector<SuiteFailure> failures; // sorted by (digest, property, detail)
};

// Runs every property family (identity, exact sequences over sampled central
// ideals, criteria consistency, cover contract, Z* agreement and stem center
// images, file and extension round trips, section independence) over the
// catalog plus random nilpotent algebras. Algebras run in parallel; the
// outcome is schedule-independent.
SuiteOutcome run_suite(const SuiteConfig& cfg);

} // namespace leibniz
