#pragma once

#include "leibniz/cover.hpp"

namespace leibniz {

// Image in the base of the center of an extension total algebra, through the
// given projection matrix.
Subspace center_image(const LeibnizAlgebra& total, const Matrix& projection_to_base);

// { z in Z(L) : f(x,z) = f(z,x) = 0 for every cocycle f and every x }.
// A basis of the cocycle space suffices; coboundaries vanish there anyway.
Subspace z_star_annihilator(const LeibnizAlgebra& L);

// Image of the cover's center in L.
Subspace z_star_cover_route(const CohomologyGroup& h2F, const CentralExtension& cov);
Subspace z_star_cover_route(const LeibnizAlgebra& L);

// Both routes, cross-checked; disagreement is a reportable finding.
Subspace z_star(const LeibnizAlgebra& L);

// z_star(L) == center(L).
bool is_unicentral(const LeibnizAlgebra& L);

// One constructed stem extension and where its center lands in L.
struct StemVariantImage {
    std::string kind; // "cover", "cover_twisted:k", "stem_quotient:k"
    std::size_t kernel_dim = 0;
    Subspace image;
    bool matches_z_star = false;
};

// Builds the cover plus a bounded number of variants: covers from twisted
// representative choices (must reproduce z_star exactly) and stem quotients
// of the cover (squeezed between z_star and the center; equal to the center
// whenever L is unicentral).
struct StemCenterReport {
    Subspace z_star_space;
    Subspace center_space;
    std::vector<StemVariantImage> variants;
    bool pass = false;
};

StemCenterReport stem_center_image(const LeibnizAlgebra& L, std::uint64_t seed);

} // namespace leibniz
