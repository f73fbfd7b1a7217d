#pragma once

#include "leibniz/extension.hpp"

namespace leibniz {

// dim H^2(L,F), the size of the multiplier.
std::size_t multiplier_dim(const LeibnizAlgebra& L);

// One cochain valued in F^t whose components are the given cochains.
TwoCochain stack_cochains(const std::vector<TwoCochain>& comps);

// Extension of L by a full basis of H^2(L,F) classes. The representatives
// must be cocycles whose classes are linearly independent and span; the
// result is verified to be a stem extension with kernel of multiplier size,
// and a violation is reported as a finding rather than assumed away.
CentralExtension cover_from_classes(const LeibnizAlgebra& L, const CohomologyGroup& h2F,
                                    const std::vector<TwoCochain>& reps);

// The canonical cover: the stored transversal representatives of h2(L, F).
CentralExtension cover(const LeibnizAlgebra& L);

// The transgression of the cover extension, Hom(kernel, F) -> H^2(L,F), is
// a square matrix; bijectivity is a rank check.
bool tra_bijective_on_cover(const CohomologyGroup& h2F, const CentralExtension& cov);
bool tra_bijective_on_cover(const LeibnizAlgebra& L);

} // namespace leibniz
