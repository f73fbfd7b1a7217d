#pragma once

#include "leibniz/sequences.hpp"

namespace leibniz {

// The four equivalent conditions attached to a central ideal Z: the pairing
// map vanishes, the dual inflation is injective, the multiplier dimensions
// satisfy dim M(L) = dim M(L/Z) - dim(L' meet Z), and Z sits inside Z*(L).
// They are computed independently; disagreement is a reportable finding.
struct CriteriaReport {
    bool delta_trivial = false;
    bool beta_injective = false;
    bool dim_identity_holds = false;
    bool z_in_zstar = false;
    bool consistent = false;
};

CriteriaReport criteria_report(const CentralContext& c, const Subspace& z_star_space);
CriteriaReport criteria_report(const LeibnizAlgebra& L, const Subspace& Z);

} // namespace leibniz
