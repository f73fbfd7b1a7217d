#include "leibniz/criteria.hpp"

#include "leibniz/rowreduce.hpp"
#include "leibniz/zstar.hpp"

namespace leibniz {

CriteriaReport criteria_report(const CentralContext& c, const Subspace& z_star_space) {
    CriteriaReport r;
    r.delta_trivial = c.delta.map.is_zero();
    r.beta_injective = rank(c.ft.inf2) == c.ft.h2_total.dim();
    const std::size_t mq = c.ft.h2_quotient.dim();
    const std::size_t cut = c.derived_meet_z.dim();
    r.dim_identity_holds = mq >= cut && c.ft.h2_total.dim() == mq - cut;
    r.z_in_zstar = z_star_space.contains(c.ft.H);
    r.consistent = r.delta_trivial == r.beta_injective &&
                   r.beta_injective == r.dim_identity_holds &&
                   r.dim_identity_holds == r.z_in_zstar;
    return r;
}

CriteriaReport criteria_report(const LeibnizAlgebra& L, const Subspace& Z) {
    return criteria_report(central_context(L, Z), z_star(L));
}

} // namespace leibniz
