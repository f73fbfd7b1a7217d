#include "leibniz/sequences.hpp"

#include "leibniz/rowreduce.hpp"

namespace leibniz {

namespace {

Subspace column_space(const Matrix& m) { return Subspace::from_columns(m); }

Subspace kernel_space(const Matrix& m) {
    return Subspace::from_columns(null_space_basis(m));
}

JointReport joint(std::string at, const Subspace& image, const Subspace& target) {
    JointReport j;
    j.at = std::move(at);
    j.image_dim = image.dim();
    j.kernel_dim = target.dim();
    j.exact = (image == target);
    return j;
}

bool all_exact(const std::vector<JointReport>& joints) {
    for (const auto& j : joints)
        if (!j.exact) return false;
    return true;
}

} // namespace

SequenceReport check_five_term(const FiveTermData& d) {
    const Field& F = d.L.field();
    SequenceReport r;
    r.name = "five_term";
    r.node_names = {"Hom(L/H,A)", "Hom(L,A)", "Hom(H,A)", "H2(L/H,A)", "H2(L,A)"};
    r.node_dims = {d.hom_quotient.dim(), d.hom_total.dim(), d.H.dim() * d.A.dim,
                   d.h2_quotient.dim(), d.h2_total.dim()};
    r.map_ranks = {rank(d.inf1), rank(d.res), rank(d.tra), rank(d.inf2)};
    r.joints = {
        joint("Hom(L/H,A)", Subspace::zero(d.hom_quotient.dim(), F), kernel_space(d.inf1)),
        joint("Hom(L,A)", column_space(d.inf1), kernel_space(d.res)),
        joint("Hom(H,A)", column_space(d.res), kernel_space(d.tra)),
        joint("H2(L/H,A)", column_space(d.tra), kernel_space(d.inf2)),
    };
    r.pass = all_exact(r.joints);
    return r;
}

SequenceReport check_five_term(const LeibnizAlgebra& L, const Subspace& H,
                               const TrivialModule& A) {
    return check_five_term(five_term_data(L, H, A));
}

CentralContext central_context(const LeibnizAlgebra& L, const Subspace& Z) {
    FiveTermData ft = five_term_data(L, Z, TrivialModule{1});
    DeltaData delta = delta_map(L, Z, ft.h2_total);
    Subspace der = derived(L);
    Subspace derived_meet_z = intersect(der, Z);
    QuotientSpace mod_z_derived = quotient(L.dim(), sum(Z, der));
    Matrix alpha = delta.mod_derived.projection.matrix() * Z.basis();
    Matrix nu = mod_z_derived.projection.matrix() * delta.mod_derived.section.matrix();
    return CentralContext{std::move(ft), std::move(delta), std::move(derived_meet_z),
                          std::move(mod_z_derived), std::move(alpha), std::move(nu)};
}

SequenceReport check_extended(const CentralContext& c) {
    SequenceReport r;
    r.name = "extended";
    r.node_names = {"H2(L/Z,F)", "H2(L,F)", "T(L,Z)"};
    r.node_dims = {c.ft.h2_quotient.dim(), c.ft.h2_total.dim(),
                   c.delta.t1.dim() + c.delta.t2.dim()};
    r.map_ranks = {rank(c.ft.inf2), rank(c.delta.map)};
    r.joints = {joint("H2(L,F)", column_space(c.ft.inf2), kernel_space(c.delta.map))};
    r.pass = all_exact(r.joints);
    return r;
}

SequenceReport check_ganea(const CentralContext& c) {
    const Matrix tensor_to_ml = c.delta.map.transpose();
    const Matrix beta = c.ft.inf2.transpose();
    const Matrix gamma = c.ft.tra.transpose();

    // The terminal node, written in Z-coordinates.
    const Subspace& Z = c.ft.H;
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < c.derived_meet_z.dim(); ++i)
        rows.push_back(Z.coords_of(c.derived_meet_z.basis_vector(i)));
    Subspace target = Subspace::from_vectors(rows, Z.dim(), c.ft.L.field());

    SequenceReport r;
    r.name = "ganea";
    r.node_names = {"T(L,Z)", "M(L)", "M(L/Z)", "L' meet Z"};
    r.node_dims = {c.delta.t1.dim() + c.delta.t2.dim(), c.ft.h2_total.dim(),
                   c.ft.h2_quotient.dim(), c.derived_meet_z.dim()};
    r.map_ranks = {rank(tensor_to_ml), rank(beta), rank(gamma)};
    r.joints = {
        joint("M(L)", column_space(tensor_to_ml), kernel_space(beta)),
        joint("M(L/Z)", column_space(beta), kernel_space(gamma)),
        joint("L' meet Z", column_space(gamma), target),
    };
    r.pass = all_exact(r.joints);
    return r;
}

SequenceReport check_stallings(const CentralContext& c) {
    const Field& F = c.ft.L.field();
    const Matrix beta = c.ft.inf2.transpose();
    const Matrix theta = c.ft.tra.transpose();

    SequenceReport r;
    r.name = "stallings";
    r.node_names = {"M(L)", "M(L/Z)", "Z", "L/L'", "L/(Z+L')"};
    r.node_dims = {c.ft.h2_total.dim(), c.ft.h2_quotient.dim(), c.ft.H.dim(),
                   c.delta.mod_derived.dim(), c.mod_z_derived.dim()};
    r.map_ranks = {rank(beta), rank(theta), rank(c.alpha), rank(c.nu)};
    r.joints = {
        joint("M(L/Z)", column_space(beta), kernel_space(theta)),
        joint("Z", column_space(theta), kernel_space(c.alpha)),
        joint("L/L'", column_space(c.alpha), kernel_space(c.nu)),
        joint("L/(Z+L')", column_space(c.nu), Subspace::full(c.mod_z_derived.dim(), F)),
    };
    r.pass = all_exact(r.joints);
    return r;
}

SequenceReport check_extended(const LeibnizAlgebra& L, const Subspace& Z) {
    return check_extended(central_context(L, Z));
}

SequenceReport check_ganea(const LeibnizAlgebra& L, const Subspace& Z) {
    return check_ganea(central_context(L, Z));
}

SequenceReport check_stallings(const LeibnizAlgebra& L, const Subspace& Z) {
    return check_stallings(central_context(L, Z));
}

} // namespace leibniz
