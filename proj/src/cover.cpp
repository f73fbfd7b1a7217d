#include "leibniz/cover.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/rowreduce.hpp"
#include "leibniz/seq_maps.hpp"

namespace leibniz {

std::size_t multiplier_dim(const LeibnizAlgebra& L) {
    return CohomologyGroup(L, TrivialModule{1}).dim();
}

TwoCochain stack_cochains(const std::vector<TwoCochain>& comps) {
    if (comps.empty()) throw Error("stack_cochains: nothing to stack");
    const std::size_t n = comps.front().algebra_dim();
    const Field F = comps.front().field();
    TwoCochain out(n, comps.size(), F);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const TwoCochain& g = comps[c];
        if (g.algebra_dim() != n || g.coeff_dim() != 1 || g.field() != F)
            throw Error("stack_cochains: mixed shapes");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out.set(i, j, c, g.at(i, j, 0));
    }
    return out;
}

CentralExtension cover_from_classes(const LeibnizAlgebra& L, const CohomologyGroup& h2F,
                                    const std::vector<TwoCochain>& reps) {
    const std::size_t t = h2F.dim();
    if (reps.size() != t) throw Error("cover: wrong number of representatives");
    const Field& F = L.field();

    if (t == 0) {
        CentralExtension ext = from_cocycle(L, TwoCochain(L.dim(), 0, F), L.name() + ":cover");
        return ext;
    }

    Matrix classes(t, t, F);
    for (std::size_t c = 0; c < t; ++c) {
        const std::vector<Scalar> cls = h2F.class_of(reps[c]);
        for (std::size_t r = 0; r < t; ++r) classes.set(r, c, cls[r]);
    }
    if (rank(classes) != t) throw Error("cover: classes do not form a basis");

    CentralExtension ext = from_cocycle(L, stack_cochains(reps), L.name() + ":cover");
    if (ext.kernel.dim() != t)
        throw FindingError("cover kernel dimension differs from dim H2(L,F)");
    Subspace zc = intersect(center(ext.total), derived(ext.total));
    if (!zc.contains(ext.kernel))
        throw FindingError("cover kernel is not inside center(E) meet derived(E)");
    return ext;
}

CentralExtension cover(const LeibnizAlgebra& L) {
    CohomologyGroup h2F(L, TrivialModule{1});
    return cover_from_classes(L, h2F, h2F.reps());
}

bool tra_bijective_on_cover(const CohomologyGroup& h2F, const CentralExtension& cov) {
    const std::size_t t = h2F.dim();
    if (cov.kernel.dim() != t) return false;
    if (t == 0) return true;
    const Matrix tra = transgression_matrix(h2F, cov.cocycle, 1);
    return tra.rows() == t && tra.cols() == t && rank(tra) == t;
}

bool tra_bijective_on_cover(const LeibnizAlgebra& L) {
    CohomologyGroup h2F(L, TrivialModule{1});
    return tra_bijective_on_cover(h2F, cover_from_classes(L, h2F, h2F.reps()));
}

} // namespace leibniz
