#pragma once

#include "leibniz/cohomology.hpp"

namespace leibniz {

// The cocycle of the quotient extension 0 -> H -> L -> L/H -> 0 determined by
// a linear section: f(a,b) = s(a)s(b) - s(ab), valued in H-coordinates.
// Requires H central so the values land in H and the result is a cocycle.
TwoCochain defining_cocycle(const LeibnizAlgebra& L, const Subspace& H,
                            const QuotientAlgebra& quo, const Matrix& section);

// Transgression Hom(H,A) -> H^2(L/H,A), chi |-> [chi o f], as a matrix over
// the flat Hom(H,A) coordinates (column b*m + c is the functional pairing
// H-basis vector b with value component c).
Matrix transgression_matrix(const CohomologyGroup& h2_quotient, const TwoCochain& defining,
                            std::size_t coeff_dim);

// Everything needed to state the inflation-restriction sequence
//   0 -> Hom(L/H,A) -> Hom(L,A) -> Hom(H,A) -> H^2(L/H,A) -> H^2(L,A)
// for a central ideal H, with each map realized as a matrix between the
// canonical coordinate spaces of its endpoints.
struct FiveTermData {
    LeibnizAlgebra L;
    Subspace H;
    TrivialModule A;
    QuotientAlgebra quo;
    Subspace hom_quotient; // inside F^{q m}
    Subspace hom_total;    // inside F^{n m}
    CohomologyGroup h2_quotient;
    CohomologyGroup h2_total;
    TwoCochain defining;
    Matrix inf1, res, tra, inf2;
};

FiveTermData five_term_data(const LeibnizAlgebra& L, const Subspace& H,
                            const TrivialModule& A);

// The pairing map H^2(L,F) -> (L/L' (x) Z) (+) (Z (x) L/L'), class of g to
// the values g(x̄, z) and g(z, x̄) on transversal-by-central basis pairs.
// Defined because cocycles vanish on (L' x Z) and (Z x L') and coboundaries
// vanish on all central pairs.
struct DeltaData {
    QuotientSpace mod_derived; // coordinates for L/L'
    TensorSpace t1;            // L/L' (x) Z
    TensorSpace t2;            // Z (x) L/L'
    Matrix map;                // (t1.dim + t2.dim) x dim H^2(L,F)
};

DeltaData delta_map(const LeibnizAlgebra& L, const Subspace& Z,
                    const CohomologyGroup& h2_total_trivial);

} // namespace leibniz
