#pragma once

#include "leibniz/cochain.hpp"
#include "leibniz/quotient.hpp"

namespace leibniz {

// Bilinear maps f with f(x, yz) = f(xy, z) + f(y, xz), cut out inside the
// flat cochain coordinate space F^{n^2 m}.
Subspace cocycle_space(const LeibnizAlgebra& L, const TrivialModule& A);

// Maps of the form f(x,y) = -eps(xy) for linear eps: L -> A.
Subspace coboundary_space(const LeibnizAlgebra& L, const TrivialModule& A);

// Second cohomology with trivial coefficients, carried as an explicit
// transversal of the coboundaries inside the cocycle space. Classes get
// canonical coordinates, so equality of classes is coordinate equality.
class CohomologyGroup {
  public:
    CohomologyGroup(LeibnizAlgebra L, TrivialModule A);

    const LeibnizAlgebra& algebra() const { return L_; }
    const TrivialModule& module() const { return A_; }
    const Subspace& cocycles() const { return z2_; }
    const Subspace& coboundaries() const { return b2_; }
    std::size_t dim() const { return quot_.dim(); }

    bool is_cocycle(const TwoCochain& f) const;
    bool is_coboundary(const TwoCochain& f) const;

    // Coordinates of the class [f]. Throws if f is not a cocycle.
    std::vector<Scalar> class_of(const TwoCochain& f) const;
    // The stored representative cocycle with the given class coordinates.
    TwoCochain rep_of(const std::vector<Scalar>& cls) const;
    const std::vector<TwoCochain>& reps() const { return reps_; }

  private:
    LeibnizAlgebra L_;
    TrivialModule A_;
    Subspace z2_, b2_;
    QuotientSpace quot_; // of the z2 coordinate space by the coboundaries
    std::vector<TwoCochain> reps_;
};

CohomologyGroup h2(const LeibnizAlgebra& L, const TrivialModule& A);

} // namespace leibniz
