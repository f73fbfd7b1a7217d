#pragma once

#include "leibniz/cohomology.hpp"

namespace leibniz {

// 0 -> F^m -> E -> L -> 0 with the kernel spanning the last m coordinates of
// the total algebra and the section the coordinate inclusion of L.
struct CentralExtension {
    LeibnizAlgebra base;
    LeibnizAlgebra total;
    Subspace kernel;      // the last coeff_dim coordinates, central in total
    LinearMap projection; // total -> base, kills the kernel
    LinearMap section;    // base -> total, projection o section = identity
    TwoCochain cocycle;   // e_i e_j = (e_i e_j)_base + sum_c f(i,j,c) u_c
};

// Twisted product on base (+) F^m. The cochain must satisfy the cocycle
// identity (checked; that is exactly what makes the total algebra Leibniz).
CentralExtension from_cocycle(const LeibnizAlgebra& L, const TwoCochain& f,
                              const std::string& name = "");

// The zero cocycle: direct sum with an abelian kernel.
CentralExtension split_extension(const LeibnizAlgebra& L, std::size_t m);

// Recover the product twist through the stored section.
TwoCochain cocycle_of(const CentralExtension& ext);

// Same base table and kernel dimension, and the defining cocycles differ by
// a coboundary (i.e. the extensions define the same cohomology class).
bool equivalent(const CentralExtension& a, const CentralExtension& b);

// Kernel inside the derived subalgebra of the total; it is central already.
bool is_stem(const CentralExtension& ext);

} // namespace leibniz
