#pragma once

#include "leibniz/algebra.hpp"

namespace leibniz {

// Named example algebras, all with integer structure constants (so each
// table is a valid Leibniz algebra over every field):
//   abelian:n    zero product, dim n >= 0
//   cyclic:n     e1 e_i = e_{i+1} for i < n, dim n >= 1 (nilpotent,
//                one-generated; takes "cyclic:1" as abelian of dim 1)
//   heisenberg   e1 e2 = e3, e2 e1 = -e3, dim 3
//   sl2          the simple Lie algebra in the basis (e, h, f), dim 3
//   r2           e1 e2 = e2, e2 e1 = -e2, dim 2 (solvable, centerless)
// Throws InputError on unknown names or malformed parameters.
LeibnizAlgebra catalog(const std::string& name, const Field& field = Field::rationals());

// The parameterized families expanded to their default corpus sizes.
std::vector<std::string> catalog_names();

std::vector<LeibnizAlgebra> catalog_instances(const Field& field);

} // namespace leibniz
