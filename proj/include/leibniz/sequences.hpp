#pragma once

#include "leibniz/seq_maps.hpp"

namespace leibniz {

// Exactness at one interior node: image of the incoming map against the
// kernel of the outgoing map (for a terminal node the comparison space is
// the stated target, so "exact" there means surjectivity onto it).
struct JointReport {
    std::string at;
    std::size_t image_dim = 0;
    std::size_t kernel_dim = 0;
    bool exact = false;
};

struct SequenceReport {
    std::string name;
    std::vector<std::string> node_names;
    std::vector<std::size_t> node_dims;
    std::vector<std::size_t> map_ranks;
    std::vector<JointReport> joints;
    bool pass = false;
};

// Shared context for the sequences attached to one central ideal Z of L,
// always with one-dimensional trivial coefficients.
struct CentralContext {
    FiveTermData ft;
    DeltaData delta;
    Subspace derived_meet_z;      // inside F^n
    QuotientSpace mod_z_derived;  // coordinates for L/(Z + L')
    Matrix alpha;                 // Z -> L/L', inclusion followed by projection
    Matrix nu;                    // L/L' -> L/(Z + L')
};

CentralContext central_context(const LeibnizAlgebra& L, const Subspace& Z);

// 0 -> Hom(L/H,A) -> Hom(L,A) -> Hom(H,A) -> H^2(L/H,A) -> H^2(L,A)
SequenceReport check_five_term(const FiveTermData& d);
SequenceReport check_five_term(const LeibnizAlgebra& L, const Subspace& H,
                               const TrivialModule& A);

// H^2(L/Z,F) -> H^2(L,F) -> L/L' (x) Z (+) Z (x) L/L', exact in the middle.
SequenceReport check_extended(const CentralContext& c);

// L/L' (x) Z (+) Z (x) L/L' -> M(L) -> M(L/Z) -> L' meet Z -> 0 where the
// multipliers are realized as the dual coordinate spaces of the cohomology
// groups and the maps as transposes.
SequenceReport check_ganea(const CentralContext& c);

// M(L) -> M(L/Z) -> Z -> L/L' -> L/(Z + L') -> 0.
SequenceReport check_stallings(const CentralContext& c);

SequenceReport check_extended(const LeibnizAlgebra& L, const Subspace& Z);
SequenceReport check_ganea(const LeibnizAlgebra& L, const Subspace& Z);
SequenceReport check_stallings(const LeibnizAlgebra& L, const Subspace& Z);

} // namespace leibniz
