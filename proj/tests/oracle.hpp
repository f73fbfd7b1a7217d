#pragma once

// Independent brute-force checker used to cross-validate the library.
//
// Everything here is deliberately self-contained: its own little fraction
// type, its own elimination (fraction-free Bareiss over Q, standard
// elimination mod p), its own indexing conventions for the cocycle triple
// system. It shares no code with the library under test, so agreement
// between the two is evidence, not tautology.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace oracle {

// Exact rational with small integer parts. Oracle inputs are structure
// constants, which stay tiny; elimination happens fraction-free after
// clearing denominators, with overflow guarded by exceptions.
struct Rat {
    long long num = 0;
    long long den = 1;
};

// Structure constants of an n-dimensional algebra: at(i,j,k) is the e_k
// coefficient of the product e_i * e_j (all indices 0-based).
struct Table {
    std::size_t n = 0;
    std::vector<Rat> c; // size n^3, layout (i*n + j)*n + k

    static Table zeros(std::size_t n);
    const Rat& at(std::size_t i, std::size_t j, std::size_t k) const;
    void set(std::size_t i, std::size_t j, std::size_t k, long long num, long long den = 1);
};

// Rank of the matrix with the given rows; p == 0 means over Q, otherwise
// over GF(p) with p prime.
std::size_t matrix_rank(const std::vector<std::vector<Rat>>& rows,
                        std::size_t cols, unsigned long long p);

// Number of basis triples (i,j,k) violating x(yz) = (xy)z + y(xz).
std::size_t violations(const Table& t, unsigned long long p);

// dim span{ e_i e_j : all i,j }.
std::size_t derived_dim(const Table& t, unsigned long long p);

// dim { z : z e_i = e_i z = 0 for all i }.
std::size_t center_dim(const Table& t, unsigned long long p);

struct CohomologyDims {
    std::size_t z2 = 0; // 2-cocycles B x B -> F^m under f(i,jk) = f(ij,k) + f(j,ik)
    std::size_t b2 = 0; // 2-coboundaries f(i,j) = -eps(ij)
    std::size_t h2 = 0; // z2 - b2
};

// Dense solve of the full triple system with coefficient dimension m.
CohomologyDims cohomology_dims(const Table& t, std::size_t coeff_dim, unsigned long long p);

} // namespace oracle
