#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "leibniz/rowreduce.hpp"

namespace leibniz {

// A subspace of F^n in canonical form: the basis is the RREF of the row
// space spanned by the generators, so equal subspaces compare equal
// entrywise no matter how they were produced.
class Subspace {
  public:
    static Subspace zero(std::size_t ambient_dim, const Field& field);
    static Subspace full(std::size_t ambient_dim, const Field& field);
    // Span of the columns of `generators` (an n-by-k matrix).
    static Subspace from_columns(const Matrix& generators);
    // Span of explicit vectors, each of length ambient_dim.
    static Subspace from_vectors(const std::vector<std::vector<Scalar>>& vecs,
                                 std::size_t ambient_dim, const Field& field);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.rows(); }
    const Field& field() const { return rows_.field(); }

    // Canonical basis as columns of an n-by-dim matrix.
    Matrix basis() const { return rows_.transpose(); }
    // Canonical basis vectors as rows of a dim-by-n matrix (the RREF itself).
    const Matrix& basis_rows() const { return rows_; }
    std::vector<Scalar> basis_vector(std::size_t i) const { return rows_.row(i); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // v reduced modulo this subspace: zero at every pivot coordinate, and
    // residue(v) == 0 iff v is a member.
    std::vector<Scalar> residue(const std::vector<Scalar>& v) const;
    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Subspace& other) const;
    // Coordinates of v in the canonical basis; throws Error if v is outside.
    std::vector<Scalar> coords_of(const std::vector<Scalar>& v) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

  private:
    Subspace(Matrix rows, std::vector<std::size_t> pivots, std::size_t ambient);

    Matrix rows_;                      // dim x ambient, in RREF
    std::vector<std::size_t> pivots_;  // pivot coordinate of basis vector i
    std::size_t ambient_;

    friend Subspace row_space(const Matrix& rows_matrix);
};

// Canonicalize the row space of a k-by-n matrix into a Subspace of F^n.
Subspace row_space(const Matrix& rows_matrix);

Subspace sum(const Subspace& s, const Subspace& t);
Subspace intersect(const Subspace& s, const Subspace& t);

// Pivot-greedy complement of s inside `inside` (requires s subseteq inside):
// walks inside's canonical basis and keeps the vectors that grow the span.
// Deterministic; complement(span{(1,1)}, F^2) = span{e1}.
Subspace complement(const Subspace& s, const Subspace& inside);

} // namespace leibniz
