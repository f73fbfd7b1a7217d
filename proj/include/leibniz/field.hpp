#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "leibniz/errors.hpp"

namespace leibniz {

// All scalars are exact rationals. Elements of GF(p) are stored as the
// canonical residues 0..p-1 with denominator 1; the Field object supplies
// the arithmetic that keeps them canonical.
using Scalar = mpq_class;

// A computation field: the rationals, or a prime field GF(p).
//
// Every arithmetic routine in the library is parameterized by a Field value
// rather than a template, so one compiled path serves both fields and
// mixed-field operations can be rejected at runtime.
class Field {
  public:
    enum class Kind { Rationals, Prime };

    static Field rationals() { return Field(Kind::Rationals, 0); }

    // Requires p prime; rejects p < 2 and composites.
    static Field prime(std::uint64_t p);

    Kind kind() const { return kind_; }
    std::uint64_t characteristic() const { return p_; } // 0 for Q

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    // Canonical representative of x in this field. For Q this is a no-op
    // (mpq_class arithmetic is already canonical); for GF(p) it reduces a
    // denominator-free value into 0..p-1 and inverts denominators mod p.
    Scalar reduce(const Scalar& x) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const; // throws Error on zero
    Scalar div(const Scalar& a, const Scalar& b) const;

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_int(long v) const;

    // Parses "a", "-a", or "a/b". For GF(p) also accepts any integer or
    // ratio with invertible denominator and reduces it. Throws InputError.
    Scalar parse(const std::string& text) const;

    // Inverse of parse: "a/b" over Q (plain "a" when b = 1), the canonical
    // residue as a decimal string over GF(p).
    std::string format(const Scalar& x) const;

    std::string name() const; // "Q" or "GF(p)"

  private:
    Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}

    Kind kind_;
    std::uint64_t p_;
};

} // namespace leibniz
