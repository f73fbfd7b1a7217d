#include "leibniz/field.hpp"

#include <stdexcept>

namespace leibniz {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

Field Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p))
        throw InputError("field characteristic must be prime, got " + std::to_string(p));
    return Field(Kind::Prime, p);
}

Scalar Field::reduce(const Scalar& x) const {
    if (kind_ == Kind::Rationals) return x;
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class r;
    mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    if (den != 1) {
        mpz_class d;
        mpz_mod(d.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        mpz_class dinv;
        if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) == 0)
            throw Error("denominator not invertible mod " + std::to_string(p_));
        r = (r * dinv) % p;
    }
    return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    Scalar r = a + b;
    return kind_ == Kind::Rationals ? r : reduce(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    Scalar r = a - b;
    return kind_ == Kind::Rationals ? r : reduce(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    Scalar r = a * b;
    return kind_ == Kind::Rationals ? r : reduce(r);
}

Scalar Field::neg(const Scalar& a) const {
    Scalar r = -a;
    return kind_ == Kind::Rationals ? r : reduce(r);
}

Scalar Field::inv(const Scalar& a) const {
    if (a == 0) throw Error("division by zero");
    if (kind_ == Kind::Rationals) return Scalar(1) / a;
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class v = reduce(a).get_num();
    mpz_class vinv;
    if (mpz_invert(vinv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0)
        throw Error("division by zero"); // reduce(a) == 0 mod p
    return Scalar(vinv);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::from_int(long v) const { return reduce(Scalar(v)); }

Scalar Field::parse(const std::string& text) const {
    if (text.empty()) throw InputError("empty scalar");
    Scalar x;
    try {
        x = Scalar(text);
    } catch (const std::invalid_argument&) {
        throw InputError("malformed scalar '" + text + "'");
    }
    // mpq_class(string) does not canonicalize; "2/4" must become 1/2.
    if (x.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
    x.canonicalize();
    try {
        return reduce(x);
    } catch (const Error& e) {
        throw InputError(std::string(e.what()) + " in '" + text + "'");
    }
}

std::string Field::format(const Scalar& x) const {
    if (kind_ == Kind::Prime) return reduce(x).get_num().get_str();
    return x.get_str();
}

std::string Field::name() const {
    if (kind_ == Kind::Rationals) return "Q";
    return "GF(" + std::to_string(p_) + ")";
}

} // namespace leibniz
