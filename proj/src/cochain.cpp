#include "leibniz/cochain.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

TwoCochain::TwoCochain(std::size_t algebra_dim, std::size_t coeff_dim, Field field)
    : n_(algebra_dim), m_(coeff_dim), field_(std::move(field)),
      values_(n_ * n_ * m_, Scalar(0)) {}

TwoCochain TwoCochain::from_flat(std::vector<Scalar> values, std::size_t algebra_dim,
                                 std::size_t coeff_dim, const Field& field) {
    if (values.size() != algebra_dim * algebra_dim * coeff_dim)
        throw Error("cochain flat vector has wrong length");
    TwoCochain f(algebra_dim, coeff_dim, field);
    for (auto& v : values) v = field.reduce(v);
    f.values_ = std::move(values);
    return f;
}

void TwoCochain::set(std::size_t i, std::size_t j, std::size_t c, const Scalar& v) {
    values_[index(i, j, c)] = field_.reduce(v);
}

std::vector<Scalar> TwoCochain::eval_basis(std::size_t i, std::size_t j) const {
    std::vector<Scalar> out(m_);
    for (std::size_t c = 0; c < m_; ++c) out[c] = at(i, j, c);
    return out;
}

std::vector<Scalar> TwoCochain::eval(const std::vector<Scalar>& x,
                                     const std::vector<Scalar>& y) const {
    if (x.size() != n_ || y.size() != n_) throw Error("cochain eval: bad vector length");
    std::vector<Scalar> out(m_, Scalar(0));
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (y[j] == 0) continue;
            const Scalar s = x[i] * y[j];
            for (std::size_t c = 0; c < m_; ++c) out[c] += s * at(i, j, c);
        }
    }
    for (auto& v : out) v = field_.reduce(v);
    return out;
}

TwoCochain TwoCochain::operator+(const TwoCochain& o) const {
    if (n_ != o.n_ || m_ != o.m_ || field_ != o.field_)
        throw Error("cochain addition: shape or field mismatch");
    TwoCochain out(n_, m_, field_);
    for (std::size_t k = 0; k < values_.size(); ++k)
        out.values_[k] = field_.reduce(values_[k] + o.values_[k]);
    return out;
}

TwoCochain TwoCochain::operator-(const TwoCochain& o) const {
    if (n_ != o.n_ || m_ != o.m_ || field_ != o.field_)
        throw Error("cochain subtraction: shape or field mismatch");
    TwoCochain out(n_, m_, field_);
    for (std::size_t k = 0; k < values_.size(); ++k)
        out.values_[k] = field_.reduce(values_[k] - o.values_[k]);
    return out;
}

bool TwoCochain::operator==(const TwoCochain& o) const {
    return n_ == o.n_ && m_ == o.m_ && field_ == o.field_ && values_ == o.values_;
}

TwoCochain TwoCochain::pullback(const LinearMap& P) const {
    if (P.codomain_dim() != n_) throw Error("cochain pullback: codomain mismatch");
    const std::size_t q = P.domain_dim();
    const Matrix& M = P.matrix();
    TwoCochain out(q, m_, field_);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) {
            std::vector<Scalar> val(m_, Scalar(0));
            for (std::size_t i = 0; i < n_; ++i) {
                if (M.at(i, a) == 0) continue;
                for (std::size_t j = 0; j < n_; ++j) {
                    if (M.at(j, b) == 0) continue;
                    const Scalar s = M.at(i, a) * M.at(j, b);
                    for (std::size_t c = 0; c < m_; ++c) val[c] += s * at(i, j, c);
                }
            }
            for (std::size_t c = 0; c < m_; ++c) out.set(a, b, c, val[c]);
        }
    return out;
}

bool satisfies_cocycle_identity(const LeibnizAlgebra& L, const TwoCochain& f) {
    const std::size_t n = L.dim();
    if (f.algebra_dim() != n || f.field() != L.field()) return false;
    const std::size_t m = f.coeff_dim();
    const Field& F = L.field();
    std::vector<Scalar> acc(m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::fill(acc.begin(), acc.end(), Scalar(0));
                bool touched = false;
                for (std::size_t l = 0; l < n; ++l) {
                    const Scalar& t1 = L.structure_constant(j, k, l);
                    if (t1 != 0) {
                        touched = true;
                        for (std::size_t c = 0; c < m; ++c) acc[c] += t1 * f.at(i, l, c);
                    }
                    const Scalar& t2 = L.structure_constant(i, j, l);
                    if (t2 != 0) {
                        touched = true;
                        for (std::size_t c = 0; c < m; ++c) acc[c] -= t2 * f.at(l, k, c);
                    }
                    const Scalar& t3 = L.structure_constant(i, k, l);
                    if (t3 != 0) {
                        touched = true;
                        for (std::size_t c = 0; c < m; ++c) acc[c] -= t3 * f.at(j, l, c);
                    }
                }
                if (!touched) continue;
                for (std::size_t c = 0; c < m; ++c)
                    if (F.reduce(acc[c]) != 0) return false;
            }
    return true;
}

TwoCochain TwoCochain::map_coefficients(const Matrix& chi) const {
    if (chi.cols() != m_) throw Error("cochain map_coefficients: shape mismatch");
    const std::size_t m2 = chi.rows();
    TwoCochain out(n_, m2, field_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            for (std::size_t c2 = 0; c2 < m2; ++c2) {
                Scalar acc(0);
                for (std::size_t c = 0; c < m_; ++c) acc += chi.at(c2, c) * at(i, j, c);
                out.set(i, j, c2, acc);
            }
        }
    return out;
}

} // namespace leibniz
