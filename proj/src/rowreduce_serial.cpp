#include "leibniz/rowreduce.hpp"

// Reference kernels: the same elimination and product as the parallel
// versions with the loops left bare. Kept for the equivalence tests and the
// benchmark baseline; changes to rowreduce.cpp must keep these in lockstep.

namespace leibniz::serial {

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows() || a.field() != b.field())
        throw Error("shape/field mismatch in multiply");
    const Field F = a.field();
    Matrix out(a.rows(), b.cols(), F);
    auto& od = MatrixKernelAccess::data(out);
    const auto& ad = MatrixKernelAccess::data(a);
    const auto& bd = MatrixKernelAccess::data(b);
    const std::size_t R = a.rows(), K = a.cols(), C = b.cols();
    for (std::size_t r = 0; r < R; ++r) {
        for (std::size_t k = 0; k < K; ++k) {
            const Scalar& ark = ad[r * K + k];
            if (ark == 0) continue;
            for (std::size_t c = 0; c < C; ++c) {
                const Scalar& bkc = bd[k * C + c];
                if (bkc != 0) od[r * C + c] += ark * bkc;
            }
        }
        if (F.kind() == Field::Kind::Prime)
            for (std::size_t c = 0; c < C; ++c) od[r * C + c] = F.reduce(od[r * C + c]);
    }
    return out;
}

Echelon row_reduce(const Matrix& m) {
    Matrix a = m;
    auto& d = MatrixKernelAccess::data(a);
    const Field F = a.field();
    const std::size_t R = a.rows(), C = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t pr = R;
        for (std::size_t i = r; i < R; ++i)
            if (d[i * C + c] != 0) { pr = i; break; }
        if (pr == R) continue;
        if (pr != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(d[r * C + j], d[pr * C + j]);
        const Scalar piv_inv = F.inv(d[r * C + c]);
        if (piv_inv != 1)
            for (std::size_t j = c; j < C; ++j) d[r * C + j] = F.mul(d[r * C + j], piv_inv);
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r) continue;
            const Scalar factor = d[i * C + c];
            if (factor == 0) continue;
            for (std::size_t j = c; j < C; ++j)
                d[i * C + j] = F.sub(d[i * C + j], F.mul(factor, d[r * C + j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return Echelon{std::move(a), std::move(pivots), r};
}

} // namespace leibniz::serial
