#include "leibniz/rowreduce.hpp"

namespace leibniz {

namespace {
// Below this many entries in the active block the fork/join overhead
// dominates; measured crossover is shape-dependent but this is a safe floor.
constexpr std::size_t kParallelCells = 4096;
} // namespace

// Matrix product, OpenMP over result rows. Accumulation order over the
// inner index is fixed ascending, so results match serial::multiply exactly.
Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows() || a.field() != b.field())
        throw Error("shape/field mismatch in multiply");
    const Field F = a.field();
    Matrix out(a.rows(), b.cols(), F);
    auto& od = MatrixKernelAccess::data(out);
    const auto& ad = MatrixKernelAccess::data(a);
    const auto& bd = MatrixKernelAccess::data(b);
    const std::size_t R = a.rows(), K = a.cols(), C = b.cols();
    const bool big = R * K * C >= kParallelCells;
#pragma omp parallel for schedule(static) if (big)
    for (long long r = 0; r < static_cast<long long>(R); ++r) {
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
        const bool big = R * (C - c) >= kParallelCells;
#pragma omp parallel for schedule(static) if (big)
        for (long long i = 0; i < static_cast<long long>(R); ++i) {
            if (static_cast<std::size_t>(i) == r) continue;
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

Matrix null_space_basis(const Matrix& m) {
    const Echelon e = row_reduce(m);
    const Field F = m.field();
    const std::size_t C = m.cols();
    std::vector<std::size_t> free_cols;
    {
        std::size_t pi = 0;
        for (std::size_t c = 0; c < C; ++c) {
            if (pi < e.pivots.size() && e.pivots[pi] == c) { ++pi; continue; }
            free_cols.push_back(c);
        }
    }
    Matrix basis(C, free_cols.size(), F);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        basis.set(fc, k, Scalar(1));
        for (std::size_t i = 0; i < e.rank; ++i)
            basis.set(e.pivots[i], k, F.neg(e.rref.at(i, fc)));
    }
    return basis;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank; }

} // namespace leibniz
