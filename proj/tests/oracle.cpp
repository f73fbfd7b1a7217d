#include "oracle.hpp"

#include <stdexcept>
#include <utility>

namespace oracle {

namespace {

using i128 = __int128;
using u64 = unsigned long long;

[[noreturn]] void fail(const char* what) { throw std::runtime_error(what); }

i128 iabs(i128 x) { return x < 0 ? -x : x; }

// Entries are minors of tiny sparse integer matrices; anything approaching
// this bound means the oracle is being misused and must abort loudly.
constexpr i128 kEntryLimit = i128(1) << 62;

i128 checked_mul(i128 a, i128 b) {
    if (iabs(a) > kEntryLimit || iabs(b) > kEntryLimit) fail("oracle: integer overflow");
    return a * b;
}

i128 gcd128(i128 a, i128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b) { i128 t = a % b; a = b; b = t; }
    return a;
}

Rat make_rat(i128 n, i128 d) {
    if (d == 0) fail("oracle: zero denominator");
    if (n == 0) return Rat{0, 1};
    i128 g = gcd128(n, d);
    n /= g;
    d /= g;
    if (d < 0) { n = -n; d = -d; }
    if (iabs(n) > kEntryLimit || d > kEntryLimit) fail("oracle: rational overflow");
    return Rat{(long long)n, (long long)d};
}

Rat rat_add(const Rat& a, const Rat& b) {
    return make_rat(checked_mul(a.num, b.den) + checked_mul(b.num, a.den),
                    checked_mul(a.den, b.den));
}

Rat rat_sub(const Rat& a, const Rat& b) { return rat_add(a, Rat{-b.num, b.den}); }

Rat rat_mul(const Rat& a, const Rat& b) {
    return make_rat(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}

long long llgcd(long long a, long long b) { return (long long)gcd128(a, b); }

// Clear denominators row by row; rank is unchanged by row scaling.
std::vector<std::vector<i128>> integerize(const std::vector<std::vector<Rat>>& rows,
                                          std::size_t cols) {
    std::vector<std::vector<i128>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != cols) fail("oracle: ragged row");
        long long l = 1;
        for (const auto& x : row) {
            if (x.den == 0) fail("oracle: zero denominator");
            long long d = x.den < 0 ? -x.den : x.den;
            l = l / llgcd(l, d) * d;
            if (l > (1LL << 50)) fail("oracle: denominator lcm overflow");
        }
        std::vector<i128> r(cols);
        for (std::size_t j = 0; j < cols; ++j)
            r[j] = checked_mul(i128(row[j].num), i128(l / row[j].den));
        out.push_back(std::move(r));
    }
    return out;
}

// Fraction-free one-step Bareiss elimination; reports the rank only.
std::size_t rank_bareiss(std::vector<std::vector<i128>> m, std::size_t cols) {
    const std::size_t R = m.size();
    std::size_t r = 0;
    i128 prev = 1;
    for (std::size_t c = 0; c < cols && r < R; ++c) {
        std::size_t pr = R;
        for (std::size_t i = r; i < R; ++i)
            if (m[i][c] != 0) { pr = i; break; }
        if (pr == R) continue;
        std::swap(m[r], m[pr]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                i128 v = checked_mul(m[r][c], m[i][j]) - checked_mul(m[i][c], m[r][j]);
                if (v % prev != 0) fail("oracle: bareiss exact division failed");
                m[i][j] = v / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

u64 mulmod(u64 a, u64 b, u64 p) { return (unsigned __int128)a * b % p; }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 rat_mod(const Rat& x, u64 p) {
    long long n = x.num % (long long)p;
    if (n < 0) n += (long long)p;
    long long d = x.den % (long long)p;
    if (d < 0) d += (long long)p;
    if (d == 0) fail("oracle: denominator vanishes mod p");
    return mulmod((u64)n, powmod((u64)d, p - 2, p), p);
}

std::size_t rank_mod(const std::vector<std::vector<Rat>>& rows, std::size_t cols, u64 p) {
    std::vector<std::vector<u64>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != cols) fail("oracle: ragged row");
        std::vector<u64> r(cols);
        for (std::size_t j = 0; j < cols; ++j) r[j] = rat_mod(row[j], p);
        m.push_back(std::move(r));
    }
    const std::size_t R = m.size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < R; ++c) {
        std::size_t pr = R;
        for (std::size_t i = r; i < R; ++i)
            if (m[i][c] != 0) { pr = i; break; }
        if (pr == R) continue;
        std::swap(m[r], m[pr]);
        u64 inv = powmod(m[r][c], p - 2, p);
        for (std::size_t j = c; j < cols; ++j) m[r][j] = mulmod(m[r][j], inv, p);
        for (std::size_t i = r + 1; i < R; ++i) {
            u64 f = m[i][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = (m[i][j] + p - mulmod(f, m[r][j], p)) % p;
        }
        ++r;
    }
    return r;
}

bool rat_zero_mod(const Rat& x, u64 p) {
    if (p == 0) return x.num == 0;
    return rat_mod(x, p) == 0;
}

} // namespace

Table Table::zeros(std::size_t n) {
    Table t;
    t.n = n;
    t.c.assign(n * n * n, Rat{0, 1});
    return t;
}

const Rat& Table::at(std::size_t i, std::size_t j, std::size_t k) const {
    return c[(i * n + j) * n + k];
}

void Table::set(std::size_t i, std::size_t j, std::size_t k, long long num, long long den) {
    c[(i * n + j) * n + k] = Rat{num, den};
}

std::size_t matrix_rank(const std::vector<std::vector<Rat>>& rows,
                        std::size_t cols, unsigned long long p) {
    if (p == 0) return rank_bareiss(integerize(rows, cols), cols);
    return rank_mod(rows, cols, p);
}

std::size_t violations(const Table& t, unsigned long long p) {
    const std::size_t n = t.n;
    std::size_t bad = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                bool ok = true;
                for (std::size_t w = 0; w < n && ok; ++w) {
                    // e_w coefficient of e_i(e_j e_k) - (e_i e_j)e_k - e_j(e_i e_k)
                    Rat acc{0, 1};
                    for (std::size_t l = 0; l < n; ++l) {
                        acc = rat_add(acc, rat_mul(t.at(j, k, l), t.at(i, l, w)));
                        acc = rat_sub(acc, rat_mul(t.at(i, j, l), t.at(l, k, w)));
                        acc = rat_sub(acc, rat_mul(t.at(i, k, l), t.at(j, l, w)));
                    }
                    if (!rat_zero_mod(acc, p)) ok = false;
                }
                if (!ok) ++bad;
            }
    return bad;
}

std::size_t derived_dim(const Table& t, unsigned long long p) {
    const std::size_t n = t.n;
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rat> r(n);
            for (std::size_t k = 0; k < n; ++k) r[k] = t.at(i, j, k);
            rows.push_back(std::move(r));
        }
    return matrix_rank(rows, n, p);
}

std::size_t center_dim(const Table& t, unsigned long long p) {
    const std::size_t n = t.n;
    std::vector<std::vector<Rat>> rows;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Rat> left(n), right(n);
            for (std::size_t i = 0; i < n; ++i) {
                left[i] = t.at(i, j, k);  // coefficient of z_i in (z e_j)_k
                right[i] = t.at(j, i, k); // coefficient of z_i in (e_j z)_k
            }
            rows.push_back(std::move(left));
            rows.push_back(std::move(right));
        }
    return n - matrix_rank(rows, n, p);
}

CohomologyDims cohomology_dims(const Table& t, std::size_t coeff_dim, unsigned long long p) {
    const std::size_t n = t.n, m = coeff_dim;
    // Unknowns f(a,b,cc) flattened as (cc*n + a)*n + b; this order is
    // deliberately different from anything the library uses.
    const std::size_t unknowns = n * n * m;
    auto uidx = [n](std::size_t a, std::size_t b, std::size_t cc) {
        return (cc * n + a) * n + b;
    };

    std::vector<std::vector<Rat>> zrows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t cc = 0; cc < m; ++cc) {
                    // f(i, jk) - f(ij, k) - f(j, ik) = 0, one row per component
                    std::vector<Rat> row(unknowns, Rat{0, 1});
                    bool nonzero = false;
                    for (std::size_t l = 0; l < n; ++l) {
                        const Rat& a1 = t.at(j, k, l);
                        if (a1.num) {
                            row[uidx(i, l, cc)] = rat_add(row[uidx(i, l, cc)], a1);
                            nonzero = true;
                        }
                        const Rat& a2 = t.at(i, j, l);
                        if (a2.num) {
                            row[uidx(l, k, cc)] = rat_sub(row[uidx(l, k, cc)], a2);
                            nonzero = true;
                        }
                        const Rat& a3 = t.at(i, k, l);
                        if (a3.num) {
                            row[uidx(j, l, cc)] = rat_sub(row[uidx(j, l, cc)], a3);
                            nonzero = true;
                        }
                    }
                    if (nonzero) zrows.push_back(std::move(row));
                }
    const std::size_t z2 = unknowns - matrix_rank(zrows, unknowns, p);

    // Coboundary map eps -> f(i,j) = -eps(ij): rows are cochain coordinates,
    // columns the n*m coordinates of eps; b2 is the rank of the map.
    std::vector<std::vector<Rat>> brows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t cc = 0; cc < m; ++cc) {
                std::vector<Rat> row(n * m, Rat{0, 1});
                bool nonzero = false;
                for (std::size_t l = 0; l < n; ++l) {
                    const Rat& a = t.at(i, j, l);
                    if (a.num) {
                        row[l * m + cc] = Rat{-a.num, a.den};
                        nonzero = true;
                    }
                }
                if (nonzero) brows.push_back(std::move(row));
            }
    const std::size_t b2 = matrix_rank(brows, n * m, p);

    return CohomologyDims{z2, b2, z2 - b2};
}

} // namespace oracle
