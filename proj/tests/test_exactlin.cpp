#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "leibniz/quotient.hpp"
#include "oracle.hpp"

using namespace leibniz;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, const Field& F) {
    Matrix m(r, c, F);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            if (F.kind() == Field::Kind::Prime)
                m.set(i, j, Scalar((long)(rng() % F.characteristic())));
            else
                m.set(i, j, Scalar((long)(rng() % 7) - 3));
        }
    return m;
}

Subspace random_subspace(std::mt19937_64& rng, std::size_t n, std::size_t gens, const Field& F) {
    return Subspace::from_columns(random_matrix(rng, n, gens, F));
}

} // namespace

TEST_CASE("field: rational parsing and canonicalization") {
    Field Q = Field::rationals();
    CHECK(Q.parse("3/6") == Scalar(1, 2));
    CHECK(Q.parse("-4/2") == Scalar(-2));
    CHECK(Q.format(Scalar(5, 3)) == "5/3");
    CHECK(Q.format(Scalar(7)) == "7");
    CHECK_THROWS_AS(Q.parse("1/0"), InputError);
    CHECK_THROWS_AS(Q.parse("abc"), InputError);
    CHECK_THROWS_AS(Q.inv(Scalar(0)), Error);
    CHECK(Q.inv(Scalar(2, 3)) == Scalar(3, 2));
}

TEST_CASE("field: GF(p) canonical residues") {
    Field F5 = Field::prime(5);
    CHECK(F5.from_int(-1) == Scalar(4));
    CHECK(F5.add(Scalar(3), Scalar(4)) == Scalar(2));
    CHECK(F5.mul(Scalar(3), Scalar(4)) == Scalar(2));
    CHECK(F5.inv(Scalar(3)) == Scalar(2));
    CHECK(F5.parse("2/3") == Scalar(4)); // 2 * 3^-1 = 2 * 2
    CHECK(F5.format(Scalar(4)) == "4");
    CHECK_THROWS_AS(Field::prime(6), InputError);
    CHECK_THROWS_AS(Field::prime(1), InputError);
    CHECK_THROWS_AS(F5.parse("1/5"), InputError); // denominator 0 mod 5
}

TEST_CASE("matrix: basic operations and degenerate shapes") {
    Field Q = Field::rationals();
    Matrix a = Matrix::from_rows({{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}}, 2, Q);
    CHECK(a.transpose().at(0, 1) == Scalar(3));
    CHECK((a + a).at(1, 1) == Scalar(8));
    CHECK((a - a).is_zero());
    CHECK(a.scaled(Scalar(2)).at(0, 1) == Scalar(4));

    Matrix i2 = Matrix::identity(2, Q);
    CHECK(multiply(a, i2) == a);
    CHECK(multiply(i2, a) == a);

    std::vector<Scalar> v{Scalar(1), Scalar(1)};
    auto av = a.apply(v);
    CHECK(av[0] == Scalar(3));
    CHECK(av[1] == Scalar(7));

    Matrix e(0, 3, Q);
    CHECK(e.rows() == 0);
    Matrix z(3, 0, Q);
    CHECK(multiply(z, e).rows() == 3);
    CHECK(multiply(z, e).cols() == 3);
    CHECK(multiply(z, e).is_zero());
    CHECK(a.hstack(i2).cols() == 4);
    CHECK(a.vstack(i2).rows() == 4);
}

TEST_CASE("row_reduce: canonical RREF with pivot bookkeeping") {
    Field Q = Field::rationals();
    // [[2,4,2],[1,2,3]] -> [[1,2,0],[0,0,1]]
    Matrix m = Matrix::from_rows(
        {{Scalar(2), Scalar(4), Scalar(2)}, {Scalar(1), Scalar(2), Scalar(3)}}, 3, Q);
    Echelon e = row_reduce(m);
    CHECK(e.rank == 2);
    CHECK(e.pivots == std::vector<std::size_t>{0, 2});
    CHECK(e.rref.at(0, 0) == Scalar(1));
    CHECK(e.rref.at(0, 1) == Scalar(2));
    CHECK(e.rref.at(0, 2) == Scalar(0));
    CHECK(e.rref.at(1, 2) == Scalar(1));

    // RREF is idempotent
    CHECK(row_reduce(e.rref).rref == e.rref);
}

TEST_CASE("row_reduce: parallel kernel matches serial reference exactly") {
    std::mt19937_64 rng(12345);
    for (const Field& F : {Field::rationals(), Field::prime(5), Field::prime(2)}) {
        for (int round = 0; round < 12; ++round) {
            std::size_t r = rng() % 40, c = rng() % 40;
            Matrix m = random_matrix(rng, r, c, F);
            Echelon a = row_reduce(m);
            Echelon b = serial::row_reduce(m);
            CHECK(a.rref == b.rref);
            CHECK(a.pivots == b.pivots);
            CHECK(a.rank == b.rank);

            Matrix x = random_matrix(rng, 17, 23, F);
            Matrix y = random_matrix(rng, 23, 11, F);
            CHECK(multiply(x, y) == serial::multiply(x, y));
        }
    }
}

TEST_CASE("null_space_basis: kernel vectors solve the system") {
    std::mt19937_64 rng(777);
    for (const Field& F : {Field::rationals(), Field::prime(7)}) {
        for (int round = 0; round < 8; ++round) {
            Matrix m = random_matrix(rng, 4 + rng() % 4, 5 + rng() % 4, F);
            Matrix k = null_space_basis(m);
            CHECK(k.cols() == m.cols() - rank(m)); // rank-nullity
            CHECK(multiply(m, k).is_zero());
        }
    }
}

TEST_CASE("oracle cross-check: ranks agree on random matrices") {
    std::mt19937_64 rng(2024);
    for (unsigned long long p : {0ULL, 5ULL}) {
        Field F = p == 0 ? Field::rationals() : Field::prime(p);
        for (int round = 0; round < 10; ++round) {
            std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
            Matrix m = random_matrix(rng, r, c, F);
            std::vector<std::vector<oracle::Rat>> rows;
            for (std::size_t i = 0; i < r; ++i) {
                std::vector<oracle::Rat> row(c);
                for (std::size_t j = 0; j < c; ++j)
                    row[j] = oracle::Rat{m.at(i, j).get_num().get_si(),
                                         m.at(i, j).get_den().get_si()};
                rows.push_back(std::move(row));
            }
            CHECK(oracle::matrix_rank(rows, c, p) == rank(m));
        }
    }
}

TEST_CASE("subspace: canonical basis is generator-order independent") {
    Field Q = Field::rationals();
    auto s1 = Subspace::from_vectors({{Scalar(1), Scalar(2), Scalar(0)},
                                      {Scalar(0), Scalar(1), Scalar(1)}}, 3, Q);
    auto s2 = Subspace::from_vectors({{Scalar(1), Scalar(3), Scalar(1)},
                                      {Scalar(0), Scalar(2), Scalar(2)},
                                      {Scalar(1), Scalar(2), Scalar(0)}}, 3, Q);
    CHECK(s1 == s2);
    CHECK(s1.dim() == 2);
    CHECK(s1.contains(std::vector<Scalar>{Scalar(2), Scalar(5), Scalar(1)}));
    CHECK_FALSE(s1.contains(std::vector<Scalar>{Scalar(0), Scalar(0), Scalar(1)}));

    auto c = s1.coords_of({Scalar(2), Scalar(5), Scalar(1)});
    std::vector<Scalar> rebuilt(3, Scalar(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto b = s1.basis_vector(i);
        for (std::size_t j = 0; j < 3; ++j) rebuilt[j] += c[i] * b[j];
    }
    CHECK(rebuilt == std::vector<Scalar>{Scalar(2), Scalar(5), Scalar(1)});
    CHECK_THROWS_AS(s1.coords_of(std::vector<Scalar>{Scalar(0), Scalar(0), Scalar(1)}), Error);
}

TEST_CASE("subspace: dimension formula for sum and intersection") {
    std::mt19937_64 rng(99);
    for (const Field& F : {Field::rationals(), Field::prime(3)}) {
        for (int round = 0; round < 10; ++round) {
            std::size_t n = 3 + rng() % 4;
            Subspace u = random_subspace(rng, n, 1 + rng() % n, F);
            Subspace w = random_subspace(rng, n, 1 + rng() % n, F);
            Subspace s = sum(u, w), i = intersect(u, w);
            CHECK(u.dim() + w.dim() == s.dim() + i.dim());
            CHECK(s.contains(u));
            CHECK(s.contains(w));
            CHECK(u.contains(i));
            CHECK(w.contains(i));
        }
    }
}

TEST_CASE("subspace: pivot-greedy complement") {
    Field Q = Field::rationals();
    auto diag = Subspace::from_vectors({{Scalar(1), Scalar(1)}}, 2, Q);
    auto comp = complement(diag, Subspace::full(2, Q));
    CHECK(comp == Subspace::from_vectors({{Scalar(1), Scalar(0)}}, 2, Q));

    std::mt19937_64 rng(5150);
    for (const Field& F : {Field::rationals(), Field::prime(5)}) {
        for (int round = 0; round < 10; ++round) {
            std::size_t n = 2 + rng() % 5;
            Subspace inside = random_subspace(rng, n, 1 + rng() % n, F);
            // carve a random subspace of `inside`
            std::size_t k = inside.dim() ? rng() % inside.dim() : 0;
            std::vector<std::vector<Scalar>> gens;
            for (std::size_t g = 0; g < k; ++g) {
                std::vector<Scalar> v(n, Scalar(0));
                for (std::size_t i = 0; i < inside.dim(); ++i) {
                    Scalar coef = F.from_int((long)(rng() % 3) - 1);
                    auto b = inside.basis_vector(i);
                    for (std::size_t j = 0; j < n; ++j) v[j] = F.add(v[j], F.mul(coef, b[j]));
                }
                gens.push_back(std::move(v));
            }
            Subspace s = Subspace::from_vectors(gens, n, F);
            Subspace c = complement(s, inside);
            CHECK(s.dim() + c.dim() == inside.dim());
            CHECK(intersect(s, c).dim() == 0);
            CHECK(sum(s, c) == inside);
        }
    }
    CHECK_THROWS_AS(complement(Subspace::full(2, Q), diag), Error);
}

TEST_CASE("quotient: projection, section, and the induced coordinates") {
    Field Q = Field::rationals();
    auto e3 = Subspace::from_vectors({{Scalar(0), Scalar(0), Scalar(1)}}, 3, Q);
    QuotientSpace q = quotient(3, e3);
    CHECK(q.dim() == 2);
    // section embeds (a,b) as (a,b,0)
    auto s = q.section.apply({Scalar(4), Scalar(5)});
    CHECK(s == std::vector<Scalar>{Scalar(4), Scalar(5), Scalar(0)});
    auto pr = q.projection.apply({Scalar(4), Scalar(5), Scalar(9)});
    CHECK(pr == std::vector<Scalar>{Scalar(4), Scalar(5)});
    CHECK(project_subspace(q, e3).dim() == 0);

    std::mt19937_64 rng(31415);
    for (const Field& F : {Field::rationals(), Field::prime(5)}) {
        for (int round = 0; round < 8; ++round) {
            std::size_t n = 2 + rng() % 5;
            Subspace s2 = random_subspace(rng, n, 1 + rng() % n, F);
            QuotientSpace qq = quotient(n, s2);
            CHECK(qq.dim() == n - s2.dim());
            CHECK(compose(qq.projection, qq.section) == LinearMap::identity(qq.dim(), F));
            // projection kills exactly the modded subspace
            CHECK(kernel(qq.projection) == s2);
        }
    }
}

TEST_CASE("quotient: images of subspaces intersect compatibly") {
    // (A cap B)/C = A/C cap B/C when C is contained in both
    std::mt19937_64 rng(8080);
    for (const Field& F : {Field::rationals(), Field::prime(3)}) {
        for (int round = 0; round < 10; ++round) {
            std::size_t n = 3 + rng() % 4;
            Subspace c = random_subspace(rng, n, 1 + rng() % 2, F);
            Subspace a = sum(c, random_subspace(rng, n, 1 + rng() % n, F));
            Subspace b = sum(c, random_subspace(rng, n, 1 + rng() % n, F));
            QuotientSpace q = quotient(n, c);
            Subspace lhs = project_subspace(q, intersect(a, b));
            Subspace rhs = intersect(project_subspace(q, a), project_subspace(q, b));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("tensor index layout") {
    TensorSpace t = tensor_space(2, 3);
    CHECK(t.dim() == 6);
    CHECK(t.index(0, 0) == 0);
    CHECK(t.index(1, 2) == 5);
    CHECK(t.index(1, 0) == 3);
}

TEST_CASE("linear map: kernel and image are canonical subspaces") {
    Field Q = Field::rationals();
    // map (x,y,z) -> (x+y, y+z)
    LinearMap f(Matrix::from_rows({{Scalar(1), Scalar(1), Scalar(0)},
                                   {Scalar(0), Scalar(1), Scalar(1)}}, 3, Q));
    CHECK(rank(f) == 2);
    CHECK(image(f) == Subspace::full(2, Q));
    Subspace k = kernel(f);
    CHECK(k.dim() == 1);
    CHECK(k.contains(std::vector<Scalar>{Scalar(1), Scalar(-1), Scalar(1)}));

    LinearMap zero_map = LinearMap::zero(0, 3, Q);
    CHECK(kernel(zero_map) == Subspace::full(3, Q));
    CHECK(image(zero_map).ambient_dim() == 0);
}
