#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slrc/matrix.hpp"

#include <random>

using namespace slrc;

namespace {

Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f->order() - 1);
    std::vector<Elt> e(rows * cols);
    for (auto& x : e) x = f->element(dist(rng));
    return Matrix(f, rows, cols, std::move(e));
}

bool is_zero(const Matrix& m) {
    for (Elt e : m.entries())
        if (e != 0) return false;
    return true;
}

} // namespace

TEST_CASE("construction and entry access") {
    auto f = Field::prime(5);
    Matrix m(f, {{1, 2, 3}, {4, 0, 1}});
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.at(0, 2) == 3);
    CHECK(m.at(1, 0) == 4);
    CHECK(m.row(0) == std::vector<Elt>{1, 2, 3});
    CHECK(m.col(2) == std::vector<Elt>{3, 1});
}

TEST_CASE("multiplication against hand result") {
    auto f = Field::prime(3);
    Matrix a(f, {{1, 2}, {0, 1}});
    Matrix b(f, {{2, 1}, {1, 1}});
    Matrix ab(f, {{1, 0}, {1, 1}});
    CHECK(a.mul(b) == ab);
    CHECK(a.mul(Matrix::identity(f, 2)) == a);
    CHECK_THROWS_AS(a.mul(Matrix(f, 3, 2)), Error);
    CHECK_THROWS_AS(a.mul(Matrix(Field::prime(5), 2, 2)), Error);
}

TEST_CASE("rref produces pivots and idempotence") {
    auto f = Field::prime(5);
    Matrix m(f, {{0, 2, 4, 2}, {0, 1, 2, 3}, {0, 3, 1, 2}});
    auto r = m.rref();
    CHECK(r.pivots == std::vector<std::size_t>{1, 3});
    CHECK(m.rank() == 2);
    CHECK(r.mat.rref().mat == r.mat);
    CHECK(m.row_space_equals(r.mat));
}

TEST_CASE("kernel rows annihilate the matrix") {
    std::mt19937 rng(7);
    for (auto f : {Field::prime(3), Field::extension(2, 2), Field::prime(7)}) {
        for (int trial = 0; trial < 20; ++trial) {
            Matrix m = random_matrix(f, 3, 6, rng);
            Matrix k = m.kernel();
            CHECK(k.rows() == m.cols() - m.rank());
            CHECK(is_zero(m.mul(k.transpose())));
            CHECK(k.rank() == k.rows());
        }
    }
}

TEST_CASE("solve finds solutions exactly when consistent") {
    std::mt19937 rng(11);
    auto f = Field::prime(5);
    std::uniform_int_distribution<std::uint32_t> dist(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix m = random_matrix(f, 4, 3, rng);
        std::vector<Elt> x0(3);
        for (auto& v : x0) v = dist(rng);
        auto rhs = m.right_mul(x0);
        auto sol = m.solve(rhs);
        REQUIRE(sol.solvable);
        CHECK(m.right_mul(sol.x) == rhs);
        CHECK(sol.kernel_dim == 3 - m.rank());
    }
    // inconsistent system
    Matrix m(f, {{1, 0}, {2, 0}});
    auto bad = m.solve({1, 3});
    CHECK(!bad.solvable);
}

TEST_CASE("kronecker mixed product and transpose laws") {
    std::mt19937 rng(23);
    auto f = Field::extension(3, 2);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix a = random_matrix(f, 2, 3, rng);
        Matrix b = random_matrix(f, 3, 2, rng);
        Matrix c = random_matrix(f, 3, 2, rng);
        Matrix d = random_matrix(f, 2, 4, rng);
        CHECK(a.kronecker(b).mul(c.kronecker(d)) == a.mul(c).kronecker(b.mul(d)));
        CHECK(a.kronecker(b).transpose() == a.transpose().kronecker(b.transpose()));
    }
}

TEST_CASE("kronecker block layout keeps the right factor fastest") {
    auto f = Field::prime(3);
    Matrix a(f, {{1, 2}});
    Matrix b(f, {{1, 0, 2}});
    Matrix k = a.kronecker(b);
    CHECK(k.rows() == 1);
    CHECK(k.entries() == std::vector<Elt>{1, 0, 2, 2, 0, 1});
    CHECK(kron_vec(*f, {1, 2}, {1, 0, 2}) == k.entries());
}

TEST_CASE("column selection and stacking") {
    auto f = Field::prime(3);
    Matrix m(f, {{0, 1, 2, 1}, {1, 0, 1, 2}});
    CHECK(m.select_columns({0, 2}) == Matrix(f, {{0, 2}, {1, 1}}));
    CHECK(m.drop_columns({1, 3}) == Matrix(f, {{0, 2}, {1, 1}}));
    Matrix v = m.vstack(Matrix(f, {{1, 1, 1, 1}}));
    CHECK(v.rows() == 3);
    CHECK(v.row(2) == std::vector<Elt>{1, 1, 1, 1});
    CHECK_THROWS_AS(m.select_columns({4}), Error);
}

TEST_CASE("vector products") {
    auto f = Field::prime(5);
    Matrix m(f, {{1, 2, 3}, {0, 1, 4}});
    CHECK(m.left_mul({2, 3}) == std::vector<Elt>{2, 2, 3});
    CHECK(m.right_mul({1, 1, 1}) == std::vector<Elt>{1, 0});
    CHECK_THROWS_AS(m.left_mul({1, 2, 3}), Error);
}
