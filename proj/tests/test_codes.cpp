#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slrc/expr.hpp"

#include <algorithm>
#include <random>

using namespace slrc;

namespace {

bool orthogonal(const LinearCode& c) {
    Matrix prod = c.generator().mul(c.parity_check().transpose());
    return std::all_of(prod.entries().begin(), prod.entries().end(),
                       [](Elt e) { return e == 0; });
}

void expect_params(const LinearCode& c, std::size_t n, std::size_t k, std::size_t d) {
    CHECK(c.length() == n);
    CHECK(c.dim() == k);
    auto res = c.min_distance();
    CHECK(res.exact);
    CHECK(res.d == d);
    CHECK(orthogonal(c));
    CHECK(c.parity_check().rows() == n - k);
    // Singleton
    CHECK(d <= n - k + 1);
}

} // namespace

TEST_CASE("projective line codes") {
    expect_params(make_P(3), 4, 2, 3);
    expect_params(make_P(4), 5, 2, 4);
    expect_params(make_P(5), 6, 2, 5);
    expect_params(make_P(7), 8, 2, 7);
    CHECK(make_P(3).is_mds());
    CHECK(make_P(5).is_mds());
}

TEST_CASE("the q = 3 projective code uses its published generator") {
    Matrix expect(Field::prime(3), {{1, 0, 1, 2}, {0, 1, 1, 1}});
    CHECK(make_P(3).generator() == expect);
}

TEST_CASE("single parity check codes") {
    expect_params(make_D(3, 3), 3, 2, 2);
    expect_params(make_D(3, 6), 6, 5, 2);
    expect_params(make_D(5, 4), 4, 3, 2);
    auto g = make_D(3, 4).generator();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(g.at(i, j) == (i == j ? 1 : 0));
}

TEST_CASE("reed-solomon codes are mds") {
    expect_params(make_R(5, 4, 2), 4, 2, 3);
    expect_params(make_R(5, 5, 3), 5, 3, 3);
    expect_params(make_R(7, 6, 4), 6, 4, 3);
    expect_params(make_R(4, 4, 2), 4, 2, 3); // extension field
    CHECK(make_R(5, 5, 2).is_mds());
    CHECK_THROWS_AS(make_R(5, 6, 2), Error); // n > q
    CHECK_THROWS_AS(make_R(5, 4, 5), Error); // k > n
}

TEST_CASE("bch codes hit the designed distance") {
    expect_params(make_BCH(3, 8, 4), 8, 4, 4);
    expect_params(make_BCH(5, 8, 3), 8, 5, 3);
    // the coset closure of the single designed root costs an extra dimension
    expect_params(make_BCH(3, 4, 2), 4, 2, 2);
    CHECK_THROWS_AS(make_BCH(3, 9, 2), Error); // n must divide q^m - 1
}

TEST_CASE("bch generators live in the prime field") {
    auto b3 = make_BCH(3, 8, 4);
    for (Elt e : b3.generator().entries()) CHECK(e < 3);
    auto b5 = make_BCH(5, 8, 3);
    for (Elt e : b5.generator().entries()) CHECK(e < 5);
}

TEST_CASE("puncturing drops the listed 1-based coordinates") {
    auto b = make_BCH(3, 8, 4);
    expect_params(b.punctured({1}), 7, 4, 3);
    expect_params(b.punctured({1, 5}), 6, 4, 2);
    expect_params(make_BCH(5, 8, 3).punctured({1}), 7, 5, 2);
    CHECK(b.punctured({1}).name() == "B(3,8,4)*{1}");
    CHECK_THROWS_AS(b.punctured({0}), Error);
    CHECK_THROWS_AS(b.punctured({9}), Error);
    // puncturing a repetition-free MDS code can collapse the dimension
    auto rep = make_R(3, 2, 1);
    CHECK_THROWS_AS(rep.punctured({1, 2}), Error);
}

TEST_CASE("rank-deficient generators are rejected") {
    auto f = Field::prime(3);
    CHECK_THROWS_AS(LinearCode(Matrix(f, {{1, 2, 0}, {2, 1, 0}})), Error);
}

TEST_CASE("dual of the dual is the original row space") {
    for (auto c : {make_P(3), make_D(5, 4), make_R(5, 5, 3)}) {
        CHECK(c.dual().dual().generator().row_space_equals(c.generator()));
        CHECK(c.dual().length() == c.length());
        CHECK(c.dual().dim() == c.length() - c.dim());
    }
}

TEST_CASE("encode maps messages through the generator") {
    auto c = make_P(3);
    CHECK(c.encode({1, 0}) == c.generator().row(0));
    CHECK(c.encode({1, 2}) == std::vector<Elt>{1, 2, 0, 1});
}

TEST_CASE("serial and parallel weight scans agree") {
    for (const char* expr : {"P(3) x D(3,3)", "R(5,4,2) x R(5,4,2)", "B(3,8,4)"}) {
        auto G = parse_code_expr(expr).code.generator();
        auto a = min_weight_serial(G, enumeration_budget());
        auto b = min_weight_parallel(G, enumeration_budget());
        CHECK(a.exact);
        CHECK(b.exact);
        CHECK(a.d == b.d);
    }
}

TEST_CASE("an exhausted budget reports a non-exact upper bound") {
    auto G = parse_code_expr("R(5,5,3) x R(5,5,3)").code.generator();
    auto res = min_weight_parallel(G, 10);
    CHECK(!res.exact);
    CHECK(res.d >= 9); // true distance; the bound can only overshoot
    auto full = min_weight_parallel(G, enumeration_budget());
    CHECK(full.exact);
    CHECK(full.d == 9);
}

TEST_CASE("known distances short-circuit enumeration") {
    auto c = make_R(5, 5, 3);
    c.set_known_distance(3);
    auto res = c.min_distance(0); // zero budget: only the cache can answer
    CHECK(res.exact);
    CHECK(res.d == 3);
}

TEST_CASE("any d-1 parity check columns are independent") {
    std::mt19937 rng(5);
    for (auto c : {make_P(5), make_R(5, 5, 3), make_BCH(3, 8, 4)}) {
        std::size_t d = c.min_distance().d;
        const Matrix& h = c.parity_check();
        std::vector<std::size_t> idx(c.length());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        for (int trial = 0; trial < 60; ++trial) {
            std::shuffle(idx.begin(), idx.end(), rng);
            std::vector<std::size_t> pick(idx.begin(), idx.begin() + (d - 1));
            std::sort(pick.begin(), pick.end());
            CHECK(h.select_columns(pick).rank() == d - 1);
        }
    }
}

TEST_CASE("expression parser builds factor lists") {
    auto b = parse_code_expr("P(3) x D(3,3)");
    REQUIRE(b.factors.size() == 2);
    CHECK(b.code.length() == 12);
    CHECK(b.code.dim() == 4);
    CHECK(b.code.generator() ==
          b.factors[0].generator().kronecker(b.factors[1].generator()));

    auto u = parse_code_expr("R(5,4,2) \xe2\x8a\x97 R(5,4,2)");
    CHECK(u.factors.size() == 2);
    CHECK(u.code.length() == 16);

    auto p = parse_code_expr("punct(B(3,8,4); 1,5) x D(3,3)");
    CHECK(p.factors[0].length() == 6);
    CHECK(p.code.length() == 18);

    auto nested = parse_code_expr("(P(3) x P(3)) x P(3)");
    CHECK(nested.factors.size() == 3);
}

TEST_CASE("parse failures carry caret diagnostics") {
    for (const char* bad : {"P(3) x", "Q(3)", "P(3", "P(3) y P(3)", "", "punct(P(3))"}) {
        try {
            parse_code_expr(bad);
            FAIL_CHECK("expected parse error for: " << bad);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::parse_error);
            CHECK(std::string(e.what()).find('^') != std::string::npos);
        }
    }
    // syntactically fine, semantically impossible
    CHECK_THROWS_AS(parse_code_expr("R(5,9,2)"), Error);
    CHECK_THROWS_AS(parse_code_expr("P(3) x D(5,3)"), Error); // field mismatch
}
