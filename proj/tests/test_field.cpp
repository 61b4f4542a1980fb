#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slrc/field.hpp"

#include <set>

using namespace slrc;

namespace {

void check_axioms(const FieldPtr& f) {
    std::uint64_t q = f->order();
    for (std::uint64_t ai = 0; ai < q; ++ai) {
        Elt a = f->element(ai);
        CHECK(f->add(a, f->zero()) == a);
        CHECK(f->mul(a, f->one()) == a);
        CHECK(f->add(a, f->neg(a)) == f->zero());
        if (a != f->zero()) {
            CHECK(f->mul(a, f->inv(a)) == f->one());
            CHECK(f->div(a, a) == f->one());
        }
        for (std::uint64_t bi = 0; bi < q; ++bi) {
            Elt b = f->element(bi);
            CHECK(f->add(a, b) == f->add(b, a));
            CHECK(f->mul(a, b) == f->mul(b, a));
            CHECK(f->sub(a, b) == f->add(a, f->neg(b)));
            for (std::uint64_t ci = 0; ci < q; ++ci) {
                Elt c = f->element(ci);
                CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            }
        }
    }
}

} // namespace

TEST_CASE("prime field axioms") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) check_axioms(Field::prime(p));
}

TEST_CASE("extension field axioms") {
    check_axioms(Field::extension(2, 2));
    check_axioms(Field::extension(3, 2));
    check_axioms(Field::extension(5, 2));
}

TEST_CASE("non-prime characteristic rejected") {
    CHECK_THROWS_AS(Field::prime(4), Error);
    CHECK_THROWS_AS(Field::prime(1), Error);
    CHECK_THROWS_AS(Field::extension(6, 2), Error);
    try {
        Field::prime(9);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::non_prime);
    }
}

TEST_CASE("chosen moduli are the lowest monic irreducibles") {
    CHECK(Field::extension(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(Field::extension(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(Field::extension(5, 2)->modulus() == std::vector<std::uint32_t>{2, 0, 1});
    CHECK(Field::prime(7)->modulus().empty());
}

TEST_CASE("digit round-trip and canonical indexing") {
    auto f = Field::extension(3, 2);
    CHECK(f->order() == 9);
    for (std::uint64_t i = 0; i < 9; ++i) {
        Elt a = f->element(i);
        CHECK(f->from_digits(f->digits(a)) == a);
    }
    // index = sum digit_j * p^j, constant digit first
    CHECK(f->digits(f->element(5)) == std::vector<std::uint32_t>{2, 1});
    CHECK_THROWS_AS(f->element(9), Error);
}

TEST_CASE("primitive element generates the multiplicative group") {
    for (auto f : {Field::prime(7), Field::extension(3, 2), Field::extension(5, 2)}) {
        Elt g = f->primitive_element();
        CHECK(f->element_order(g) == f->order() - 1);
        std::set<Elt> seen;
        Elt x = f->one();
        for (std::uint64_t e = 0; e + 1 < f->order(); ++e) {
            seen.insert(x);
            x = f->mul(x, g);
        }
        CHECK(seen.size() == f->order() - 1);
    }
}

TEST_CASE("squaring in GF(9) follows the modulus") {
    auto f = Field::extension(3, 2);
    Elt x = f->from_digits({0, 1});
    // x^2 = -1 under x^2 + 1
    CHECK(f->mul(x, x) == f->neg(f->one()));
    CHECK(f->element_order(x) == 4);
    CHECK(f->element_order(f->from_digits({1, 1})) == 8);
}

TEST_CASE("pow agrees with repeated multiplication") {
    auto f = Field::extension(5, 2);
    Elt a = f->element(17);
    Elt acc = f->one();
    for (int e = 0; e <= 30; ++e) {
        CHECK(f->pow(a, e) == acc);
        acc = f->mul(acc, a);
    }
    CHECK(f->pow(f->zero(), 0) == f->one());
}

TEST_CASE("dense tables match the arithmetic") {
    auto f = Field::extension(3, 2);
    REQUIRE(f->has_tables());
    auto q = f->order();
    for (Elt a = 0; a < q; ++a)
        for (Elt b = 0; b < q; ++b) {
            CHECK(f->add_table()[a * q + b] == f->add(a, b));
            CHECK(f->mul_table()[a * q + b] == f->mul(a, b));
        }
}

TEST_CASE("field identity and compatibility") {
    auto a = Field::prime(3);
    auto b = Field::prime(3);
    auto c = Field::extension(3, 2);
    CHECK(a->same(*b));
    CHECK(!a->same(*c));
    CHECK(field_of_order(8)->characteristic() == 2);
    CHECK(field_of_order(8)->degree() == 3);
    CHECK_THROWS_AS(field_of_order(12), Error);
}
