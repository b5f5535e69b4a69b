#include <doctest.h>

#include <random>

#include "levi/scalar.hpp"

using namespace levi;

TEST_SUITE("scalar") {

TEST_CASE("field descriptors") {
    const Field g5 = Field::gf(5);
    CHECK(g5.is_prime_field());
    CHECK(g5.modulus() == 5);
    CHECK(g5 == Field::gf(5));
    CHECK_FALSE(g5 == Field::gf(7));
    CHECK_FALSE(g5 == Field::rationals());
    CHECK(Field::rationals() == Field::rationals());

    CHECK_THROWS_AS(Field::gf(4), InvalidField);
    CHECK_THROWS_AS(Field::gf(1), InvalidField);
    CHECK_THROWS_AS(Field::gf(0), InvalidField);
    CHECK_THROWS_AS(Field::gf(1 << 16), InvalidField);  // even if prime-sized, cap applies
    CHECK_NOTHROW(Field::gf(65521));                    // largest prime below 2^16
}

TEST_CASE("prime field arithmetic") {
    CHECK(Scalar::gf(5, 3) * Scalar::gf(5, 4) == Scalar::gf(5, 2));  // 12 mod 5
    CHECK(Scalar::gf(7, 3).inv() == Scalar::gf(7, 5));               // 3*5 = 15 = 1 mod 7
    CHECK(Scalar::gf(5, 2) + Scalar::gf(5, 4) == Scalar::gf(5, 1));
    CHECK(Scalar::gf(5, 2) - Scalar::gf(5, 4) == Scalar::gf(5, 3));
    CHECK(-Scalar::gf(5, 2) == Scalar::gf(5, 3));
    CHECK(-Scalar::gf(5, 0) == Scalar::gf(5, 0));
    CHECK(Scalar::gf(5, 3) / Scalar::gf(5, 4) == Scalar::gf(5, 2));  // 3 * 4^-1 = 3*4 = 12

    CHECK_THROWS_AS(Scalar::gf(5, 0).inv(), DivisionByZero);
    CHECK_THROWS_AS(Scalar::gf(5, 1) / Scalar::gf(5, 0), DivisionByZero);
    CHECK_THROWS_AS(Scalar::gf(5, 1) + Scalar::gf(7, 1), DescriptorMismatch);
    CHECK_THROWS_AS(Scalar::gf(5, 1) * Scalar::rational(1, 2), DescriptorMismatch);
}

TEST_CASE("rational arithmetic") {
    CHECK(Scalar::rational(1, 2) + Scalar::rational(1, 3) == Scalar::rational(5, 6));
    CHECK(Scalar::rational(2, 4) == Scalar::rational(1, 2));   // canonical lowest terms
    CHECK(Scalar::rational(1, -2) == Scalar::rational(-1, 2)); // positive denominator
    CHECK(Scalar::rational(3, 2) * Scalar::rational(2, 3) == Scalar::rational(1, 1));
    CHECK(Scalar::rational(-3, 2).str() == "-3/2");
    CHECK(Scalar::rational(3, 1).str() == "3");
    CHECK(Scalar::rational(1, 2).inv() == Scalar::rational(2, 1));
    CHECK_THROWS_AS(Scalar::rational(0, 1).inv(), DivisionByZero);

    const Field q = Field::rationals();
    CHECK(Scalar::parse(q, "-3/2") == Scalar::rational(-3, 2));
    CHECK(Scalar::parse(q, "3") == Scalar::rational(3, 1));
    CHECK(Scalar::parse(Field::gf(5), "7") == Scalar::gf(5, 2));
}

TEST_CASE("enumerate_field") {
    const auto g2 = enumerate_field(Field::gf(2));
    REQUIRE(g2.size() == 2);
    CHECK(g2[0] == Scalar::gf(2, 0));
    CHECK(g2[1] == Scalar::gf(2, 1));

    const auto g3 = enumerate_field(Field::gf(3));
    REQUIRE(g3.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(g3[static_cast<std::size_t>(i)] == Scalar::gf(3, i));

    CHECK_THROWS_AS(enumerate_field(Field::rationals()), InfiniteField);
}

TEST_CASE("multiplicative inverses over whole fields") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 97u}) {
        const Field f = Field::gf(p);
        for (std::uint32_t v = 1; v < p; ++v) {
            const Scalar x = Scalar::of_int(f, v);
            CHECK(x * x.inv() == Scalar::one(f));
        }
    }
}

TEST_CASE("canonical form is idempotent") {
    for (long long v = -20; v <= 20; ++v) {
        const Scalar x = Scalar::gf(7, v);
        CHECK(Scalar::of_int(Field::gf(7), x.residue()) == x);
        CHECK(x.residue() < 7);
    }
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> d(-300, 300);
    for (int i = 0; i < 500; ++i) {
        long long num = d(rng), den = d(rng);
        if (den == 0) den = 1;
        const Scalar x = Scalar::rational(num, den);
        CHECK(Scalar::parse(Field::rationals(), x.str()) == x);
    }
}

TEST_CASE("field laws on random triples") {
    std::mt19937_64 rng(2026);
    auto check_laws = [&](auto draw) {
        for (int i = 0; i < 10000; ++i) {
            const Scalar a = draw(), b = draw(), c = draw();
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
        }
    };
    for (std::uint32_t p : {2u, 3u, 5u, 251u}) {
        const Field f = Field::gf(p);
        std::uniform_int_distribution<long long> d(0, p - 1);
        check_laws([&] { return Scalar::of_int(f, d(rng)); });
    }
    std::uniform_int_distribution<long long> num(-40, 40);
    std::uniform_int_distribution<long long> den(1, 40);
    check_laws([&] { return Scalar::rational(num(rng), den(rng)); });
}

}  // TEST_SUITE
