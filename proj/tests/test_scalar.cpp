#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homops/scalar.hpp"

using namespace homops;

TEST_CASE("rational arithmetic is exact and canonical") {
    Scalar a = Scalar::rational(1, 2);
    Scalar b = Scalar::rational(1, 3);
    CHECK((a + b) == Scalar::rational(5, 6));
    CHECK((a + b).to_string() == "5/6");
    CHECK(Scalar::rational(2, 4) == Scalar::rational(1, 2));
    CHECK(Scalar::rational(-2, -4).to_string() == "1/2");
    CHECK((-Scalar::integer(0)) == Scalar::integer(0));
}

TEST_CASE("prime field arithmetic") {
    CHECK(Scalar::mod(2, 5).inv() == Scalar::mod(3, 5));
    CHECK((Scalar::mod(4, 5) + Scalar::mod(3, 5)) == Scalar::mod(2, 5));
    CHECK((Scalar::mod(-1, 7)) == Scalar::mod(6, 7));
    CHECK_THROWS_AS(Scalar::mod(1, 6), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::mod(0, 5).inv(), std::domain_error);
    CHECK_THROWS_AS(Scalar::integer(1) / Scalar::integer(0), std::domain_error);
    CHECK_THROWS_AS(Scalar::integer(1) + Scalar::mod(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::mod(1, 5) * Scalar::mod(1, 7), std::invalid_argument);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-40, 40);
    for (int trial = 0; trial < 300; ++trial) {
        Scalar a = Scalar::rational(d(rng), 1 + std::abs(d(rng)));
        Scalar b = Scalar::rational(d(rng), 1 + std::abs(d(rng)));
        Scalar c = Scalar::rational(d(rng), 1 + std::abs(d(rng)));
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + (-a) == Scalar::integer(0));
        if (!a.is_zero()) CHECK(a * a.inv() == Scalar::integer(1));
    }
    constexpr std::int64_t p = 2147483647;
    for (int trial = 0; trial < 300; ++trial) {
        Scalar a = Scalar::mod(d(rng), p);
        Scalar b = Scalar::mod(d(rng), p);
        Scalar c = Scalar::mod(d(rng), p);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        if (!a.is_zero()) CHECK(a * a.inv() == Scalar::mod(1, p));
    }
}

TEST_CASE("binomial convention and Pascal rule") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(0, 0) == 1);
    for (int n = 0; n <= 12; ++n) CHECK(binomial(n, 0) == 1);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(5, -1) == 0);
    for (int n = 1; n <= 20; ++n)
        for (int k = -2; k <= n + 2; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));
}

TEST_CASE("serialization round trips") {
    for (const char* s : {"5/6", "-7", "0", "3 mod 5"}) {
        CHECK(Scalar::parse(s).to_string() == s);
    }
    CHECK(Scalar::parse("4/2").to_string() == "2");
}

TEST_CASE("reduction into a prime field") {
    CHECK(Scalar::rational(1, 2).to_field(FieldSpec::prime(7)) == Scalar::mod(4, 7));
    CHECK(Scalar::integer(-1).to_field(FieldSpec::prime(5)) == Scalar::mod(4, 5));
    CHECK_THROWS_AS(Scalar::rational(1, 5).to_field(FieldSpec::prime(5)), std::domain_error);
}

TEST_CASE("field spec parsing") {
    CHECK(FieldSpec::parse("q").is_rational());
    CHECK(FieldSpec::parse("fp:5").p == 5);
    CHECK_THROWS_AS(FieldSpec::parse("fp:9"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("float"), std::invalid_argument);
}
