#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rpm/errors.hpp"
#include "rpm/rational.hpp"

using namespace rpm;

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
    CHECK_THROWS_AS(factorial(-1), BadInput);
}

TEST_CASE("double factorial") {
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(1) == 1);
    CHECK(double_factorial(2) == 2);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(6) == 48);
    CHECK(double_factorial(7) == 105);
    CHECK_THROWS_AS(double_factorial(-2), BadInput);
}

TEST_CASE("double factorial recurrence") {
    for (long n = 1; n <= 20; ++n) {
        CHECK(double_factorial(n) == Int(n) * double_factorial(n - 2));
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(6, 0) == 1);
    CHECK(binomial(6, 6) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(10, 5) == 252);
}

TEST_CASE("rational powers") {
    CHECK(rat_pow(Rat(2, 3), 3) == Rat(8, 27));
    CHECK(rat_pow(Rat(7, 5), 0) == 1);
    CHECK(rat_pow(Rat(0), 0) == 1);
    CHECK(rat_pow(Rat(0), 4) == 0);
    CHECK(rat_pow(Rat(-1, 2), 2) == Rat(1, 4));
    CHECK(rat_pow(Rat(-1, 2), 3) == Rat(-1, 8));
    CHECK_THROWS_AS(rat_pow(Rat(2), -1), BadInput);
}

TEST_CASE("rational parsing") {
    CHECK(rat_from_string("3/4") == Rat(3, 4));
    CHECK(rat_from_string("7") == 7);
    CHECK(rat_from_string("-7") == -7);
    CHECK(rat_from_string("0.35") == Rat(7, 20));
    CHECK(rat_from_string("2.5") == Rat(5, 2));
    CHECK(rat_from_string("-0.5") == Rat(-1, 2));
    CHECK(rat_from_string("6/8") == Rat(3, 4));
    CHECK_THROWS_AS(rat_from_string(""), BadInput);
    CHECK_THROWS_AS(rat_from_string("1/0"), BadInput);
    CHECK_THROWS_AS(rat_from_string("abc"), BadInput);
    CHECK_THROWS_AS(rat_from_string("1.2.3"), BadInput);
    CHECK_THROWS_AS(rat_from_string("1/"), BadInput);
}

TEST_CASE("rational formatting") {
    CHECK(rat_to_string(Rat(3, 4)) == "3/4");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK(rat_to_string(Rat(-2, 6)) == "-1/3");
    CHECK(rat_to_string(Rat(0)) == "0");
    CHECK(rat_to_double(Rat(1, 2)) == doctest::Approx(0.5));
    CHECK(rat_to_double(Rat(1, 3)) == doctest::Approx(1.0 / 3.0));
}
