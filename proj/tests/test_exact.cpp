#include <doctest.h>

#include <random>

#include "polarcg/exact.hpp"
#include "polarcg/half_int.hpp"

using namespace polarcg;
using exact::RadicalSum;
using exact::Rat;

TEST_CASE("factorial basics") {
    CHECK(exact::factorial(0) == 1);
    CHECK(exact::factorial(1) == 1);
    // oracle: repeated multiplication
    exact::Int by_hand = 1;
    for (long i = 2; i <= 10; ++i) by_hand *= i;
    CHECK(exact::factorial(10) == by_hand);
    CHECK(by_hand == 3628800);
    CHECK_THROWS_AS(exact::factorial(-1), domain_error);
}

TEST_CASE("pochhammer") {
    CHECK(exact::pochhammer(Rat(3), 0) == 1);
    CHECK(exact::pochhammer(Rat(1), 4) == 24);
    CHECK(exact::pochhammer(Rat(-2), 3) == 0);
    CHECK(exact::pochhammer(Rat(1, 2), 2) == Rat(3, 4));
}

TEST_CASE("sqrt_normalize") {
    CHECK(exact::sqrt_normalize(Rat(0)).is_zero());

    RadicalSum nine_fourths = exact::sqrt_normalize(Rat(9, 4));
    CHECK(nine_fourths.is_rational());
    CHECK(nine_fourths.as_rational() == Rat(3, 2));

    // (2/3)^2 * 6 = 8/3, factorization oracle
    RadicalSum eight_thirds = exact::sqrt_normalize(Rat(8, 3));
    REQUIRE(eight_thirds.term_count() == 1);
    const auto& [radicand, coeff] = *eight_thirds.terms().begin();
    CHECK(coeff == Rat(2, 3));
    CHECK(radicand == Rat(6));
    CHECK(coeff * coeff * radicand == Rat(8, 3));

    CHECK_THROWS_AS(exact::sqrt_normalize(Rat(-1)), domain_error);
}

TEST_CASE("radical arithmetic basics") {
    const RadicalSum sqrt2 = exact::sqrt_normalize(Rat(2));
    const RadicalSum sqrt3 = exact::sqrt_normalize(Rat(3));
    const RadicalSum sqrt6 = exact::sqrt_normalize(Rat(6));

    CHECK(sqrt2 + sqrt2 == sqrt2 * Rat(2));
    CHECK(sqrt2 * sqrt3 == sqrt6);
    RadicalSum six = sqrt6 * sqrt6;
    CHECK(six.is_rational());
    CHECK(six.as_rational() == Rat(6));
    CHECK((sqrt2 - sqrt2).is_zero());
}

TEST_CASE("radical arithmetic properties on random values") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> num(1, 40), den(1, 12), pick(0, 2);
    auto random_radical = [&] {
        RadicalSum value;
        const int terms = 1 + pick(rng);
        for (int t = 0; t < terms; ++t) {
            Rat coeff(num(rng) - 20, den(rng));
            if (sgn(coeff) == 0) coeff = 1;
            coeff.canonicalize();
            Rat radicand(num(rng), den(rng));
            radicand.canonicalize();
            value.add_term(coeff, radicand);
        }
        return value;
    };

    for (int round = 0; round < 300; ++round) {
        const RadicalSum a = random_radical(), b = random_radical(), c = random_radical();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }

    // sqrt_normalize(r)^2 == r
    std::uniform_int_distribution<int> big(1, 4000);
    for (int round = 0; round < 300; ++round) {
        Rat r(big(rng), den(rng));
        r.canonicalize();
        RadicalSum root = exact::sqrt_normalize(r);
        CHECK(root.squared().as_rational() == r);
    }

    // zero test agrees with floating evaluation (smoke only)
    for (int round = 0; round < 1200; ++round) {
        const RadicalSum a = random_radical();
        const RadicalSum difference = a - a;
        CHECK(difference.is_zero());
        const RadicalSum b = random_radical();
        const RadicalSum sum = a + b;
        if (!sum.is_zero()) {
            // a + b nonzero must not evaluate to (near) zero
            CHECK(std::abs(sum.to_double()) > 1e-9);
        }
    }
}

TEST_CASE("half_angle_beta") {
    CHECK(exact::half_angle_beta(0, 0) == Rat(2));
    CHECK(exact::half_angle_beta(2, 0) == Rat(1));
    CHECK(exact::half_angle_beta(2, 2) == Rat(1, 3));
    CHECK_THROWS_AS(exact::half_angle_beta(1, 2), domain_error);
    CHECK_THROWS_AS(exact::half_angle_beta(2, -2), domain_error);
    for (long p = 0; p <= 10; p += 2)
        for (long q = 0; q <= 10; q += 2)
            CHECK(exact::half_angle_beta(p, q) == exact::half_angle_beta(q, p));
}

TEST_CASE("canonical text format") {
    CHECK(exact::to_string(RadicalSum()) == "0");
    CHECK(exact::to_string(RadicalSum(Rat(1))) == "1");
    CHECK(exact::to_string(RadicalSum(Rat(-3, 2))) == "-3/2");

    RadicalSum third = exact::sqrt_normalize(Rat(1, 3));
    CHECK(exact::to_string(third) == "(1/1)*sqrt(1/3)");
    CHECK(exact::to_string(-third) == "-(1/1)*sqrt(1/3)");

    RadicalSum mixed = RadicalSum(Rat(2)) - exact::sqrt_normalize(Rat(8, 3));
    CHECK(exact::to_string(mixed) == "-(2/1)*sqrt(2/3) + 2");
    CHECK(exact::to_string(exact::sqrt_normalize(Rat(3))) == "(1/1)*sqrt(3/1)");
    CHECK(exact::to_string(exact::sqrt_normalize(Rat(1, 2))) == "(1/1)*sqrt(1/2)");
    CHECK(exact::to_string(exact::sqrt_normalize(Rat(1, 2)) * Rat(1, 2)) ==
          "(1/2)*sqrt(1/2)");

    // round trip through the text format
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> num(1, 30), den(1, 9);
    for (int round = 0; round < 200; ++round) {
        RadicalSum value;
        for (int t = 0; t < 3; ++t) {
            Rat coeff(num(rng) - 15, den(rng));
            Rat radicand(num(rng), den(rng));
            coeff.canonicalize();
            radicand.canonicalize();
            if (sgn(coeff) != 0) value.add_term(coeff, radicand);
        }
        CHECK(exact::radical_from_string(exact::to_string(value)) == value);
    }
}

TEST_CASE("decimal rendering is display only") {
    RadicalSum half = exact::sqrt_normalize(Rat(1, 2));
    CHECK(exact::to_decimal_string(half, 6) == "0.707107");
    CHECK(exact::to_decimal_string(-half, 3) == "-0.707");
    CHECK(exact::to_decimal_string(RadicalSum(Rat(5, 4)), 2) == "1.25");
}

TEST_CASE("HalfInt") {
    CHECK(HalfInt::whole(2).twice == 4);
    CHECK(half_int_from_string("3/2").twice == 3);
    CHECK(half_int_from_string("-1/2").twice == -1);
    CHECK(half_int_from_string("2").twice == 4);
    CHECK(half_int_from_string("2/1").twice == 4);
    CHECK_THROWS_AS(half_int_from_string("1/3"), domain_error);
    CHECK_THROWS_AS(half_int_from_string("x"), domain_error);
    CHECK(HalfInt::from_twice(3).to_string() == "3/2");
    CHECK(HalfInt::from_twice(-4).to_string() == "-2");
    CHECK(abs(HalfInt::from_twice(-3)) == HalfInt::from_twice(3));
    CHECK_THROWS_AS(HalfInt::from_twice(3).to_int(), domain_error);
}
