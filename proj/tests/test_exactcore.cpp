#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ehrlab/exact.hpp"
#include "ehrlab/matrix.hpp"
#include "ehrlab/polynomial.hpp"
#include "oracles.hpp"

using namespace ehrlab;

TEST_CASE("rationals are canonical") {
    CHECK(rat_string(make_rat(2, 4)) == "1/2");
    CHECK(rat_string(make_rat(-2, -4)) == "1/2");
    CHECK(rat_string(make_rat(1, -2)) == "-1/2");
    CHECK(rat_string(make_rat(0, 7)) == "0/1");
    CHECK(rat_string(Rat(5)) == "5/1");
    CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);

    CHECK(parse_rat("3/6") == make_rat(1, 2));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK_THROWS_AS(parse_rat("x/2"), std::invalid_argument);

    // Normalization is idempotent and addition matches cross multiplication.
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 30);
    for (int i = 0; i < 200; ++i) {
        const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        const Rat sum = make_rat(a, b) + make_rat(c, d);
        CHECK(sum == make_rat(a * d + c * b, b * d));
        CHECK(make_rat(sum.get_num(), sum.get_den()) == sum);
    }
}

TEST_CASE("binomial and factorial") {
    CHECK(binomial(Int(4), 2) == 6);
    CHECK(binomial(Int(0), 0) == 1);
    CHECK(binomial(Int(10), 3) == 120);
    CHECK(binomial(Int(3), 5) == 0);
    CHECK(binomial(Int(-1), 2) == 1);  // falling factorial (-1)(-2)/2
    CHECK(factorial(0) == 1);
    CHECK(factorial(14) == Int("87178291200"));
    CHECK_THROWS_AS(divide_exact(Int(7), Int(2)), std::runtime_error);
    CHECK(divide_exact(Int(-12), Int(4)) == -3);
}

TEST_CASE("polynomial basics") {
    const UniPolynomial zero;
    CHECK(zero.degree() == -1);
    CHECK(zero.is_zero());
    CHECK(zero(Int(3)) == 0);

    // Trailing zeros are trimmed away.
    CHECK(UniPolynomial({Rat(1), Rat(0), Rat(0)}) == UniPolynomial::constant(Rat(1)));

    const UniPolynomial p({Rat(1), make_rat(3, 2), make_rat(1, 2)});
    CHECK(p.degree() == 2);
    CHECK(p(Int(3)) == Rat(10));
    CHECK(p.pretty() == "1/2*n^2 + 3/2*n + 1");

    const auto strings = p.to_strings();
    REQUIRE(strings.size() == 3);
    CHECK(strings[0] == "1/1");
    CHECK(strings[1] == "3/2");
    CHECK(strings[2] == "1/2");
    CHECK(UniPolynomial::from_strings(strings) == p);

    CHECK((p - p).is_zero());
    CHECK((UniPolynomial({Rat(0), Rat(1)}) * UniPolynomial({Rat(1), Rat(1)})) ==
          UniPolynomial({Rat(0), Rat(1), Rat(1)}));
}

TEST_CASE("interpolation on fixed nodes") {
    CHECK(interpolate_polynomial({{Int(0), Rat(1)}, {Int(1), Rat(2)}}) ==
          UniPolynomial({Rat(1), Rat(1)}));
    CHECK(interpolate_polynomial({{Int(0), Rat(0)}, {Int(1), Rat(1)}, {Int(2), Rat(4)}}) ==
          UniPolynomial({Rat(0), Rat(0), Rat(1)}));

    // Nodes from the cumulative square sums, recomputed here by summation.
    std::vector<std::pair<Int, Rat>> points;
    for (long x = 0; x <= 3; ++x) {
        long sum = 0;
        for (long j = 1; j <= x + 1; ++j) {
            sum += j * j;
        }
        points.emplace_back(Int(x), Rat(sum));
    }
    // (x+1)(x+2)(2x+3)/6 expanded.
    CHECK(interpolate_polynomial(points) ==
          UniPolynomial({Rat(1), make_rat(13, 6), make_rat(3, 2), make_rat(1, 3)}));

    CHECK_THROWS_WITH_AS(
        interpolate_polynomial({{Int(1), Rat(1)}, {Int(1), Rat(2)}}),
        "degenerate interpolation nodes", std::invalid_argument);
    CHECK_THROWS_AS(interpolate_polynomial({}), std::invalid_argument);
}

TEST_CASE("interpolation inverts sampling") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::uniform_int_distribution<int> deg(0, 8);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = deg(rng);
        std::vector<Rat> coeffs;
        for (int i = 0; i <= d; ++i) {
            coeffs.push_back(make_rat(num(rng), den(rng)));
        }
        const UniPolynomial p(coeffs);
        std::vector<std::pair<Int, Rat>> samples;
        for (int x = 0; x <= d; ++x) {
            samples.emplace_back(Int(x), p(Int(x)));
        }
        CHECK(interpolate_polynomial(samples) == p);
    }
}

TEST_CASE("power sums") {
    CHECK(power_sum_polynomial(0) == UniPolynomial({Rat(1), Rat(1)}));
    CHECK(power_sum_polynomial(1) == UniPolynomial({Rat(1), make_rat(3, 2), make_rat(1, 2)}));

    SUBCASE("exponent 20 reproduces the published coefficients") {
        const auto p = power_sum_polynomial(20);
        CHECK(p.degree() == 21);
        CHECK(p.coefficient(0) == Rat(1));
        CHECK(p.coefficient(1) == make_rat(-3528231, 6930));
        CHECK(p.coefficient(2) == make_rat(1316700, 6930));
        CHECK(p.coefficient(3) == make_rat(32027050, 6930));
        CHECK(p(Int(1)) == Rat(1048577));  // 1 + 2^20
    }

    SUBCASE("values match the direct sums") {
        for (unsigned long ell = 0; ell <= 10; ++ell) {
            const auto p = power_sum_polynomial(ell);
            for (long n = 0; n <= 10; ++n) {
                Int direct = 0;
                for (long j = 1; j <= n + 1; ++j) {
                    Int term;
                    mpz_ui_pow_ui(term.get_mpz_t(), j, ell);
                    direct += term;
                }
                CHECK(p(Int(n)) == Rat(direct));
            }
        }
    }
}

TEST_CASE("determinants") {
    CHECK(IntMatrix::from_rows({{5}}).determinant() == 5);
    CHECK(IntMatrix::from_rows({{1, 2}, {3, 4}}).determinant() == -2);

    // Tableau recount: fillings of the two-row hook shape with entries <= 3.
    CHECK(oracles::count_ssyt({2, 1}, 3) == 8);
    CHECK(IntMatrix::from_rows({{6, 10}, {1, 3}}).determinant() == 8);

    CHECK(IntMatrix::from_rows({{0, 1}, {0, 2}}).determinant() == 0);
    CHECK(IntMatrix::from_rows({{0, 1}, {1, 0}}).determinant() == -1);
    CHECK_THROWS_AS(IntMatrix(2, 3).determinant(), std::invalid_argument);

    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> entry(-5, 5);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = dim(rng);
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) = entry(rng);
            }
        }
        CHECK(m.determinant() == oracles::cofactor_determinant(m));
    }
}
