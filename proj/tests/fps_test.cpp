#include <doctest.h>

#include <random>
#include <stdexcept>

#include "rrkit/fps.hpp"
#include "rrkit/sumside.hpp"
#include "test_support.hpp"

using namespace rrkit;

TEST_CASE("geometric series") {
    CHECK(geometric(1, 4) == QSeries::from_coeffs(4, {1, 1, 1, 1, 1}));
    CHECK(geometric(3, 2) == QSeries::one(2));
    CHECK(geometric(2, 6) == QSeries::from_coeffs(6, {1, 0, 1, 0, 1, 0, 1}));
    CHECK_THROWS_AS(geometric(0, 5), std::invalid_argument);
}

TEST_CASE("geometric(m, N) equals invert(1 - q^m)") {
    for (std::size_t n = 1; n <= 64; ++n) {
        for (std::size_t m = 1; m <= n; ++m) {
            const QSeries one_minus = QSeries::one(n) - QSeries::monomial(1, m, n);
            REQUIRE(geometric(m, n) == invert(one_minus));
        }
    }
}

TEST_CASE("linear_combine") {
    const QSeries x = QSeries::from_coeffs(5, {3, -2, 0, 7});
    CHECK(linear_combine(x, x, 1, -1).is_zero());
    CHECK(linear_combine(geometric(1, 3), geometric(2, 3), 1, -1) ==
          QSeries::from_coeffs(3, {0, 1, 0, 1}));
    CHECK(linear_combine(x, QSeries(5), 5, 0) == QSeries::from_coeffs(5, {15, -10, 0, 35}));
    CHECK_THROWS_AS(linear_combine(x, QSeries(4), 1, 1), std::invalid_argument);
}

TEST_CASE("mul") {
    const QSeries one_minus_q = QSeries::from_coeffs(10, {1, -1});
    CHECK(mul(one_minus_q, geometric(1, 10)) == QSeries::one(10));
    const QSeries one_plus_q = QSeries::from_coeffs(4, {1, 1});
    CHECK(mul(one_plus_q, one_plus_q) == QSeries::from_coeffs(4, {1, 2, 1}));
    CHECK_THROWS_AS(mul(one_plus_q, one_minus_q), std::invalid_argument);

    // 1 + q/(1-q) + q^4/((1-q)(1-q^2)) multiplied out term by term.
    const std::size_t n = 4;
    const QSeries partial = QSeries::one(n) + mul(QSeries::monomial(1, 1, n), geometric(1, n)) +
                            mul(QSeries::monomial(1, 4, n), mul(geometric(1, n), geometric(2, n)));
    CHECK(partial == QSeries::from_coeffs(n, {1, 1, 1, 1, 2}));
}

TEST_CASE("invert") {
    CHECK(invert(QSeries::from_coeffs(9, {1, -1})) == geometric(1, 9));
    CHECK(invert(QSeries::one(6)) == QSeries::one(6));
    // Fibonacci generating function; F_k = F_{k-1} + F_{k-2} from 1, 1.
    const QSeries fib = invert(QSeries::from_coeffs(7, {1, -1, -1}));
    CHECK(fib == QSeries::from_coeffs(7, {1, 1, 2, 3, 5, 8, 13, 21}));
    CHECK(coefficient(fib, 7) == 21);
    CHECK(invert(QSeries::from_coeffs(3, {-1, 1})) == QSeries::from_coeffs(3, {-1, -1, -1, -1}));

    try {
        invert(QSeries::from_coeffs(3, {2, 1}));
        FAIL("expected domain_error");
    } catch (const std::domain_error &e) {
        CHECK(std::string(e.what()).find("non-unit constant term") != std::string::npos);
    }
    CHECK_THROWS_AS(invert(QSeries::from_coeffs(3, {0, 1})), std::domain_error);
}

TEST_CASE("coefficient access") {
    CHECK(coefficient(geometric(2, 6), 4) == 1);
    CHECK(coefficient(rr_sum(0, 4), 4) == 2);
    CHECK_THROWS_AS(coefficient(geometric(2, 6), 7), std::out_of_range);
}

TEST_CASE("finite geometric sum times (1 - q) telescopes") {
    for (std::size_t n = 1; n <= 50; ++n) {
        const std::size_t order = 60;
        QSeries partial(order);
        for (std::size_t k = 0; k < n; ++k) {
            partial = linear_combine(partial, QSeries::monomial(1, k, order), 1, 1);
        }
        const QSeries expected = QSeries::one(order) - QSeries::monomial(1, n, order);
        REQUIRE(mul(partial, QSeries::from_coeffs(order, {1, -1})) == expected);
    }
}

TEST_CASE("ring axioms on random series") {
    std::mt19937_64 rng(20261018);
    std::uniform_int_distribution<std::size_t> order_dist(0, 32);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = order_dist(rng);
        const QSeries a = testing::random_series(rng, n, -9, 9);
        const QSeries b = testing::random_series(rng, n, -9, 9);
        const QSeries c = testing::random_series(rng, n, -9, 9);
        REQUIRE(mul(a, b) == mul(b, a));
        REQUIRE(mul(mul(a, b), c) == mul(a, mul(b, c)));
        REQUIRE(mul(linear_combine(a, b, 3, -2), c) ==
                linear_combine(mul(a, c), mul(b, c), 3, -2));

        const QSeries u = testing::random_series(rng, n, -9, 9, trial % 2 == 0 ? 1 : -1);
        REQUIRE(mul(u, invert(u)) == QSeries::one(n));
    }
}

TEST_CASE("truncation consistency") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t big = 30;
        const std::size_t small = trial % 30;
        const QSeries a = testing::random_series(rng, big, -9, 9, 1);
        const QSeries b = testing::random_series(rng, big, -9, 9);
        const QSeries as = a.truncated(small);
        const QSeries bs = b.truncated(small);
        REQUIRE(mul(a, b).truncated(small) == mul(as, bs));
        REQUIRE(invert(a).truncated(small) == invert(as));
        REQUIRE(linear_combine(a, b, 2, 5).truncated(small) == linear_combine(as, bs, 2, 5));
        REQUIRE(geometric(3, big).truncated(small) == geometric(3, small));
        REQUIRE(rr_sum(0, big).truncated(small) == rr_sum(0, small));
    }
}

TEST_CASE("sparse factor helpers agree with dense products") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 25;
        const QSeries a = testing::random_series(rng, n, -5, 5);
        const std::size_t m = 1 + trial % 7;
        const QSeries factor = QSeries::one(n) - QSeries::monomial(1, m, n);
        REQUIRE(a.times_one_minus_qpow(m) == mul(a, factor));
        REQUIRE(a.over_one_minus_qpow(m) == mul(a, invert(factor)));
        const long c = (trial % 9) - 4;
        QSeries power = QSeries::one(n);
        for (long i = 0; i < std::abs(c); ++i) power = mul(power, c > 0 ? factor : invert(factor));
        REQUIRE(a.times_binomial_power(m, c) == mul(a, power));
    }
}

TEST_CASE("coefficients exceed native width without loss") {
    // p(n) generating function at order 500: p(500) has 22 digits.
    QSeries s = QSeries::one(500);
    for (std::size_t m = 1; m <= 500; ++m) s = s.over_one_minus_qpow(m);
    CHECK(s[500] == Integer("2300165032574323995027"));
}

TEST_CASE("text and JSON rendering") {
    const QSeries s = QSeries::from_coeffs(4, {1, -1, 0, 3});
    CHECK(to_string(s) == "1 - q + 3*q^3");
    CHECK(to_string(QSeries(3)) == "0");
    CHECK(to_string(QSeries::from_coeffs(3, {0, -2, 1})) == "-2*q + q^2");
    CHECK(to_compact_string(rr_sum(0, 4)) == "1+q+q^2+q^3+2q^4");
    CHECK(to_compact_string(geometric(1, 10), 3) == "1+q+q^2+...");

    const auto j = to_json(s);
    CHECK(j.dump() == R"({"coeffs":["1","-1","0","3","0"],"order":4})");
    CHECK(qseries_from_json(j) == s);
}
