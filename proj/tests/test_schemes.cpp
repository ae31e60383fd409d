#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gt/schemes.hpp"
#include "gt/simulate.hpp"

using namespace gt;

TEST_CASE("a2_t closed form") {
    // no infections: only the 2n row/column pools remain
    CHECK(std::fabs(a2_t(Prevalence::from_q(1.0 - 1e-12), 5.0) - 0.4) < 1e-9);
    // everyone infected: all n^2 cells retested on top of the pools
    CHECK(a2_t(Prevalence::from_q(1e-12), 5.0) == doctest::Approx(1.4).epsilon(1e-9));
    CHECK(a2_t(Prevalence::from_q(0.9), 5.0) == doctest::Approx(0.606440).epsilon(1e-5));
    CHECK_THROWS_AS(a2_t(Prevalence::from_p(0.1), 1.9), std::domain_error);
}

TEST_CASE("a2 expected total matches n^2 t") {
    const Prevalence prev = Prevalence::from_q(0.9);
    CHECK(a2_expected_total(prev, 5) == doctest::Approx(15.1610).epsilon(3e-4));
    CHECK(a2_expected_total(Prevalence::from_q(1.0 - 1e-12), 5)
          == doctest::Approx(10.0).epsilon(1e-8));
    for (long n : {2L, 3L, 7L, 12L})
        for (double q : {0.6, 0.9, 0.99})
            CHECK(std::fabs(a2_expected_total(Prevalence::from_q(q), n)
                            - n * n * a2_t(Prevalence::from_q(q), static_cast<double>(n)))
                  < 1e-11);
}

TEST_CASE("a2_t upper bound and monotone excess") {
    for (double q : {0.1, 0.4, 0.75, 0.9, 0.99})
        for (double n : {2.0, 3.5, 5.0, 20.0})
            CHECK(a2_t(Prevalence::from_q(q), n) < 1.0 + 2.0 / n);
    // q -> g(q, n) strictly decreasing (finite differences across a grid)
    for (double n : {2.5, 3.0, 5.0, 17.0}) {
        double prev_g = a2_g(Prevalence::from_q(0.02), n);
        for (double q = 0.07; q < 1.0 - 1e-9; q += 0.05) {
            const double next_g = a2_g(Prevalence::from_q(q), n);
            CHECK(next_g < prev_g);
            prev_g = next_g;
        }
    }
}

TEST_CASE("dorfman_t") {
    CHECK(dorfman_t(Prevalence::from_q(0.3), 1.0) == doctest::Approx(2.0 - 0.3).epsilon(1e-12));
    CHECK(dorfman_t(Prevalence::from_q(0.9), 2.0) == doctest::Approx(0.69).epsilon(1e-12));
    CHECK(dorfman_t(Prevalence::from_q(0.99), 11.0)
          == doctest::Approx(0.195570).epsilon(1e-5));
    CHECK_THROWS_AS(dorfman_t(Prevalence::from_q(0.9), 0.5), std::domain_error);
}

TEST_CASE("sterrett_t against enumeration and closed form") {
    CHECK(sterrett_t(Prevalence::from_q(0.9), 1) == doctest::Approx(1.1).epsilon(1e-12));
    // 4 status patterns of 2 individuals, hand enumerated
    CHECK(sterrett_t(Prevalence::from_q(0.9), 2) == doctest::Approx(0.645).epsilon(1e-12));
    for (double q : {0.7, 0.85, 0.95, 0.99}) {
        const Prevalence prev = Prevalence::from_q(q);
        const auto table = sterrett_t_table(prev, 40);
        for (long N = 1; N <= 40; ++N) {
            CHECK(table[N - 1] == doctest::Approx(sterrett_t_closed(prev, N)).epsilon(1e-12));
        }
    }
}

TEST_CASE("sterrett integer minimizer at p=0.01 lies in the stated set") {
    const Prevalence prev = Prevalence::from_p(0.01);
    const auto table = sterrett_t_table(prev, 400);
    long best = 1;
    for (long N = 2; N <= 400; ++N)
        if (table[N - 1] < table[best - 1]) best = N;
    CHECK(best >= 14);
    CHECK(best <= 16);
}

TEST_CASE("sterrett never behind dorfman on the shared grid") {
    for (double q : {0.75, 0.8, 0.9, 0.95, 0.99}) {
        const Prevalence prev = Prevalence::from_q(q);
        const auto table = sterrett_t_table(prev, 64);
        for (long N = 2; N <= 64; ++N)
            CHECK(table[N - 1] <= dorfman_t(prev, static_cast<double>(N)) + 1e-12);
    }
}

TEST_CASE("halving_t base cases") {
    CHECK(halving_t(Prevalence::from_q(0.42), 1) == doctest::Approx(1.0).epsilon(1e-15));
    // 4 patterns of 2: E = q^2 + 3 (1 - q^2)
    CHECK(halving_t(Prevalence::from_q(0.9), 2) == doctest::Approx(0.69).epsilon(1e-12));
    CHECK_THROWS_AS(halving_t(Prevalence::from_q(0.9), 0), std::domain_error);
}

TEST_CASE("halving_t agrees with Monte Carlo at a larger size") {
    const Prevalence prev = Prevalence::from_q(0.99);
    const SimulationReport rep = estimate_t(prev, Scheme::Halving, 34, 100000, 20240);
    const double analytic = halving_t(prev, 34);
    CHECK(std::fabs(rep.mean_tests_per_person - analytic) < 4.0 * rep.std_error);
}

TEST_CASE("gain is 1 - t across schemes") {
    const Prevalence prev = Prevalence::from_q(0.99);
    CHECK(gain(prev, SchemeSize::integer(Scheme::Dorfman, 11))
          == doctest::Approx(0.804430).epsilon(1e-5));
    CHECK(gain(Prevalence::from_q(1.0 - 1e-12), SchemeSize::integer(Scheme::A2, 5))
          == doctest::Approx(0.6).epsilon(1e-9));
    // at the root of g the gain vanishes
    CHECK(gain(Prevalence::from_q(0.750209961), SchemeSize::integer(Scheme::A2, 5))
          == doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("evaluate ties the invariants together") {
    const Prevalence prev = Prevalence::from_q(0.9);
    const EvaluationPoint pt = evaluate(prev, SchemeSize::integer(Scheme::A2, 5));
    CHECK(pt.g == doctest::Approx(pt.t - 1.0).epsilon(1e-15));
    CHECK(pt.gain == doctest::Approx(-pt.g).epsilon(1e-15));
    CHECK(pt.expected_total == doctest::Approx(25.0 * pt.t).epsilon(1e-12));
}

TEST_CASE("every scheme t matches its Monte Carlo estimate") {
    struct Case { Scheme s; double p; long size; uint64_t seed; };
    const Case cases[] = {
        {Scheme::A2, 0.1, 5, 42},
        {Scheme::Dorfman, 0.1, 5, 43},
        {Scheme::Sterrett, 0.05, 8, 44},
        {Scheme::Halving, 0.1, 8, 7},
    };
    for (const auto& c : cases) {
        const Prevalence prev = Prevalence::from_p(c.p);
        const SimulationReport rep = estimate_t(prev, c.s, c.size, 100000, c.seed);
        const double analytic = scheme_t(prev, SchemeSize::integer(c.s, c.size));
        CHECK(std::fabs(rep.mean_tests_per_person - analytic) < 4.0 * rep.std_error);
    }
}
