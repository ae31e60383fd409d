#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gt/optimal.hpp"
#include "gt/schemes.hpp"
#include "gt/simulate.hpp"

using namespace gt;

TEST_CASE("q_n curve") {
    CHECK(a2_q_n(5.0) == doctest::Approx(0.750209961).epsilon(1e-8));
    // near the left edge the root sits just below 1
    const double eps = 1e-3;
    const double q = a2_q_n(2.0 + eps);
    CHECK(q > 1.0 - eps);
    CHECK(q < 1.0);
    CHECK(a2_g(Prevalence::from_q(a2_q_n(10.0)), 10.0) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("critical pair") {
    const CriticalPair& cp = a2_critical_pair();
    CHECK(cp.q_star == doctest::Approx(0.748416).epsilon(1e-5));
    CHECK(cp.n_star == doctest::Approx(4.453524).epsilon(1e-5));
    // minimality of the q_n curve at n_star
    CHECK(a2_q_n(cp.n_star + 0.1) > cp.q_star);
    CHECK(a2_q_n(cp.n_star - 0.1) > cp.q_star);
    // first stationarity equation residual
    const double lnq = std::log(cp.q_star);
    const double r1 = lnq
        - cp.n_star * powq(cp.q_star, cp.n_star)
              * (1.0 - 0.5 * powq(cp.q_star, cp.n_star - 1.0)) * lnq;
    CHECK(std::fabs(r1) < 1e-7);
}

TEST_CASE("efficiency interval") {
    const double q5 = a2_q5();
    // at q5 the interval touches the order 5
    const EfficiencyInterval at5 = a2_efficiency_interval(Prevalence::from_q(q5 + 1e-12));
    CHECK(std::fabs(a2_g(Prevalence::from_q(q5), 5.0)) < 1e-9);
    CHECK(at5.n_lower <= 5.0 + 1e-3);
    CHECK(at5.n_upper >= 5.0 - 1e-3);

    const EfficiencyInterval iv = a2_efficiency_interval(Prevalence::from_q(0.86));
    CHECK(iv.n_lower < 4.4536);
    CHECK(iv.n_upper > 4.4535);
    CHECK(a2_g(Prevalence::from_q(0.86), 0.5 * (iv.n_lower + iv.n_upper)) < 0.0);

    const EfficiencyInterval wide = a2_efficiency_interval(Prevalence::from_q(0.95));
    CHECK(a2_t(Prevalence::from_q(0.95), 0.5 * (wide.n_lower + wide.n_upper)) < 1.0);

    CHECK_THROWS_AS(a2_efficiency_interval(Prevalence::from_q(0.7)), std::domain_error);
}

TEST_CASE("continuous minimizer stays in the candidate window") {
    {
        const Prevalence prev = Prevalence::from_q(0.9);
        const ContinuousOpt opt = a2_continuous_minimizer(prev);
        const CandidateWindow win = a2_candidate_window(prev);
        CHECK(opt.size >= win.base);
        CHECK(opt.size <= win.base + 1.0);
    }
    {
        const Prevalence prev = Prevalence::from_q(0.99);
        const ContinuousOpt opt = a2_continuous_minimizer(prev);
        CHECK(a2_candidate_window(prev).base == doctest::Approx(24.0654).epsilon(1e-4));
        const long fl = static_cast<long>(std::floor(opt.size));
        CHECK((fl == 24 || fl == 25));
    }
    CHECK(a2_continuous_minimizer(Prevalence::from_q(0.96)).t < 1.0);
}

TEST_CASE("continuous maximizer sits beyond the efficiency interval") {
    const Prevalence prev = Prevalence::from_q(0.9);
    const EfficiencyInterval iv = a2_efficiency_interval(prev);
    const ContinuousOpt mx = a2_continuous_maximizer(prev);
    CHECK(mx.size > iv.n_upper);
    CHECK(mx.t > 1.0);
    const double h = 1e-5 * mx.size;
    const double deriv = (a2_t(prev, mx.size + h) - a2_t(prev, mx.size - h)) / (2.0 * h);
    CHECK(std::fabs(deriv) < 1e-6);
}

TEST_CASE("a2 integer optimum") {
    // just above q5 the optimum is 5
    const OptimalConfiguration near5 = a2_integer_optimum(Prevalence::from_q(a2_q5() + 1e-6));
    CHECK(near5.integer_size == 5);

    const OptimalConfiguration p01 = a2_integer_optimum(Prevalence::from_p(0.01));
    CHECK(p01.candidates == std::vector<long>{24, 25, 26});
    long best = 2;
    const Prevalence prev = Prevalence::from_p(0.01);
    for (long n = 3; n <= 200; ++n)
        if (a2_t(prev, static_cast<double>(n)) < a2_t(prev, static_cast<double>(best)))
            best = n;
    CHECK(p01.integer_size == best);
    CHECK_FALSE(p01.individual_testing_preferred);

    // beyond the practical bound: marker set, no throw
    const OptimalConfiguration marker = a2_integer_optimum(Prevalence::from_p(0.3));
    CHECK(marker.individual_testing_preferred);
}

TEST_CASE("candidate fast path equals exhaustive scan over random q") {
    TrialRng rng(2024, 0);
    const double q5 = a2_q5();
    for (int i = 0; i < 1000; ++i) {
        const double q = q5 + (1.0 - 1e-9 - q5) * rng.uniform01();
        const Prevalence prev = Prevalence::from_q(q);
        const OptimalConfiguration fast = a2_integer_optimum(prev);
        const CandidateWindow win = a2_candidate_window(prev);
        const long cap = std::max<long>(64, static_cast<long>(std::ceil(4.0 * (win.base + 2.0))));
        long best = 2;
        for (long n = 3; n <= cap; ++n)
            if (a2_t(prev, static_cast<double>(n)) < a2_t(prev, static_cast<double>(best)))
                best = n;
        REQUIRE(fast.integer_size == best);
        REQUIRE(best > 4);
        bool in_window = false;
        for (long c : win.candidates) in_window = in_window || c == best;
        REQUIRE(in_window);
    }
}

TEST_CASE("dorfman optimum") {
    const OptimalConfiguration oc = dorfman_optimum(Prevalence::from_p(0.01));
    CHECK(oc.integer_size == 11);
    CHECK(oc.candidates == std::vector<long>{11, 12});
    // continuous optimum scales like 1/sqrt(p)
    const OptimalConfiguration tiny = dorfman_optimum(Prevalence::from_p(1e-5));
    CHECK(tiny.continuous->size * std::sqrt(1e-5) == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("sterrett optimum") {
    const OptimalConfiguration oc = sterrett_optimum(Prevalence::from_p(0.01));
    CHECK(oc.candidates == std::vector<long>{14, 15, 16});
    CHECK(oc.integer_size >= 14);
    CHECK(oc.integer_size <= 16);

    const OptimalConfiguration p02 = sterrett_optimum(Prevalence::from_p(0.02));
    CHECK(p02.integer_size >= 10);
    CHECK(p02.integer_size <= 12);

    const OptimalConfiguration asym = sterrett_optimum(Prevalence::from_p(1e-4));
    CHECK(asym.integer_t / std::sqrt(2e-4) == doctest::Approx(1.0).epsilon(0.1));

    CHECK_THROWS_AS(sterrett_optimum(Prevalence::from_p(0.39)), std::domain_error);
}

TEST_CASE("halving optimum (comparison model)") {
    const OptimalConfiguration oc = halving_optimum(Prevalence::from_q(0.99));
    CHECK(oc.candidates == std::vector<long>{34, 35});

    const OptimalConfiguration asym = halving_optimum(Prevalence::from_p(1e-4));
    const double ref = -2.0 * 1e-4 * std::log2(1e-4);
    CHECK(asym.integer_t / ref == doctest::Approx(1.0).epsilon(0.1));

    // degenerate clamp at q = 1/2
    const OptimalConfiguration clamp = halving_optimum(Prevalence::from_q(0.5));
    CHECK(clamp.integer_size >= 1);
    for (long c : clamp.candidates) CHECK(c >= 1);

    // model scan optimum never leaves the candidate pair
    for (double p : {0.001, 0.005, 0.01, 0.02, 0.05, 0.1}) {
        const Prevalence prev = Prevalence::from_p(p);
        const OptimalConfiguration o = halving_optimum(prev);
        long best = 1;
        const long cap = static_cast<long>(std::ceil(8.0 / p));
        for (long N = 2; N <= cap; ++N)
            if (halving_t_model(prev, static_cast<double>(N))
                < halving_t_model(prev, static_cast<double>(best)))
                best = N;
        CHECK(o.integer_size == best);
    }
}

TEST_CASE("log-log slopes of the optimal sizes") {
    CHECK(log_slope_check(Scheme::A2, 1e-5, 1e-3) == doctest::Approx(4.0 / 3.0).epsilon(0.04));
    CHECK(log_slope_check(Scheme::Dorfman, 1e-5, 1e-3) == doctest::Approx(0.5).epsilon(0.1));
    CHECK(log_slope_check(Scheme::Halving, 1e-5, 1e-3) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("gain crossings against the published boundaries") {
    CHECK(find_gain_crossing(Scheme::A2, Scheme::Dorfman, 0.001, 0.24)
          == doctest::Approx(0.115589).epsilon(1e-3));
    CHECK(find_gain_crossing(Scheme::A2, Scheme::Sterrett, 0.001, 0.2)
          == doctest::Approx(0.028071).epsilon(1e-3));
    CHECK(find_gain_crossing(Scheme::A2, Scheme::Halving, 0.001, 0.05)
          == doctest::Approx(0.012936).epsilon(1e-3));
    CHECK(find_gain_crossing(Scheme::A2, Scheme::Halving, 0.1, 0.2497)
          == doctest::Approx(0.220788).epsilon(1e-3));
}

TEST_CASE("largest gain advantages") {
    const GainGap gd = max_gain_gap(Scheme::A2, Scheme::Dorfman, 0.001, 0.115);
    CHECK(gd.gap_per_100 == doctest::Approx(6.2179).epsilon(1e-3));
    CHECK(gd.p_at == doctest::Approx(0.017128).epsilon(0.02));
}

TEST_CASE("maximal tested pool sizes cross once") {
    const double pc = max_pool_crossing();
    CHECK(pc == doctest::Approx(0.0231784).epsilon(1e-4));
    // below the crossing the halving pools are larger, above they are smaller
    const Prevalence lo = Prevalence::from_p(0.01), hi = Prevalence::from_p(0.1);
    CHECK(a2_continuous_minimizer(lo).size < halving_model_size(lo));
    CHECK(a2_continuous_minimizer(hi).size > halving_model_size(hi));
}

TEST_CASE("a2 total always above dorfman and sterrett totals") {
    for (double p : {0.001, 0.01, 0.05, 0.1, 0.2, 0.24}) {
        const Prevalence prev = Prevalence::from_p(p);
        const double n = a2_continuous_minimizer(prev).size;
        CHECK(n * n > continuous_optimal_size(Scheme::Dorfman, prev));
        CHECK(n * n > continuous_optimal_size(Scheme::Sterrett, prev));
    }
}

TEST_CASE("g positive below the critical boundary") {
    for (double q : {0.2, 0.5, 0.7, 0.74})
        for (double n : {2.5, 3.0, 4.45, 6.0, 20.0})
            CHECK(a2_g(Prevalence::from_q(q), n) > 0.0);
}
