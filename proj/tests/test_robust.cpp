#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gt/optimal.hpp"
#include "gt/robust.hpp"
#include "gt/schemes.hpp"

using namespace gt;

TEST_CASE("loss vanishes at the optimal order and nowhere below") {
    const Prevalence prev = Prevalence::from_q(0.9);
    const long n_opt = a2_integer_optimum(prev).integer_size;
    CHECK(a2_loss(prev, n_opt) == doctest::Approx(0.0).epsilon(1e-15));
    for (long n = 5; n <= 40; ++n)
        CHECK(a2_loss(prev, n) >= -1e-12);
    CHECK_THROWS_AS(a2_loss(Prevalence::from_q(0.7), 6), std::domain_error);
}

TEST_CASE("loss at q -> 1 approaches 2/n") {
    const Prevalence prev = Prevalence::from_q(1.0 - 1e-9);
    for (long n : {6L, 12L, 25L})
        CHECK(a2_loss(prev, n) == doctest::Approx(2.0 / n).epsilon(1e-4));
}

TEST_CASE("loss positivity cross-checked by exhaustive reference") {
    const Prevalence prev = Prevalence::from_q(0.8);
    double best = a2_t(prev, 2.0);
    for (long n = 3; n <= 128; ++n)
        best = std::fmin(best, a2_t(prev, static_cast<double>(n)));
    CHECK(a2_loss(prev, 5) == doctest::Approx(a2_t(prev, 5.0) - best).epsilon(1e-12));
    CHECK(a2_loss(prev, 5) >= 0.0);
}

TEST_CASE("single point grid collapses to the known-q optimum") {
    const double q = 0.93;
    const RobustChoice choice = minimax_choice({q}, 5, 64);
    CHECK(choice.chosen_n == a2_integer_optimum(Prevalence::from_q(q)).integer_size);
    CHECK(choice.criterion_value == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("minimax with a tight upper bound picks 5 in the sliver") {
    MinimaxParams params;
    params.q_max = 0.76;
    const RobustChoice choice = minimax_choice(params);
    CHECK(choice.chosen_n == 5);
}

TEST_CASE("minimax criterion is local-optimal and grid-monotone") {
    MinimaxParams params;
    params.q_max = 0.997;
    const auto grid = minimax_default_grid(params);
    const RobustChoice choice = minimax_choice(grid, params.n_min, params.n_max);
    const double at = minimax_criterion(grid, choice.chosen_n);
    CHECK(at == doctest::Approx(choice.criterion_value).epsilon(1e-9));
    CHECK(at <= minimax_criterion(grid, choice.chosen_n - 1) + 1e-15);
    CHECK(at <= minimax_criterion(grid, choice.chosen_n + 1) + 1e-15);

    // refining the grid never lowers the sup
    MinimaxParams fine = params;
    fine.grid_step = 5e-4;
    const auto fine_grid = minimax_default_grid(fine);
    for (long n : {8L, 10L, 12L})
        CHECK(minimax_criterion(fine_grid, n) >= minimax_criterion(grid, n) - 1e-12);
}

TEST_CASE("bayes squared-loss choice under the default prior") {
    BayesParams params;
    const RobustChoice choice = bayes_choice(params);
    CHECK(choice.chosen_n == 7);
    // local optimality on the integer grid
    const double at = bayes_criterion(params.prior, 7, params.quad_tol);
    CHECK(at <= bayes_criterion(params.prior, 6, params.quad_tol));
    CHECK(at <= bayes_criterion(params.prior, 8, params.quad_tol));
    CHECK(at > 0.0);
}

TEST_CASE("bayes criterion vanishes for the rule itself on a breakpoint-free piece") {
    // inside (q5, 0.755] the optimal order is constantly 5
    const PriorSpec prior{0.7505, 0.7549};
    CHECK(bayes_criterion(prior, 5) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(bayes_criterion(prior, 6) > 0.0);
}

TEST_CASE("bayes choice is stable under a tighter quadrature") {
    BayesParams coarse;
    coarse.quad_tol = 1e-8;
    BayesParams tight;
    tight.quad_tol = 1e-10;
    CHECK(bayes_choice(coarse).chosen_n == bayes_choice(tight).chosen_n);
}
