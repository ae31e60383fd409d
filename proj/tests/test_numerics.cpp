#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gt/numerics.hpp"
#include "gt/optimal.hpp"
#include "gt/prevalence.hpp"
#include "gt/schemes.hpp"
#include "gt/verify.hpp"

using namespace gt;

TEST_CASE("find_root linear and quadratic") {
    CHECK(find_root([](double x) { return x - 0.5; }, 0.0, 1.0)
          == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(find_root([](double x) { return x * x - 2.0; }, 1.0, 2.0)
          == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("find_root locates q5 from the scheme excess") {
    auto g5 = [](double q) { return a2_g(Prevalence::from_q(q), 5.0); };
    CHECK(find_root(g5, 0.5, 0.99) == doctest::Approx(0.750209961).epsilon(1e-8));
}

TEST_CASE("find_root rejects a bracket without sign change") {
    CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("find_root stays within the bracket") {
    const double lo = 0.1, hi = 2.0;
    const double x = find_root([](double x) { return std::cos(x); }, lo, hi);
    CHECK(x >= lo);
    CHECK(x <= hi);
    CHECK(x == doctest::Approx(M_PI / 2).epsilon(1e-10));
}

TEST_CASE("minimize_unimodal quadratic and x ln x") {
    auto [x1, f1] = minimize_unimodal([](double x) { return (x - 3.0) * (x - 3.0); },
                                      0.0, 10.0, Tolerance{1e-10, 0, 400});
    CHECK(x1 == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(f1 == doctest::Approx(0.0).epsilon(1e-12));

    auto [x2, f2] = minimize_unimodal([](double x) { return x * std::log(x); },
                                      0.1, 0.9, Tolerance{1e-10, 0, 400});
    CHECK(x2 == doctest::Approx(1.0 / M_E).epsilon(1e-8));
    CHECK(f2 == doctest::Approx(-1.0 / M_E).epsilon(1e-10));
}

TEST_CASE("minimize_unimodal finds the array minimizer inside the window") {
    const Prevalence prev = Prevalence::from_q(0.9);
    const EfficiencyInterval iv = a2_efficiency_interval(prev);
    auto [n_min, t_min] = minimize_unimodal(
        [&prev](double n) { return a2_t(prev, n); }, iv.n_lower, iv.n_upper,
        Tolerance{1e-10, 0, 400});
    const double lo = window_order(prev, 0.0);
    const double hi = window_order(prev, 1.0);
    CHECK(n_min >= lo);
    CHECK(n_min <= hi);
    CHECK(t_min < 1.0);
}

TEST_CASE("minimize_unimodal evaluation budget") {
    int evals = 0;
    const double lo = 0.0, hi = 10.0, tol = 1e-8;
    minimize_unimodal(
        [&evals](double x) {
            ++evals;
            return (x - 3.0) * (x - 3.0);
        },
        lo, hi, Tolerance{tol, 0, 400});
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const int budget =
        2 + static_cast<int>(std::ceil(std::log((hi - lo) / tol) / std::log(phi))) + 2;
    CHECK(evals <= budget);
}

TEST_CASE("integrate polynomial exactness and normalization") {
    CHECK(integrate([](double x) { return x; }, 0.0, 1.0)
          == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(integrate([](double x) { return x * x * x; }, 0.0, 1.0)
          == doctest::Approx(0.25).epsilon(1e-10));
    // uniform prior normalization over the practical region
    const double lo = 0.750210, hi = 1.0;
    CHECK(integrate([](double) { return 1.0; }, lo, hi) / (hi - lo)
          == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("integrate is exact for cubics on odd subintervals") {
    auto f = [](double x) { return 2.0 * x * x * x - x * x + 4.0 * x - 7.0; };
    auto exact = [](double x) { return 0.5 * x * x * x * x - x * x * x / 3.0 + 2.0 * x * x - 7.0 * x; };
    CHECK(integrate(f, -1.3, 2.7) == doctest::Approx(exact(2.7) - exact(-1.3)).epsilon(1e-12));
}
