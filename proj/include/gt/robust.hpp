#ifndef GT_ROBUST_HPP
#define GT_ROBUST_HPP

#include <string>
#include <vector>

#include "gt/prevalence.hpp"

namespace gt {

/// Uniform prior on the q scale.
struct PriorSpec {
    double lo = 0.750210;
    double hi = 1.0;
};

enum class RobustCriterion { Minimax, BayesSquared };

struct RobustChoice {
    long chosen_n;
    double criterion_value;
    RobustCriterion criterion;
    std::string grid; // human-readable description of the grid / quadrature
};

/// Excess tests per person of order n over the integer-optimal order at a
/// known q: L(q, n) = t(q, n) - t(q, n_opt(q)). Requires q > q5, where the
/// integer reference rule is available.
double a2_loss(const Prevalence& prev, long n);

struct MinimaxParams {
    double q_lo = -1.0;      // <= 0 means q5 + 1e-4
    double q_max = 0.9997;   // calibrated default, reported in the grid string
    double grid_step = 1e-3;
    long n_min = 5;
    long n_max = 64;
};

/// Worst-case loss of order n over an explicit q grid.
double minimax_criterion(const std::vector<double>& q_grid, long n);

/// Order minimizing the worst-case loss over the grid; ties break to the
/// smaller order.
RobustChoice minimax_choice(const std::vector<double>& q_grid, long n_min, long n_max);
RobustChoice minimax_choice(const MinimaxParams& params);

std::vector<double> minimax_default_grid(const MinimaxParams& params);

struct BayesParams {
    PriorSpec prior;
    long n_min = 5;
    long n_max = 64;
    double quad_tol = 1e-8;
};

/// Prior-expected squared loss E_pi[L(q, n)^2]. The integer rule n_opt(q) is
/// piecewise constant in q, so the quadrature splits panels wherever the
/// rule changes; the q -> 1 endpoint uses the closed limit L -> 2/n.
double bayes_criterion(const PriorSpec& prior, long n, double quad_tol = 1e-8);

RobustChoice bayes_choice(const BayesParams& params);

} // namespace gt

#endif
