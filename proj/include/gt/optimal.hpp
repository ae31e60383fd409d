#ifndef GT_OPTIMAL_HPP
#define GT_OPTIMAL_HPP

#include <array>
#include <optional>
#include <vector>

#include "gt/prevalence.hpp"
#include "gt/schemes.hpp"

namespace gt {

/// Boundary of the region where the square array can be efficient: below
/// q_star no array order beats individual testing, and n_star is the order
/// at which the boundary is attained.
struct CriticalPair {
    double q_star;
    double n_star;
};

/// Orders where t(q, n) < 1 for a fixed q > q_star.
struct EfficiencyInterval {
    double n_lower;
    double n_upper;
};

/// The three consecutive integers guaranteed to contain the rounded A2
/// optimum, anchored at base = p^(-2/3) + p^(-1/3)/2 + 0.2 + 3 p^2.
struct CandidateWindow {
    double base;
    std::array<long, 3> candidates;
};

struct ContinuousOpt {
    double size; // array order n for A2, pool size N otherwise
    double t;
};

struct OptimalConfiguration {
    Scheme scheme;
    std::optional<ContinuousOpt> continuous;
    long integer_size;
    double integer_t;
    std::vector<long> candidates;
    std::optional<EfficiencyInterval> efficiency; // A2 only
    bool individual_testing_preferred = false;
};

// ---- Square array --------------------------------------------------------

/// The unique q in (0,1) with g(q, n) = 0 for a fixed order n > 2.
double a2_q_n(double n);

/// Minimum of the q_n curve; satisfies the stationarity system to < 1e-7.
/// Computed once and cached.
const CriticalPair& a2_critical_pair();

/// Root of g(q, 5) = 0, the lower edge of the practically useful region.
double a2_q5();

/// The two roots of n -> g(q, n) on (2, inf). Requires q > q_star.
EfficiencyInterval a2_efficiency_interval(const Prevalence& prev);

/// Global continuous minimizer of n -> t(q, n). Requires q > q_star.
ContinuousOpt a2_continuous_minimizer(const Prevalence& prev);

/// Global continuous maximizer, located beyond n_upper. Requires q > q_star.
ContinuousOpt a2_continuous_maximizer(const Prevalence& prev);

CandidateWindow a2_candidate_window(const Prevalence& prev);

/// Integer optimum. For q > q5 the candidate window is evaluated (and the
/// exhaustive scan agrees, see tests); otherwise an exhaustive scan runs and
/// the individual-testing marker is set whenever min t >= 1.
OptimalConfiguration a2_integer_optimum(const Prevalence& prev);

// ---- Comparison schemes --------------------------------------------------

OptimalConfiguration dorfman_optimum(const Prevalence& prev);

/// Requires p in (0, (3 - sqrt 5)/2), where the candidate-set result holds.
OptimalConfiguration sterrett_optimum(const Prevalence& prev);

OptimalConfiguration halving_optimum(const Prevalence& prev);

/// First-order per-person cost of the halving scheme: the initial pool test
/// amortized plus two tests per splitting level for each infected member,
///   t(q, N) = 1/N + 2 p log2 N.
/// This is the model behind the published halving comparisons; the exact
/// recursion in schemes.hpp prefers power-of-two cohorts and has no
/// continuous extension.
double halving_t_model(const Prevalence& prev, double N);

/// Continuous optimal halving pool size, 1/(2 log2(1/q)).
double halving_model_size(const Prevalence& prev);

// ---- Cross-scheme comparison ---------------------------------------------

/// Continuous optimal size on the scheme's own scale (array order for A2).
double continuous_optimal_size(Scheme scheme, const Prevalence& prev);

/// Gain 1 - t at the continuous optimum.
double continuous_gain(Scheme scheme, const Prevalence& prev);

/// Least-squares slope of ln N*(p) against -ln p over a log-spaced grid.
/// For A2 the total cohort N* = n_min^2 is used.
double log_slope_check(Scheme scheme, double p_lo, double p_hi, int points = 24);

/// Root of p -> G_a(p) - G_b(p) on [p_lo, p_hi] (continuous-optimum gains).
double find_gain_crossing(Scheme a, Scheme b, double p_lo, double p_hi);

struct GainGap {
    double p_at;
    double gap_per_100;
};

/// Maximum of 100 (G_a - G_b) over [p_lo, p_hi], located by a coarse scan
/// followed by golden-section refinement.
GainGap max_gain_gap(Scheme a, Scheme b, double p_lo, double p_hi);

/// Prevalence where the maximal tested pool sizes cross: n_min(p) for A2
/// against the halving pool size N*(p).
double max_pool_crossing();

/// Upper end of the range where applying A2 is reasonable, 1 - q5.
double max_practical_p();

} // namespace gt

#endif
