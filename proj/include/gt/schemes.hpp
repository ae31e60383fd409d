#ifndef GT_SCHEMES_HPP
#define GT_SCHEMES_HPP

#include <string>
#include <vector>

#include "gt/prevalence.hpp"

namespace gt {

enum class Scheme { A2, Dorfman, Sterrett, Halving };

enum class SizeScale { Integer, Continuous };

const char* scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name); // throws std::invalid_argument

/// Configuration of a scheme. For A2 the size is the array order n (cohort
/// N = n^2); for the linear schemes it is the pool size N itself.
struct SchemeSize {
    Scheme scheme;
    double size;
    SizeScale scale;

    static SchemeSize integer(Scheme s, long size);
    static SchemeSize continuous(Scheme s, double size);
};

/// One evaluated configuration: tests per person t, excess g = t - 1,
/// gain G = 1 - t, and the expected total test count over the cohort.
struct EvaluationPoint {
    Prevalence prevalence;
    SchemeSize config;
    double t;
    double g;
    double gain;
    double expected_total;
};

/// q^x for continuous exponents, evaluated as exp(x ln q).
double powq(double q, double x);

// ---- Square array -------------------------------------------------------

/// Expected tests per person for the n x n square array: 2/n + 1 - 2q^n + q^(2n-1).
/// Continuous n >= 2.
double a2_t(const Prevalence& prev, double n);

/// Excess over individual testing, g(q,n) = a2_t - 1.
double a2_g(const Prevalence& prev, double n);

/// Expected total tests 2n + n^2 (1 - 2q^n + q^(2n-1)) for integer n >= 2.
double a2_expected_total(const Prevalence& prev, long n);

// ---- Comparison schemes --------------------------------------------------

/// Dorfman: 1/N + 1 - q^N, continuous N >= 1.
double dorfman_t(const Prevalence& prev, double N);

/// Sterrett expected tests per person via the exact dynamic program under
/// the inference convention (known-positive singleton needs no test; a last
/// remaining member of a known-positive pool is inferred positive).
double sterrett_t(const Prevalence& prev, long N);

/// t values for all pool sizes 1..N_max in one O(N_max) pass.
std::vector<double> sterrett_t_table(const Prevalence& prev, long N_max);

/// Closed form of the same quantity, valid for continuous N >= 1:
/// E(N) = 2N - 1 - (N-1) q - q^2 (1 - q^(N-1)) / (1 - q).
double sterrett_t_closed(const Prevalence& prev, double N);

/// Halving expected tests per person from the recursion
/// f(1) = 1, f(N) = 1 + f(ceil(N/2)) + f(floor(N/2)) - 2 q^N.
double halving_t(const Prevalence& prev, long N);

// ---- Generic surface -----------------------------------------------------

/// Tests per person for an arbitrary configuration (dispatch on scheme).
double scheme_t(const Prevalence& prev, const SchemeSize& config);

/// Gain G = 1 - t for the configuration.
double gain(const Prevalence& prev, const SchemeSize& config);

EvaluationPoint evaluate(const Prevalence& prev, const SchemeSize& config);

} // namespace gt

#endif
