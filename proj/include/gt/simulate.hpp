#ifndef GT_SIMULATE_HPP
#define GT_SIMULATE_HPP

#include <cstdint>
#include <vector>

#include "gt/prevalence.hpp"
#include "gt/schemes.hpp"

namespace gt {

/// Counter-based generator: every trial index owns an independent SplitMix64
/// stream derived from (seed, trial), so results do not depend on execution
/// order. The mixing constants are the reference SplitMix64 ones.
class TrialRng {
public:
    TrialRng(uint64_t seed, uint64_t trial_index);

    uint64_t next();
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01();
    bool bernoulli(double p);

private:
    uint64_t state_;
};

struct Cohort {
    std::vector<uint8_t> statuses; // 1 = infected
    uint64_t seed;
    double p;
};

/// Sample the statuses of `size` individuals for one trial.
Cohort sample_cohort(const Prevalence& prev, long size, uint64_t seed,
                     uint64_t trial_index);

/// Outcome of executing a scheme on a concrete cohort: the test count and
/// the classification the procedure arrives at (1 = declared infected).
struct ExecResult {
    long tests;
    std::vector<uint8_t> classified;
};

/// Square array executor. The cohort length must be a perfect square n^2,
/// n >= 2; rows and columns are the n pools each way, and every cell whose
/// row and column pools both test positive is retested individually.
ExecResult run_a2(const std::vector<uint8_t>& statuses);

/// Dorfman executor: one pool test, then each member individually when positive.
ExecResult run_dorfman(const std::vector<uint8_t>& statuses);

/// Sterrett executor under the inference convention: sequential retests up
/// to the first positive, the tail re-pooled; a known-positive pool with one
/// untested member infers it positive without a test.
ExecResult run_sterrett(const std::vector<uint8_t>& statuses);

/// Halving executor: pool test, then recursive splitting into first-half
/// ceil(N/2) and second-half floor(N/2) parts.
ExecResult run_halving(const std::vector<uint8_t>& statuses);

ExecResult run_scheme(Scheme scheme, const std::vector<uint8_t>& statuses);

struct SimulationReport {
    Scheme scheme;
    long size;
    long trials;
    double mean_tests_per_person;
    double std_error; // sample sd / sqrt(trials); 0 when trials == 1
    uint64_t seed;
};

/// Monte Carlo estimate of tests per person. Identical arguments produce
/// bit-identical reports.
SimulationReport estimate_t(const Prevalence& prev, Scheme scheme, long size,
                            long trials, uint64_t seed);

/// Exact expectation of the executor's test count per person, by exhaustive
/// enumeration of all 2^N status patterns. Cohort sizes above 20 are refused.
double enumerate_mean_tests_per_person(Scheme scheme, const Prevalence& prev,
                                       long size);

} // namespace gt

#endif
