#include "gt/simulate.hpp"

#include <cmath>
#include <stdexcept>

namespace gt {

namespace {

uint64_t splitmix64(uint64_t& s) {
    s += 0x9E3779B97F4A7C15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

bool any_positive(const std::vector<uint8_t>& s, size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i)
        if (s[i]) return true;
    return false;
}

} // namespace

TrialRng::TrialRng(uint64_t seed, uint64_t trial_index) {
    // decorrelate the per-trial streams by running the trial index through
    // the mixer once before combining with the user seed
    uint64_t t = trial_index;
    state_ = seed ^ splitmix64(t);
}

uint64_t TrialRng::next() { return splitmix64(state_); }

double TrialRng::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

bool TrialRng::bernoulli(double p) { return uniform01() < p; }

Cohort sample_cohort(const Prevalence& prev, long size, uint64_t seed,
                     uint64_t trial_index) {
    if (size < 1)
        throw std::domain_error("sample_cohort: size must be >= 1");
    TrialRng rng(seed, trial_index);
    Cohort c{std::vector<uint8_t>(static_cast<size_t>(size)), seed, prev.p};
    for (auto& s : c.statuses)
        s = rng.bernoulli(prev.p) ? 1 : 0;
    return c;
}

ExecResult run_a2(const std::vector<uint8_t>& statuses) {
    const size_t N = statuses.size();
    const size_t n = static_cast<size_t>(std::lround(std::sqrt(static_cast<double>(N))));
    if (n < 2 || n * n != N)
        throw std::domain_error("run_a2: cohort length must be a perfect square, n >= 2");

    std::vector<uint8_t> row_pos(n, 0), col_pos(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (statuses[i * n + j]) {
                row_pos[i] = 1;
                col_pos[j] = 1;
            }

    long tests = static_cast<long>(2 * n); // the two pool batteries
    std::vector<uint8_t> classified(N, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (row_pos[i] && col_pos[j]) {
                ++tests; // retest the intersection
                classified[i * n + j] = statuses[i * n + j];
            }
    return ExecResult{tests, std::move(classified)};
}

ExecResult run_dorfman(const std::vector<uint8_t>& statuses) {
    const size_t N = statuses.size();
    if (N == 0)
        throw std::domain_error("run_dorfman: empty cohort");
    std::vector<uint8_t> classified(N, 0);
    if (!any_positive(statuses, 0, N))
        return ExecResult{1, std::move(classified)};
    classified = statuses;
    return ExecResult{1 + static_cast<long>(N), std::move(classified)};
}

namespace {

struct SterrettRun {
    const std::vector<uint8_t>& s;
    std::vector<uint8_t> classified;
    long tests = 0;

    // Segment [lo, hi) with unknown status: test it as a pool first.
    void unknown(size_t lo, size_t hi) {
        ++tests;
        if (!any_positive(s, lo, hi))
            return;
        if (hi - lo == 1) { // the pool was the single specimen itself
            classified[lo] = 1;
            return;
        }
        known_positive(lo, hi);
    }

    // Segment [lo, hi), size >= 2, known to hold at least one positive.
    void known_positive(size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            if (i == hi - 1) {       // everyone before was negative
                classified[i] = 1;   // inferred, no test spent
                return;
            }
            ++tests;                 // individual retest
            if (s[i]) {
                classified[i] = 1;
                unknown(i + 1, hi);  // re-pool the remaining tail
                return;
            }
        }
    }
};

} // namespace

ExecResult run_sterrett(const std::vector<uint8_t>& statuses) {
    if (statuses.empty())
        throw std::domain_error("run_sterrett: empty cohort");
    SterrettRun run{statuses, std::vector<uint8_t>(statuses.size(), 0)};
    run.unknown(0, statuses.size());
    return ExecResult{run.tests, std::move(run.classified)};
}

namespace {

void halving_rec(const std::vector<uint8_t>& s, size_t lo, size_t hi,
                 long& tests, std::vector<uint8_t>& classified) {
    ++tests;
    if (!any_positive(s, lo, hi))
        return;
    const size_t len = hi - lo;
    if (len == 1) {
        classified[lo] = 1;
        return;
    }
    const size_t first = (len + 1) / 2; // first half takes the extra member
    halving_rec(s, lo, lo + first, tests, classified);
    halving_rec(s, lo + first, hi, tests, classified);
}

} // namespace

ExecResult run_halving(const std::vector<uint8_t>& statuses) {
    if (statuses.empty())
        throw std::domain_error("run_halving: empty cohort");
    long tests = 0;
    std::vector<uint8_t> classified(statuses.size(), 0);
    halving_rec(statuses, 0, statuses.size(), tests, classified);
    return ExecResult{tests, std::move(classified)};
}

ExecResult run_scheme(Scheme scheme, const std::vector<uint8_t>& statuses) {
    switch (scheme) {
        case Scheme::A2: return run_a2(statuses);
        case Scheme::Dorfman: return run_dorfman(statuses);
        case Scheme::Sterrett: return run_sterrett(statuses);
        case Scheme::Halving: return run_halving(statuses);
    }
    throw std::logic_error("run_scheme: unreachable");
}

SimulationReport estimate_t(const Prevalence& prev, Scheme scheme, long size,
                            long trials, uint64_t seed) {
    if (trials < 1)
        throw std::domain_error("estimate_t: trials must be >= 1");
    const long people = (scheme == Scheme::A2) ? size * size : size;
    if (scheme == Scheme::A2 && size < 2)
        throw std::domain_error("estimate_t: a2 needs n >= 2");
    if (people < 1)
        throw std::domain_error("estimate_t: size must be >= 1");

    double sum = 0.0, sumsq = 0.0;
    for (long i = 0; i < trials; ++i) {
        const Cohort c = sample_cohort(prev, people, seed, static_cast<uint64_t>(i));
        const double per_person = static_cast<double>(run_scheme(scheme, c.statuses).tests)
                                / static_cast<double>(people);
        sum += per_person;
        sumsq += per_person * per_person;
    }
    const double mean = sum / static_cast<double>(trials);
    double se = 0.0;
    if (trials > 1) {
        const double var = (sumsq - sum * sum / static_cast<double>(trials))
                         / static_cast<double>(trials - 1);
        se = std::sqrt(std::fmax(var, 0.0) / static_cast<double>(trials));
    }
    return SimulationReport{scheme, size, trials, mean, se, seed};
}

double enumerate_mean_tests_per_person(Scheme scheme, const Prevalence& prev,
                                       long size) {
    const long people = (scheme == Scheme::A2) ? size * size : size;
    if (people < 1 || people > 20)
        throw std::domain_error("enumerate_mean_tests_per_person: cohort size out of range");
    std::vector<uint8_t> statuses(static_cast<size_t>(people));
    double mean = 0.0;
    for (uint64_t mask = 0; mask < (1ULL << people); ++mask) {
        int positives = 0;
        for (long i = 0; i < people; ++i) {
            statuses[static_cast<size_t>(i)] = (mask >> i) & 1ULL;
            positives += static_cast<int>((mask >> i) & 1ULL);
        }
        const double prob = std::pow(prev.p, positives)
                          * std::pow(prev.q, static_cast<double>(people - positives));
        mean += prob * static_cast<double>(run_scheme(scheme, statuses).tests);
    }
    return mean / static_cast<double>(people);
}

} // namespace gt
