#include "gt/optimal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gt/numerics.hpp"

namespace gt {

namespace {

double candidate_base(double p) {
    return std::pow(p, -2.0 / 3.0) + 0.5 * std::pow(p, -1.0 / 3.0) + 0.2 + 3.0 * p * p;
}

} // namespace

double a2_q_n(double n) {
    if (!(n > 2.0))
        throw std::domain_error("a2_q_n: requires n > 2");
    // g(q, n) is strictly decreasing in q with g(0+) = 2/n > 0 > g(1-) = 2/n - 1
    auto g = [n](double q) { return a2_g(Prevalence::from_q(q), n); };
    return find_root(g, 1e-9, 1.0 - 1e-12, Tolerance{1e-14, 0.0, 200});
}

const CriticalPair& a2_critical_pair() {
    static const CriticalPair pair = [] {
        auto [n_star, q_star] =
            minimize_unimodal([](double n) { return a2_q_n(n); }, 2.0 + 1e-6, 32.0,
                              Tolerance{1e-10, 0.0, 400});
        // stationarity system from g = 0 and dg/dn = 0
        const double q = q_star, n = n_star;
        const double lnq = std::log(q);
        const double r1 = lnq - n * powq(q, n) * (1.0 - 0.5 * powq(q, n - 1.0)) * lnq;
        const double r2 = n * lnq + (1.0 - 0.5 * powq(q, n - 1.0)) / (1.0 - powq(q, n - 1.0));
        if (std::fabs(r1) > 1e-7 || std::fabs(r2) > 1e-7)
            throw std::runtime_error("a2_critical_pair: stationarity residuals too large");
        return CriticalPair{q_star, n_star};
    }();
    return pair;
}

double a2_q5() {
    static const double q5 = a2_q_n(5.0);
    return q5;
}

double max_practical_p() { return 1.0 - a2_q5(); }

EfficiencyInterval a2_efficiency_interval(const Prevalence& prev) {
    const CriticalPair& cp = a2_critical_pair();
    if (!(prev.q > cp.q_star))
        throw std::domain_error("a2_efficiency_interval: q <= q_star, A2 never efficient");
    auto g = [&prev](double n) { return a2_g(prev, n); };
    const double n_star = cp.n_star;
    const double lower = find_root(g, 2.0 + 1e-9, n_star, Tolerance{1e-10, 0.0, 200});
    double hi = std::fmax(2.0 * n_star, 16.0);
    while (g(hi) <= 0.0) {
        hi *= 2.0;
        if (hi > 1e12)
            throw std::runtime_error("a2_efficiency_interval: upper root not bracketed");
    }
    const double upper = find_root(g, n_star, hi, Tolerance{1e-10, 0.0, 200});
    return EfficiencyInterval{lower, upper};
}

ContinuousOpt a2_continuous_minimizer(const Prevalence& prev) {
    const EfficiencyInterval iv = a2_efficiency_interval(prev);
    auto [n_min, t_min] =
        minimize_unimodal([&prev](double n) { return a2_t(prev, n); }, iv.n_lower,
                          iv.n_upper, Tolerance{1e-10, 0.0, 400});
    return ContinuousOpt{n_min, t_min};
}

ContinuousOpt a2_continuous_maximizer(const Prevalence& prev) {
    const EfficiencyInterval iv = a2_efficiency_interval(prev);
    auto t = [&prev](double n) { return a2_t(prev, n); };
    // grow the cap until t is descending there, so the maximum is enclosed
    double cap = 2.0 * iv.n_upper + 8.0;
    const double h = 1e-4;
    while ((t(cap + h) - t(cap - h)) / (2.0 * h) >= 0.0) {
        cap *= 2.0;
        if (cap > 1e12)
            throw std::runtime_error("a2_continuous_maximizer: maximum not enclosed");
    }
    auto [n_max, neg_t] = minimize_unimodal([&t](double n) { return -t(n); },
                                            iv.n_upper, cap, Tolerance{1e-10, 0.0, 400});
    return ContinuousOpt{n_max, -neg_t};
}

CandidateWindow a2_candidate_window(const Prevalence& prev) {
    const double base = candidate_base(prev.p);
    const long fl = static_cast<long>(std::floor(base));
    return CandidateWindow{base, {fl, fl + 1, fl + 2}};
}

namespace {

// argmin of a2_t over integers 2..n_cap; ties break to the smaller order
std::pair<long, double> a2_integer_scan(const Prevalence& prev, long n_cap) {
    long best_n = 2;
    double best_t = a2_t(prev, 2.0);
    for (long n = 3; n <= n_cap; ++n) {
        const double t = a2_t(prev, static_cast<double>(n));
        if (t < best_t) {
            best_t = t;
            best_n = n;
        }
    }
    return {best_n, best_t};
}

} // namespace

OptimalConfiguration a2_integer_optimum(const Prevalence& prev) {
    OptimalConfiguration out;
    out.scheme = Scheme::A2;

    const CandidateWindow win = a2_candidate_window(prev);
    const bool above_q5 = prev.q > a2_q5();
    if (above_q5) {
        out.candidates.assign(win.candidates.begin(), win.candidates.end());
        long best_n = win.candidates[0];
        double best_t = a2_t(prev, static_cast<double>(best_n));
        for (long n : win.candidates) {
            const double t = a2_t(prev, static_cast<double>(n));
            if (t < best_t) {
                best_t = t;
                best_n = n;
            }
        }
        out.integer_size = best_n;
        out.integer_t = best_t;
    } else {
        const long n_cap = std::max<long>(
            64, static_cast<long>(std::ceil(4.0 * (win.base + 2.0))));
        auto [best_n, best_t] = a2_integer_scan(prev, n_cap);
        out.integer_size = best_n;
        out.integer_t = best_t;
    }
    out.individual_testing_preferred = out.integer_t >= 1.0;

    if (prev.q > a2_critical_pair().q_star) {
        out.efficiency = a2_efficiency_interval(prev);
        out.continuous = a2_continuous_minimizer(prev);
    }
    return out;
}

namespace {

std::pair<long, double> scan_over_table(const std::vector<double>& t) {
    size_t best = 0;
    for (size_t i = 1; i < t.size(); ++i)
        if (t[i] < t[best]) best = i;
    return {static_cast<long>(best) + 1, t[best]};
}

} // namespace

OptimalConfiguration dorfman_optimum(const Prevalence& prev) {
    OptimalConfiguration out;
    out.scheme = Scheme::Dorfman;

    // continuous optimum solves 1/N^2 = -q^N ln q; the stationarity function
    // is positive at N = 1, negative between the two critical points
    const double lnq = std::log(prev.q);
    auto slope = [&](double N) { return 1.0 / (N * N) + powq(prev.q, N) * lnq; };
    double hi = 2.0;
    while (slope(hi) > 0.0) {
        hi *= 1.7;
        if (hi > 1e9)
            throw std::runtime_error("dorfman_optimum: minimum not bracketed");
    }
    const double N_star = find_root(slope, 1.0, hi, Tolerance{1e-11, 0.0, 200});
    out.continuous = ContinuousOpt{N_star, dorfman_t(prev, N_star)};

    const long samuels = 1 + static_cast<long>(std::floor(1.0 / std::sqrt(prev.p)));
    out.candidates = {samuels, samuels + 1};
    long best = samuels;
    for (long c : out.candidates)
        if (dorfman_t(prev, static_cast<double>(c)) < dorfman_t(prev, static_cast<double>(best)))
            best = c;
    out.integer_size = best;
    out.integer_t = dorfman_t(prev, static_cast<double>(best));
    return out;
}

OptimalConfiguration sterrett_optimum(const Prevalence& prev) {
    static const double p_limit = (3.0 - std::sqrt(5.0)) / 2.0;
    if (!(prev.p > 0.0 && prev.p < p_limit))
        throw std::domain_error("sterrett_optimum: requires p in (0, (3-sqrt5)/2)");
    OptimalConfiguration out;
    out.scheme = Scheme::Sterrett;

    const double anchor = std::sqrt(2.0 / prev.p);
    auto [N_star, t_star] = minimize_unimodal(
        [&prev](double N) { return sterrett_t_closed(prev, N); }, 1.0,
        4.0 * anchor + 10.0, Tolerance{1e-10, 0.0, 400});
    out.continuous = ContinuousOpt{N_star, t_star};

    const long fl = static_cast<long>(std::floor(anchor));
    out.candidates = {fl, fl + 1, fl + 2};
    const auto table = sterrett_t_table(prev, fl + 2);
    long best = fl;
    for (long c : out.candidates)
        if (table[static_cast<size_t>(c) - 1] < table[static_cast<size_t>(best) - 1])
            best = c;
    out.integer_size = best;
    out.integer_t = table[static_cast<size_t>(best) - 1];
    return out;
}

double halving_t_model(const Prevalence& prev, double N) {
    if (!(N >= 1.0))
        throw std::domain_error("halving_t_model: pool size N must be >= 1");
    return 1.0 / N + 2.0 * prev.p * std::log2(N);
}

double halving_model_size(const Prevalence& prev) {
    return 1.0 / (2.0 * std::log2(1.0 / prev.q));
}

OptimalConfiguration halving_optimum(const Prevalence& prev) {
    OptimalConfiguration out;
    out.scheme = Scheme::Halving;

    const double N_star = halving_model_size(prev);
    out.continuous = ContinuousOpt{std::fmax(N_star, 1.0),
                                   halving_t_model(prev, std::fmax(N_star, 1.0))};

    const long fl = std::max<long>(1, static_cast<long>(std::floor(N_star)));
    out.candidates = {fl, fl + 1};
    long best = fl;
    for (long c : out.candidates)
        if (halving_t_model(prev, static_cast<double>(c))
            < halving_t_model(prev, static_cast<double>(best)))
            best = c;
    out.integer_size = best;
    out.integer_t = halving_t_model(prev, static_cast<double>(best));
    return out;
}

double continuous_optimal_size(Scheme scheme, const Prevalence& prev) {
    switch (scheme) {
        case Scheme::A2: return a2_continuous_minimizer(prev).size;
        case Scheme::Dorfman: return dorfman_optimum(prev).continuous->size;
        case Scheme::Sterrett: return sterrett_optimum(prev).continuous->size;
        case Scheme::Halving: return halving_model_size(prev);
    }
    throw std::logic_error("continuous_optimal_size: unreachable");
}

double continuous_gain(Scheme scheme, const Prevalence& prev) {
    switch (scheme) {
        case Scheme::A2: return 1.0 - a2_continuous_minimizer(prev).t;
        case Scheme::Dorfman: return 1.0 - dorfman_optimum(prev).continuous->t;
        case Scheme::Sterrett: return 1.0 - sterrett_optimum(prev).continuous->t;
        case Scheme::Halving:
            return 1.0 - halving_t_model(prev, halving_model_size(prev));
    }
    throw std::logic_error("continuous_gain: unreachable");
}

double log_slope_check(Scheme scheme, double p_lo, double p_hi, int points) {
    if (!(0.0 < p_lo && p_lo < p_hi) || points < 2)
        throw std::domain_error("log_slope_check: bad grid");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < points; ++i) {
        const double f = static_cast<double>(i) / (points - 1);
        const double p = std::exp(std::log(p_lo) + f * (std::log(p_hi) - std::log(p_lo)));
        const Prevalence prev = Prevalence::from_p(p);
        double N = continuous_optimal_size(scheme, prev);
        if (scheme == Scheme::A2) N *= N; // total cohort, not array order
        const double x = -std::log(p), y = std::log(N);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double n = points;
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double find_gain_crossing(Scheme a, Scheme b, double p_lo, double p_hi) {
    auto diff = [&](double p) {
        const Prevalence prev = Prevalence::from_p(p);
        return continuous_gain(a, prev) - continuous_gain(b, prev);
    };
    return find_root(diff, p_lo, p_hi, Tolerance{1e-10, 0.0, 200});
}

GainGap max_gain_gap(Scheme a, Scheme b, double p_lo, double p_hi) {
    auto gap = [&](double p) {
        const Prevalence prev = Prevalence::from_p(p);
        return 100.0 * (continuous_gain(a, prev) - continuous_gain(b, prev));
    };
    // coarse scan seeds the unimodal refinement
    const int m = 256;
    int best = 0;
    double best_v = gap(p_lo);
    std::vector<double> ps(m + 1);
    for (int i = 0; i <= m; ++i) {
        ps[i] = p_lo + (p_hi - p_lo) * static_cast<double>(i) / m;
        const double v = gap(ps[i]);
        if (v > best_v) {
            best_v = v;
            best = i;
        }
    }
    const double lo = ps[std::max(0, best - 1)];
    const double hi = ps[std::min(m, best + 1)];
    auto [p_at, neg] = minimize_unimodal([&gap](double p) { return -gap(p); }, lo, hi,
                                         Tolerance{1e-10, 0.0, 400});
    return GainGap{p_at, -neg};
}

double max_pool_crossing() {
    auto diff = [](double p) {
        const Prevalence prev = Prevalence::from_p(p);
        return a2_continuous_minimizer(prev).size - halving_model_size(prev);
    };
    return find_root(diff, 0.005, 0.12, Tolerance{1e-10, 0.0, 200});
}

} // namespace gt
