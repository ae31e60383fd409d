#include "gt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gt/numerics.hpp"
#include "gt/optimal.hpp"
#include "gt/schemes.hpp"

namespace gt {

double appendix_h(double x, double c) {
    return -(x - c * x * x) * std::log(x);
}

double window_order(const Prevalence& prev, double t) {
    const double p = prev.p;
    return std::pow(p, -2.0 / 3.0) + 0.5 * std::pow(p, -1.0 / 3.0) + 0.2 + 3.0 * p * p + t;
}

double window_stationarity(double t, const Prevalence& prev) {
    const double n = window_order(prev, t);
    const double q = prev.q;
    return -n * n * powq(q, n) * std::log(q) * (1.0 - powq(q, n - 1.0)) - 1.0;
}

double solve_x0(const Prevalence& prev) {
    if (!(prev.q > a2_critical_pair().q_star))
        throw std::domain_error("solve_x0: requires q > q_star");
    const double c = 1.0 / (2.0 * prev.q);
    // -ln x - (1-cx)/(1-2cx): +inf at 0+, -inf at q- (where 2cx -> 1)
    auto f = [c](double x) { return -std::log(x) - (1.0 - c * x) / (1.0 - 2.0 * c * x); };
    return find_root(f, 1e-14, prev.q * (1.0 - 1e-10), Tolerance{1e-14, 0.0, 300});
}

ProofProbe make_probe(const Prevalence& prev, double n, double t) {
    const double c = 1.0 / (2.0 * prev.q);
    const double x = powq(prev.q, n);
    return ProofProbe{c, x, solve_x0(prev), appendix_h(x, c),
                      window_stationarity(t, prev)};
}

namespace {

std::string span_desc(const std::vector<double>& v, const char* name) {
    std::ostringstream os;
    os << name << "[" << v.front() << ".." << v.back() << "] (" << v.size() << " pts)";
    return os.str();
}

} // namespace

VerificationReport check_g_decreasing_in_q(const std::vector<double>& n_grid,
                                           const std::vector<double>& q_grid) {
    double worst = -1e300;
    bool pass = true;
    for (double n : n_grid) {
        for (double q : q_grid) {
            const double h = 1e-6 * std::fmax(q, 1e-3);
            if (q - h <= 0.0 || q + h >= 1.0) continue;
            const double dg = (a2_g(Prevalence::from_q(q + h), n)
                             - a2_g(Prevalence::from_q(q - h), n)) / (2.0 * h);
            worst = std::fmax(worst, dg);
            if (dg >= 0.0) pass = false;
        }
        // endpoint limits g(0+, n) = 2/n and g(1-, n) = 2/n - 1
        const double at0 = a2_g(Prevalence::from_q(1e-9), n) - 2.0 / n;
        const double at1 = a2_g(Prevalence::from_q(1.0 - 1e-9), n) - (2.0 / n - 1.0);
        if (std::fabs(at0) > 1e-6 || std::fabs(at1) > 1e-6) pass = false;
    }
    return VerificationReport{"g_decreasing_in_q",
                              span_desc(n_grid, "n") + ", " + span_desc(q_grid, "q"),
                              worst, pass};
}

VerificationReport check_x0_properties(const std::vector<double>& q_grid) {
    double worst = 0.0;
    bool pass = true;
    double prev_x0 = -1.0;
    // walk c upward (q downward) to confirm x0(c) decreasing
    std::vector<double> qs = q_grid;
    std::sort(qs.begin(), qs.end(), std::greater<double>());
    for (double q : qs) {
        const Prevalence prev = Prevalence::from_q(q);
        if (!(q > a2_critical_pair().q_star)) continue;
        const double c = 1.0 / (2.0 * q);
        const double x0 = solve_x0(prev);
        const double resid = std::fabs(-std::log(x0) - (1.0 - c * x0) / (1.0 - 2.0 * c * x0));
        worst = std::fmax(worst, resid);
        if (resid > 1e-9 || !(x0 > 0.0 && x0 < q) || !(1.0 - 2.0 * c * x0 > 0.0))
            pass = false;
        // h rises into the maximum and falls away from it
        const double step = 1e-6 * x0;
        if (appendix_h(x0 - step, c) >= appendix_h(x0, c) ||
            appendix_h(x0 + step, c) >= appendix_h(x0, c))
            pass = false;
        // with two roots of g available, h at the peak clears -ln q
        if (!(appendix_h(x0, c) > -std::log(q))) pass = false;
        if (prev_x0 >= 0.0 && !(x0 < prev_x0)) pass = false; // c grew, x0 must shrink
        prev_x0 = x0;
    }
    return VerificationReport{"x0_properties", span_desc(q_grid, "q"), worst, pass};
}

VerificationReport check_step6_a(const std::vector<double>& q_grid) {
    double worst = -1e300;
    bool pass = true;
    for (double q : q_grid) {
        const Prevalence prev = Prevalence::from_q(q);
        const double m = std::fmax(a2_g(prev, window_order(prev, 0.0)),
                                   a2_g(prev, window_order(prev, 1.0)));
        worst = std::fmax(worst, m);
        if (!(m < 0.0)) pass = false;
    }
    return VerificationReport{"step6_window_efficient", span_desc(q_grid, "q"), worst, pass};
}

VerificationReport check_step6_b(const std::vector<double>& q_grid) {
    double worst = -1e300;
    bool pass = true;
    for (double q : q_grid) {
        const Prevalence prev = Prevalence::from_q(q);
        const double lo = window_stationarity(0.0, prev);
        const double hi = window_stationarity(1.0, prev);
        worst = std::fmax(worst, std::fmax(lo, -hi));
        if (!(lo < 0.0 && hi > 0.0)) pass = false;
    }
    return VerificationReport{"step6_stationarity_bracket", span_desc(q_grid, "q"),
                              worst, pass};
}

VerificationReport check_half_bound(const std::vector<double>& n_grid) {
    double worst = 1e300; // smallest margin of g(1/2, n) > 0
    bool pass = true;
    const Prevalence half = Prevalence::from_q(0.5);
    for (double n : n_grid) {
        if (!(n > 2.0 && n <= 200.0)) continue;
        const double margin = a2_g(half, n);
        worst = std::fmin(worst, margin);
        if (!(margin > 0.0)) pass = false;
        // the equivalent integer-side inequality 2^n > n (1 - 2^-n)
        const double lhs = std::exp2(n);
        if (!(lhs > n * (1.0 - std::exp2(-n)))) pass = false;
    }
    return VerificationReport{"half_bound", span_desc(n_grid, "n"), worst, pass};
}

VerificationReport check_two_critical_points(const Prevalence& prev) {
    const EfficiencyInterval iv = a2_efficiency_interval(prev);
    const double n_cap = 8.0 * iv.n_upper + 32.0;
    auto dt = [&prev](double n) {
        const double h = 1e-6 * std::fmax(1.0, n);
        return (a2_t(prev, n + h) - a2_t(prev, n - h)) / (2.0 * h);
    };
    int sign_changes = 0;
    std::vector<double> locations;
    const int steps = 4000;
    double prev_v = dt(2.0 + 1e-3);
    for (int i = 1; i <= steps; ++i) {
        const double n = 2.0 + 1e-3 + (n_cap - 2.0 - 1e-3) * i / steps;
        const double v = dt(n);
        if ((v > 0.0) != (prev_v > 0.0)) {
            ++sign_changes;
            locations.push_back(n);
        }
        prev_v = v;
    }
    bool pass = sign_changes == 2;
    if (pass) {
        const double minimum = locations[0], maximum = locations[1];
        if (!(iv.n_lower < minimum && minimum < iv.n_upper)) pass = false;
        if (!(maximum > iv.n_upper)) pass = false;
    }
    std::ostringstream grid;
    grid << "q=" << prev.q << ", n in (2, " << n_cap << "], " << steps << " steps";
    return VerificationReport{"two_critical_points", grid.str(),
                              static_cast<double>(sign_changes - 2), pass};
}

std::vector<double> default_q_grid() {
    std::vector<double> grid;
    for (double q = 0.755; q <= 0.999 + 1e-12; q += 1e-3)
        grid.push_back(q);
    // refinement where the window margins are thinnest
    for (double q = 0.755; q <= 0.765 + 1e-12; q += 1e-5)
        grid.push_back(q);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

std::vector<double> default_n_grid() {
    std::vector<double> grid{2.01, 2.1, 2.5};
    for (int n = 3; n <= 200; ++n)
        grid.push_back(static_cast<double>(n));
    return grid;
}

std::vector<VerificationReport> run_all_checks() {
    const auto qs = default_q_grid();
    const auto ns = default_n_grid();
    const std::vector<double> q_broad{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99};
    const std::vector<double> q_small{0.80, 0.86, 0.90, 0.95, 0.99};
    std::vector<VerificationReport> reports;
    reports.push_back(check_g_decreasing_in_q({3, 4, 5, 8, 16, 32}, q_broad));
    reports.push_back(check_x0_properties(q_small));
    reports.push_back(check_step6_a(qs));
    reports.push_back(check_step6_b(qs));
    reports.push_back(check_half_bound(ns));
    for (double q : {0.86, 0.90, 0.95})
        reports.push_back(check_two_critical_points(Prevalence::from_q(q)));
    return reports;
}

} // namespace gt
