#include "gt/robust.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gt/optimal.hpp"
#include "gt/schemes.hpp"

namespace gt {

namespace {

// t(q, n_opt(q)) via the candidate window; valid for q > q5
double reference_t(const Prevalence& prev) {
    const CandidateWindow win = a2_candidate_window(prev);
    double best = a2_t(prev, static_cast<double>(win.candidates[0]));
    for (long n : win.candidates)
        best = std::fmin(best, a2_t(prev, static_cast<double>(n)));
    return best;
}

} // namespace

double a2_loss(const Prevalence& prev, long n) {
    if (n < 2)
        throw std::domain_error("a2_loss: order n must be >= 2");
    if (!(prev.q > a2_q5()))
        throw std::domain_error("a2_loss: reference rule needs q > q5");
    return a2_t(prev, static_cast<double>(n)) - reference_t(prev);
}

std::vector<double> minimax_default_grid(const MinimaxParams& params) {
    const double lo = params.q_lo > 0.0 ? params.q_lo : a2_q5() + 1e-4;
    if (!(lo < params.q_max && params.q_max < 1.0))
        throw std::domain_error("minimax grid: need q_lo < q_max < 1");
    std::vector<double> grid;
    for (double q = lo; q < params.q_max - 1e-12; q += params.grid_step)
        grid.push_back(q);
    grid.push_back(params.q_max);
    return grid;
}

double minimax_criterion(const std::vector<double>& q_grid, long n) {
    double sup = -1.0;
    for (double q : q_grid)
        sup = std::fmax(sup, a2_loss(Prevalence::from_q(q), n));
    return sup;
}

RobustChoice minimax_choice(const std::vector<double>& q_grid, long n_min, long n_max) {
    if (q_grid.empty() || n_min > n_max)
        throw std::domain_error("minimax_choice: empty grid or order range");
    // evaluate the reference once per grid point, not once per (q, n)
    std::vector<double> refs(q_grid.size());
    std::vector<Prevalence> prevs;
    prevs.reserve(q_grid.size());
    for (size_t i = 0; i < q_grid.size(); ++i) {
        prevs.push_back(Prevalence::from_q(q_grid[i]));
        refs[i] = reference_t(prevs[i]);
    }
    long best_n = n_min;
    double best_sup = 0.0;
    for (long n = n_min; n <= n_max; ++n) {
        double sup = -1.0;
        for (size_t i = 0; i < q_grid.size(); ++i)
            sup = std::fmax(sup, a2_t(prevs[i], static_cast<double>(n)) - refs[i]);
        if (n == n_min || sup < best_sup) {
            best_sup = sup;
            best_n = n;
        }
    }
    std::ostringstream grid;
    grid << "q grid [" << q_grid.front() << ", " << q_grid.back() << "], "
         << q_grid.size() << " points; n in {" << n_min << ".." << n_max << "}";
    return RobustChoice{best_n, best_sup, RobustCriterion::Minimax, grid.str()};
}

RobustChoice minimax_choice(const MinimaxParams& params) {
    auto choice = minimax_choice(minimax_default_grid(params), params.n_min, params.n_max);
    std::ostringstream grid;
    grid << "q in (q5+1e-4, " << params.q_max << "] step " << params.grid_step
         << "; n in {" << params.n_min << ".." << params.n_max << "}";
    choice.grid = grid.str();
    return choice;
}

namespace {

struct LossSq {
    long n;

    double operator()(double q) const {
        const Prevalence prev = Prevalence::from_q(q);
        const double L = a2_loss(prev, n);
        return L * L;
    }
};

long rule_at(double q) {
    const Prevalence prev = Prevalence::from_q(q);
    const CandidateWindow win = a2_candidate_window(prev);
    long best = win.candidates[0];
    double best_t = a2_t(prev, static_cast<double>(best));
    for (long c : win.candidates) {
        const double t = a2_t(prev, static_cast<double>(c));
        if (t < best_t) {
            best_t = t;
            best = c;
        }
    }
    return best;
}

double simpson(double a, double fa, double m, double fm, double b, double fb) {
    (void)m;
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

// Adaptive Simpson that also splits wherever the integer rule changes, so
// the kinks of L^2 land on panel boundaries. Near q -> 1 the breakpoints
// densify beyond any useful resolution (the rule walks through every order);
// panels narrower than the isolation threshold fall back to the plain
// accuracy rule, whose Richardson correction absorbs the residual kinks.
double integrate_loss_sq(const LossSq& f, double a, double b, double eps, int depth) {
    const double m = 0.5 * (a + b);
    if (depth <= 0)
        return (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b));
    if (b - a > 3e-6) {
        const bool same_rule = rule_at(a) == rule_at(m) && rule_at(m) == rule_at(b);
        if (!same_rule)
            return integrate_loss_sq(f, a, m, 0.5 * eps, depth - 1)
                 + integrate_loss_sq(f, m, b, 0.5 * eps, depth - 1);
    }
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = simpson(a, fa, m, fm, b, fb);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, lm, flm, m, fm);
    const double right = simpson(m, fm, rm, frm, b, fb);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * eps || b - a < 1e-12)
        return left + right + delta / 15.0;
    return integrate_loss_sq(f, a, m, 0.5 * eps, depth - 1)
         + integrate_loss_sq(f, m, b, 0.5 * eps, depth - 1);
}

} // namespace

double bayes_criterion(const PriorSpec& prior, long n, double quad_tol) {
    if (!(prior.lo > a2_q5() && prior.lo < prior.hi && prior.hi <= 1.0))
        throw std::domain_error("bayes_criterion: prior support must lie in (q5, 1]");
    const double delta = 1e-7; // closed-limit continuation near q -> 1
    const double hi = std::fmin(prior.hi, 1.0 - delta);
    const LossSq f{n};
    double integral = integrate_loss_sq(f, prior.lo, hi, quad_tol * (hi - prior.lo), 48);
    if (prior.hi > hi) {
        const double tail = 2.0 / static_cast<double>(n); // L(1-, n) = 2/n
        integral += tail * tail * (prior.hi - hi);
    }
    return integral / (prior.hi - prior.lo);
}

RobustChoice bayes_choice(const BayesParams& params) {
    if (params.n_min > params.n_max)
        throw std::domain_error("bayes_choice: empty order range");
    long best_n = params.n_min;
    double best_v = 0.0;
    for (long n = params.n_min; n <= params.n_max; ++n) {
        const double v = bayes_criterion(params.prior, n, params.quad_tol);
        if (n == params.n_min || v < best_v) {
            best_v = v;
            best_n = n;
        }
    }
    std::ostringstream grid;
    grid << "uniform prior on (" << params.prior.lo << ", " << params.prior.hi
         << "), quad tol " << params.quad_tol << "; n in {" << params.n_min << ".."
         << params.n_max << "}";
    return RobustChoice{best_n, best_v, RobustCriterion::BayesSquared, grid.str()};
}

} // namespace gt
