#ifndef GT_VERIFY_HPP
#define GT_VERIFY_HPP

#include <string>
#include <vector>

#include "gt/prevalence.hpp"

namespace gt {

/// Quantities from the change-of-variable argument behind the efficiency
/// analysis: c = 1/(2q), x = q^n, the maximizer x0 of h, and the two helper
/// functions h(x) and h(t, q).
struct ProofProbe {
    double c;
    double x;
    double x0;
    double h_of_x;
    double h_tq;
};

struct VerificationReport {
    std::string check;
    std::string grid;
    double worst_residual; // signed margin; negative where the check demands it
    bool pass;
};

/// h(x) = -(x - c x^2) ln x.
double appendix_h(double x, double c);

/// n(q, t) = p^(-2/3) + p^(-1/3)/2 + 0.2 + 3 p^2 + t.
double window_order(const Prevalence& prev, double t);

/// h(t, q) = -n(q,t)^2 q^n(q,t) ln q (1 - q^(n(q,t)-1)) - 1, the stationarity
/// margin of the candidate window.
double window_stationarity(double t, const Prevalence& prev);

/// Unique root of -ln x = (1 - c x)/(1 - 2 c x) on (0, q), with c = 1/(2q);
/// the maximizer of h. Requires q > q_star.
double solve_x0(const Prevalence& prev);

ProofProbe make_probe(const Prevalence& prev, double n, double t);

/// dg/dq < 0 across the grid, plus the 2/n and 2/n - 1 endpoint limits.
VerificationReport check_g_decreasing_in_q(const std::vector<double>& n_grid,
                                           const std::vector<double>& q_grid);

/// x0 well defined (residual, unimodality of h around it), x0(c) decreasing,
/// and h(x0) > -ln q across the grid.
VerificationReport check_x0_properties(const std::vector<double>& q_grid);

/// max(g(q, n(q,0)), g(q, n(q,1))) < 0 across the grid.
VerificationReport check_step6_a(const std::vector<double>& q_grid);

/// h(0, q) < 0 and h(1, q) > 0 across the grid.
VerificationReport check_step6_b(const std::vector<double>& q_grid);

/// g(1/2, n) > 0, equivalently 2^n > n (1 - 2^-n), across the order grid.
VerificationReport check_half_bound(const std::vector<double>& n_grid);

/// dt/dn changes sign exactly twice on (2, n_cap): a minimum inside the
/// efficiency interval and a maximum beyond it.
VerificationReport check_two_critical_points(const Prevalence& prev);

/// The default grids: q step 1e-3 on [0.755, 0.999] refined at 1e-5 on
/// [0.755, 0.765]; orders {2.01, 2.1, 2.5, 3..200}.
std::vector<double> default_q_grid();
std::vector<double> default_n_grid();

/// Every check over the default grids, in a fixed order.
std::vector<VerificationReport> run_all_checks();

} // namespace gt

#endif
