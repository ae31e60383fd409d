#ifndef GT_NUMERICS_HPP
#define GT_NUMERICS_HPP

#include <functional>
#include <utility>

namespace gt {

/// Interval carrying its endpoint function values. For root finding the
/// endpoint values must differ in sign.
struct Bracket {
    double lo;
    double hi;
    double f_lo;
    double f_hi;
};

struct Tolerance {
    double abs_x = 1e-12;
    double abs_f = 0.0;
    int max_iter = 200;
};

using Fn1 = std::function<double(double)>;

/// Bracketed root finder: bisection refined by secant / inverse-quadratic
/// steps that never leave the bracket (Brent). Throws std::invalid_argument
/// when the bracket carries no sign change and std::runtime_error when
/// max_iter is exhausted before the width tolerance is met.
double find_root(const Fn1& f, Bracket bracket, Tolerance tol = {});

/// Convenience overload that evaluates the endpoints itself.
double find_root(const Fn1& f, double lo, double hi, Tolerance tol = {});

/// Golden-section search on [lo, hi]. The caller guarantees unimodality.
/// Returns (argmin, min value) once the interval width is <= tol.abs_x.
std::pair<double, double> minimize_unimodal(const Fn1& f, double lo, double hi,
                                            Tolerance tol = {});

/// Adaptive Simpson quadrature over [lo, hi] with absolute error target
/// tol.abs_x * (hi - lo). Throws std::runtime_error when the recursion depth
/// limit is hit (pathological integrand).
double integrate(const Fn1& f, double lo, double hi, Tolerance tol = {});

} // namespace gt

#endif
