#include "gt/numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gt {

double find_root(const Fn1& f, double lo, double hi, Tolerance tol) {
    return find_root(f, Bracket{lo, hi, f(lo), f(hi)}, tol);
}

double find_root(const Fn1& f, Bracket br, Tolerance tol) {
    double a = br.lo, b = br.hi, fa = br.f_lo, fb = br.f_hi;
    if (!(a < b))
        throw std::invalid_argument("find_root: bracket endpoints out of order");
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw std::invalid_argument("find_root: no sign change across bracket");

    // Brent: b is the best iterate, a the previous one, c the counterpoint.
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < tol.max_iter; ++iter) {
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double xm = 0.5 * (c - b);
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(b)
                          + 0.5 * tol.abs_x;
        if (std::fabs(xm) <= tol1 || fb == 0.0 || std::fabs(fb) <= tol.abs_f)
            return b;

        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            // Secant, or inverse quadratic when three points are distinct.
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double t = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * t * (t - r) - (b - a) * (r - 1.0));
                q = (t - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::fmin(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b; fa = fb;
        b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa;
            d = b - a; e = d;
        }
    }
    throw std::runtime_error("find_root: no convergence within max_iter");
}

std::pair<double, double> minimize_unimodal(const Fn1& f, double lo, double hi,
                                            Tolerance tol) {
    if (!(lo < hi))
        throw std::invalid_argument("minimize_unimodal: empty interval");
    static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;

    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int iter = 0; iter < tol.max_iter; ++iter) {
        if (b - a <= tol.abs_x) break;
        if (f1 <= f2) {
            b = x2;
            x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    if (b - a > tol.abs_x && tol.abs_x > 0.0) {
        // width still above tolerance: the iteration cap was too small
        const int needed = static_cast<int>(std::ceil(
            std::log((hi - lo) / tol.abs_x) / std::log(1.0 / invphi)));
        if (needed > tol.max_iter)
            throw std::runtime_error("minimize_unimodal: max_iter too small for tolerance");
    }
    return f1 <= f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const Fn1& f, double a, double fa, double b, double fb,
             double m, double fm, double whole, double eps, int depth) {
    if (depth <= 0)
        throw std::runtime_error("integrate: recursion depth limit reached");
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * eps)
        return left + right + delta / 15.0;
    return adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * eps, depth - 1)
         + adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * eps, depth - 1);
}

} // namespace

double integrate(const Fn1& f, double lo, double hi, Tolerance tol) {
    if (lo == hi) return 0.0;
    const double sign = lo < hi ? 1.0 : -1.0;
    const double a = std::fmin(lo, hi), b = std::fmax(lo, hi);
    const double eps = std::fmax(tol.abs_x * (b - a), 1e-300);
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = simpson(a, fa, b, fb, fm);
    return sign * adapt(f, a, fa, b, fb, m, fm, whole, eps, 60);
}

} // namespace gt
