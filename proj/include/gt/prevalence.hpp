#ifndef GT_PREVALENCE_HPP
#define GT_PREVALENCE_HPP

#include <stdexcept>

namespace gt {

/// Infection prevalence p and its complement q = 1 - p, kept as a pair so
/// that whichever scale a computation prefers is available without repeated
/// subtraction. Construction validates 0 < p < 1.
struct Prevalence {
    double p;
    double q;

    static Prevalence from_p(double p) {
        if (!(p > 0.0 && p < 1.0))
            throw std::domain_error("prevalence p must lie in (0,1)");
        return Prevalence{p, 1.0 - p};
    }

    static Prevalence from_q(double q) {
        if (!(q > 0.0 && q < 1.0))
            throw std::domain_error("prevalence complement q must lie in (0,1)");
        return Prevalence{1.0 - q, q};
    }
};

} // namespace gt

#endif
