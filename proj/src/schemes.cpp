#include "gt/schemes.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace gt {

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::A2: return "a2";
        case Scheme::Dorfman: return "dorfman";
        case Scheme::Sterrett: return "sterrett";
        case Scheme::Halving: return "halving";
    }
    return "?";
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "a2") return Scheme::A2;
    if (name == "dorfman") return Scheme::Dorfman;
    if (name == "sterrett") return Scheme::Sterrett;
    if (name == "halving") return Scheme::Halving;
    throw std::invalid_argument("unknown scheme: " + name);
}

namespace {

void check_size(Scheme s, double size, SizeScale scale) {
    const double lower = (s == Scheme::A2) ? 2.0 : 1.0;
    if (!(size >= lower))
        throw std::domain_error("scheme size below lower bound");
    if (scale == SizeScale::Integer && size != std::floor(size))
        throw std::domain_error("integer scale with non-integer size");
}

} // namespace

SchemeSize SchemeSize::integer(Scheme s, long size) {
    check_size(s, static_cast<double>(size), SizeScale::Integer);
    return SchemeSize{s, static_cast<double>(size), SizeScale::Integer};
}

SchemeSize SchemeSize::continuous(Scheme s, double size) {
    check_size(s, size, SizeScale::Continuous);
    return SchemeSize{s, size, SizeScale::Continuous};
}

double powq(double q, double x) {
    return std::exp(x * std::log(q));
}

double a2_t(const Prevalence& prev, double n) {
    if (!(n >= 2.0))
        throw std::domain_error("a2_t: array order n must be >= 2");
    const double q = prev.q;
    return 2.0 / n + 1.0 - 2.0 * powq(q, n) + powq(q, 2.0 * n - 1.0);
}

double a2_g(const Prevalence& prev, double n) {
    return a2_t(prev, n) - 1.0;
}

double a2_expected_total(const Prevalence& prev, long n) {
    if (n < 2)
        throw std::domain_error("a2_expected_total: integer n must be >= 2");
    const double nn = static_cast<double>(n);
    const double q = prev.q;
    return 2.0 * nn + nn * nn * (1.0 - 2.0 * powq(q, nn) + powq(q, 2.0 * nn - 1.0));
}

double dorfman_t(const Prevalence& prev, double N) {
    if (!(N >= 1.0))
        throw std::domain_error("dorfman_t: pool size N must be >= 1");
    return 1.0 / N + 1.0 - powq(prev.q, N);
}

std::vector<double> sterrett_t_table(const Prevalence& prev, long N_max) {
    if (N_max < 1)
        throw std::domain_error("sterrett_t_table: N_max must be >= 1");
    const double p = prev.p, q = prev.q;
    // A(m) = expected tests beyond the initial pool test for an unknown pool
    // of size m. Conditioning on the position of the first positive gives
    //   A(m) = B(m) + sum_{k=1}^{m-1} p q^(k-1) A(m-k),
    // and the convolution updates in O(1) via S(m+1) = q S(m) + p A(m).
    std::vector<double> t(static_cast<size_t>(N_max) + 1, 0.0);
    t[1] = 2.0 - q; // pool test plus retest of the lone member when positive
    if (N_max == 1) { t.erase(t.begin()); return t; }

    std::vector<double> A(static_cast<size_t>(N_max) + 1, 0.0);
    double S = 0.0;      // running convolution  S(m) = q S(m-1) + p A(m-1)
    double G = 0.0;      // sum_{k=1}^{m-1} (k+1) q^(k-1)
    double qpow = 1.0;   // q^(m-2) on entry to iteration m
    for (long m = 2; m <= N_max; ++m) {
        G += qpow * static_cast<double>(m); // k = m-1 term: (k+1) q^(k-1) = m q^(m-2)
        S = q * S + p * A[m - 1];
        const double B = p * G + p * (qpow * q) * static_cast<double>(m - 1);
        A[m] = B + S;
        t[m] = (1.0 + A[m]) / static_cast<double>(m);
        qpow *= q;
    }
    t.erase(t.begin());
    return t;
}

double sterrett_t(const Prevalence& prev, long N) {
    if (N < 1)
        throw std::domain_error("sterrett_t: pool size N must be >= 1");
    if (N == 1) return 2.0 - prev.q;
    return sterrett_t_table(prev, N)[static_cast<size_t>(N) - 1];
}

double sterrett_t_closed(const Prevalence& prev, double N) {
    if (!(N >= 1.0))
        throw std::domain_error("sterrett_t_closed: pool size N must be >= 1");
    const double q = prev.q;
    // q^2 (1 - q^(N-1)) / (1 - q), written via expm1 for q near 1
    const double tail = q * q * (-std::expm1((N - 1.0) * std::log(q))) / (1.0 - q);
    return (2.0 * N - 1.0 - (N - 1.0) * q - tail) / N;
}

namespace {

double halving_f(long N, double q, std::map<long, double>& memo) {
    if (N == 1) return 1.0;
    auto it = memo.find(N);
    if (it != memo.end()) return it->second;
    const double up = halving_f((N + 1) / 2, q, memo);
    const double dn = halving_f(N / 2, q, memo);
    const double val = 1.0 + up + dn - 2.0 * std::pow(q, static_cast<double>(N));
    memo.emplace(N, val);
    return val;
}

} // namespace

double halving_t(const Prevalence& prev, long N) {
    if (N < 1)
        throw std::domain_error("halving_t: pool size N must be >= 1");
    std::map<long, double> memo; // per-call, so concurrent use stays safe
    return halving_f(N, prev.q, memo) / static_cast<double>(N);
}

double scheme_t(const Prevalence& prev, const SchemeSize& config) {
    switch (config.scheme) {
        case Scheme::A2:
            return a2_t(prev, config.size);
        case Scheme::Dorfman:
            return dorfman_t(prev, config.size);
        case Scheme::Sterrett:
            if (config.scale == SizeScale::Continuous)
                return sterrett_t_closed(prev, config.size);
            return sterrett_t(prev, static_cast<long>(config.size));
        case Scheme::Halving:
            if (config.scale == SizeScale::Continuous)
                throw std::domain_error("halving_t is defined on integer pool sizes");
            return halving_t(prev, static_cast<long>(config.size));
    }
    throw std::logic_error("scheme_t: unreachable");
}

double gain(const Prevalence& prev, const SchemeSize& config) {
    return 1.0 - scheme_t(prev, config);
}

EvaluationPoint evaluate(const Prevalence& prev, const SchemeSize& config) {
    const double t = scheme_t(prev, config);
    const double cohort = (config.scheme == Scheme::A2)
                              ? config.size * config.size
                              : config.size;
    return EvaluationPoint{prev, config, t, t - 1.0, 1.0 - t, cohort * t};
}

} // namespace gt
