#include "gt/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "gt/optimal.hpp"
#include "gt/simulate.hpp"
#include "gt/verify.hpp"

namespace gt::cli {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

namespace {

Prevalence parse_p(double p) { return Prevalence::from_p(p); }

} // namespace

int cmd_eval(const EvalOpts& opts, std::ostream& out, std::ostream& err) {
    try {
        const Scheme scheme = scheme_from_name(opts.scheme);
        const Prevalence prev = parse_p(opts.p);
        const bool integral = opts.size == std::floor(opts.size);
        const SchemeSize config =
            integral ? SchemeSize::integer(scheme, static_cast<long>(opts.size))
                     : SchemeSize::continuous(scheme, opts.size);
        const EvaluationPoint pt = evaluate(prev, config);
        out << "scheme=" << scheme_name(scheme) << "\n"
            << "p=" << fmt6(prev.p) << "\n"
            << "size=" << (integral ? std::to_string(static_cast<long>(opts.size))
                                    : fmt6(opts.size)) << "\n"
            << "t=" << fmt6(pt.t) << "\n"
            << "g=" << fmt6(pt.g) << "\n"
            << "gain=" << fmt6(pt.gain) << "\n"
            << "expected_total=" << fmt6(pt.expected_total) << "\n";
        if (scheme == Scheme::A2 && pt.t >= 1.0)
            out << "warning=A2 is inefficient here (t >= 1); individual testing preferred\n";
        return kOk;
    } catch (const std::exception& e) {
        err << "eval: " << e.what() << "\n";
        return kUsage;
    }
}

namespace {

void print_configuration(std::ostream& out, const OptimalConfiguration& oc) {
    out << "scheme=" << scheme_name(oc.scheme) << "\n";
    out << "candidates=";
    for (size_t i = 0; i < oc.candidates.size(); ++i)
        out << (i ? "," : "") << oc.candidates[i];
    out << "\n";
    const char* size_key = oc.scheme == Scheme::A2 ? "n_opt" : "N_opt";
    out << size_key << "=" << oc.integer_size << "\n"
        << "t_opt=" << fmt6(oc.integer_t) << "\n"
        << "gain_opt=" << fmt6(1.0 - oc.integer_t) << "\n";
    if (oc.continuous) {
        out << "continuous_size=" << fmt6(oc.continuous->size) << "\n"
            << "continuous_t=" << fmt6(oc.continuous->t) << "\n";
    }
    if (oc.efficiency) {
        out << "n_lower=" << fmt6(oc.efficiency->n_lower) << "\n"
            << "n_upper=" << fmt6(oc.efficiency->n_upper) << "\n";
    }
    if (oc.individual_testing_preferred)
        out << "individual_testing=preferred\n";
    out << "ties=smaller size preferred\n";
}

} // namespace

int cmd_optimize(const OptimizeOpts& opts, std::ostream& out, std::ostream& err) {
    try {
        const Scheme scheme = scheme_from_name(opts.scheme);
        const Prevalence prev = parse_p(opts.p);
        OptimalConfiguration oc;
        switch (scheme) {
            case Scheme::A2: oc = a2_integer_optimum(prev); break;
            case Scheme::Dorfman: oc = dorfman_optimum(prev); break;
            case Scheme::Sterrett: oc = sterrett_optimum(prev); break;
            case Scheme::Halving: oc = halving_optimum(prev); break;
        }
        out << "p=" << fmt6(prev.p) << "\n";
        print_configuration(out, oc);
        if (scheme == Scheme::A2 && oc.continuous) {
            const double t_star = oc.continuous->size - a2_candidate_window(prev).base;
            out << "t_star=" << fmt6(t_star) << "\n";
        }
        return kOk;
    } catch (const std::exception& e) {
        err << "optimize: " << e.what() << "\n";
        return kUsage;
    }
}

void write_table(std::ostream& out, double p_min, double p_max, double step) {
    out << "p,n_opt_a2,t_a2,gain_a2,N_opt_d,t_d,gain_d,"
           "N_opt_s,t_s,gain_s,N_opt_h,t_h,gain_h\n";
    // generate on an integer counter so accumulated rounding cannot skew rows
    const long rows = static_cast<long>(std::floor((p_max - p_min) / step + 1e-9)) + 1;
    for (long i = 0; i < rows; ++i) {
        const double p = p_min + step * static_cast<double>(i);
        if (p > p_max + 1e-12) break;
        const Prevalence prev = Prevalence::from_p(p);
        const auto a2 = a2_integer_optimum(prev);
        const auto d = dorfman_optimum(prev);
        const auto s = sterrett_optimum(prev);
        const auto h = halving_optimum(prev);
        out << fmt6(p) << ','
            << a2.integer_size << ',' << fmt6(a2.integer_t) << ','
            << fmt6(1.0 - a2.integer_t) << ','
            << d.integer_size << ',' << fmt6(d.integer_t) << ','
            << fmt6(1.0 - d.integer_t) << ','
            << s.integer_size << ',' << fmt6(s.integer_t) << ','
            << fmt6(1.0 - s.integer_t) << ','
            << h.integer_size << ',' << fmt6(h.integer_t) << ','
            << fmt6(1.0 - h.integer_t) << '\n';
    }
}

int cmd_table(const TableOpts& opts, std::ostream& err) {
    if (!(opts.p_min > 0.0) || !(opts.p_min < opts.p_max)
        || opts.p_max > max_practical_p() + 1e-9 || !(opts.step > 0.0)) {
        err << "table: need 0 < p-min < p-max <= " << fmt6(max_practical_p())
            << " and step > 0\n";
        return kUsage;
    }
    if (opts.out_path.empty()) {
        err << "table: --out is required\n";
        return kUsage;
    }
    if (!opts.force && std::filesystem::exists(opts.out_path)) {
        err << "table: " << opts.out_path << " exists; pass --force to overwrite\n";
        return kIo;
    }
    std::ofstream file(opts.out_path, std::ios::binary); // LF endings everywhere
    if (!file) {
        err << "table: cannot open " << opts.out_path << "\n";
        return kIo;
    }
    write_table(file, opts.p_min, opts.p_max, opts.step);
    file.close();
    return file ? kOk : kIo;
}

namespace {

void write_series(std::ostream& out, double p_min, double p_max, int points) {
    out << "p,order_a2,N_total_a2,N_d,N_s,N_h,gain_a2,gain_d,gain_s,gain_h\n";
    for (int i = 0; i < points; ++i) {
        const double p = p_min + (p_max - p_min) * static_cast<double>(i) / (points - 1);
        const Prevalence prev = Prevalence::from_p(p);
        const double n_a2 = a2_continuous_minimizer(prev).size;
        const double Nd = continuous_optimal_size(Scheme::Dorfman, prev);
        const double Ns = continuous_optimal_size(Scheme::Sterrett, prev);
        const double Nh = continuous_optimal_size(Scheme::Halving, prev);
        out << fmt6(p) << ',' << fmt6(n_a2) << ',' << fmt6(n_a2 * n_a2) << ','
            << fmt6(Nd) << ',' << fmt6(Ns) << ',' << fmt6(Nh) << ','
            << fmt6(continuous_gain(Scheme::A2, prev)) << ','
            << fmt6(continuous_gain(Scheme::Dorfman, prev)) << ','
            << fmt6(continuous_gain(Scheme::Sterrett, prev)) << ','
            << fmt6(continuous_gain(Scheme::Halving, prev)) << '\n';
    }
}

void write_loglog(std::ostream& out, double p_min, double p_max, int points) {
    out << "minus_ln_p,ln_N_a2,ln_N_d,ln_N_s,ln_N_h\n";
    for (int i = 0; i < points; ++i) {
        const double f = static_cast<double>(i) / (points - 1);
        const double p = std::exp(std::log(p_min) + f * (std::log(p_max) - std::log(p_min)));
        const Prevalence prev = Prevalence::from_p(p);
        const double n_a2 = a2_continuous_minimizer(prev).size;
        out << fmt6(-std::log(p)) << ','
            << fmt6(std::log(n_a2 * n_a2)) << ','
            << fmt6(std::log(continuous_optimal_size(Scheme::Dorfman, prev))) << ','
            << fmt6(std::log(continuous_optimal_size(Scheme::Sterrett, prev))) << ','
            << fmt6(std::log(continuous_optimal_size(Scheme::Halving, prev))) << '\n';
    }
}

void write_max_pool(std::ostream& out, double p_min, double p_max, int points) {
    // maximal tested pool size: the row/column order for A2, N* otherwise
    out << "p,pool_a2,pool_d,pool_s,pool_h\n";
    for (int i = 0; i < points; ++i) {
        const double p = p_min + (p_max - p_min) * static_cast<double>(i) / (points - 1);
        const Prevalence prev = Prevalence::from_p(p);
        out << fmt6(p) << ','
            << fmt6(a2_continuous_minimizer(prev).size) << ','
            << fmt6(continuous_optimal_size(Scheme::Dorfman, prev)) << ','
            << fmt6(continuous_optimal_size(Scheme::Sterrett, prev)) << ','
            << fmt6(continuous_optimal_size(Scheme::Halving, prev)) << '\n';
    }
}

} // namespace

int cmd_compare(const CompareOpts& opts, std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    try {
        fs::create_directories(opts.out_dir);
        const fs::path dir(opts.out_dir);

        std::ofstream sizes(dir / "optimal_sizes.csv", std::ios::binary);
        std::ofstream loglog(dir / "optimal_sizes_loglog.csv", std::ios::binary);
        std::ofstream pools(dir / "max_pool_sizes.csv", std::ios::binary);
        std::ofstream summary(dir / "summary.txt", std::ios::binary);
        if (!sizes || !loglog || !pools || !summary) {
            err << "compare: cannot open output files under " << opts.out_dir << "\n";
            return kIo;
        }
        write_series(sizes, opts.p_min, opts.p_max, opts.points);
        write_loglog(loglog, 1e-5, 1e-3, opts.points);
        write_max_pool(pools, opts.p_min, opts.p_max, opts.points);

        summary << "crossing_a2_dorfman="
                << fmt6(find_gain_crossing(Scheme::A2, Scheme::Dorfman, 0.001, 0.24)) << "\n";
        summary << "crossing_a2_sterrett="
                << fmt6(find_gain_crossing(Scheme::A2, Scheme::Sterrett, 0.001, 0.2)) << "\n";
        summary << "crossing_a2_halving_lower="
                << fmt6(find_gain_crossing(Scheme::A2, Scheme::Halving, 0.001, 0.05)) << "\n";
        summary << "crossing_a2_halving_upper="
                << fmt6(find_gain_crossing(Scheme::A2, Scheme::Halving, 0.1, 0.2497)) << "\n";
        const GainGap gd = max_gain_gap(Scheme::A2, Scheme::Dorfman, 0.001, 0.115589);
        const GainGap gs = max_gain_gap(Scheme::A2, Scheme::Sterrett, 0.0005, 0.028071);
        const GainGap gh = max_gain_gap(Scheme::A2, Scheme::Halving, 0.012936, 0.220788);
        summary << "max_gap_a2_dorfman=" << fmt6(gd.gap_per_100)
                << "\nmax_gap_a2_dorfman_at=" << fmt6(gd.p_at) << "\n";
        summary << "max_gap_a2_sterrett=" << fmt6(gs.gap_per_100)
                << "\nmax_gap_a2_sterrett_at=" << fmt6(gs.p_at) << "\n";
        summary << "max_gap_a2_halving=" << fmt6(gh.gap_per_100)
                << "\nmax_gap_a2_halving_at=" << fmt6(gh.p_at) << "\n";
        summary << "max_pool_crossing=" << fmt6(max_pool_crossing()) << "\n";
        summary << "log_slope_a2=" << fmt6(log_slope_check(Scheme::A2, 1e-5, 1e-3)) << "\n";
        summary << "log_slope_dorfman="
                << fmt6(log_slope_check(Scheme::Dorfman, 1e-5, 1e-3)) << "\n";
        summary << "log_slope_sterrett="
                << fmt6(log_slope_check(Scheme::Sterrett, 1e-5, 1e-3)) << "\n";
        summary << "log_slope_halving="
                << fmt6(log_slope_check(Scheme::Halving, 1e-5, 1e-3)) << "\n";

        out << "wrote optimal_sizes.csv, optimal_sizes_loglog.csv, max_pool_sizes.csv, "
               "summary.txt under " << opts.out_dir << "\n";
        return kOk;
    } catch (const fs::filesystem_error& e) {
        err << "compare: " << e.what() << "\n";
        return kIo;
    } catch (const std::exception& e) {
        err << "compare: " << e.what() << "\n";
        return kUsage;
    }
}

int cmd_robust(const RobustOpts& opts, std::ostream& out, std::ostream& err) {
    try {
        if (opts.bayes) {
            BayesParams params;
            params.prior = PriorSpec{opts.prior_lo, opts.prior_hi};
            params.n_min = opts.n_min;
            params.n_max = opts.n_max;
            params.quad_tol = opts.quad_tol;
            const RobustChoice choice = bayes_choice(params);
            out << "criterion=bayes_squared_loss\n"
                << "prior_lo=" << fmt6(opts.prior_lo) << "\n"
                << "prior_hi=" << fmt6(opts.prior_hi) << "\n"
                << "quad_tol=" << opts.quad_tol << "\n"
                << "n=" << choice.chosen_n << "\n"
                << "N=" << choice.chosen_n * choice.chosen_n << "\n"
                << "criterion_value=" << choice.criterion_value << "\n"
                << "grid=" << choice.grid << "\n";
        } else {
            MinimaxParams params;
            params.q_max = opts.q_max;
            params.grid_step = opts.grid_step;
            params.n_min = opts.n_min;
            params.n_max = opts.n_max;
            const RobustChoice choice = minimax_choice(params);
            out << "criterion=minimax\n"
                << "q_max=" << opts.q_max << "\n"
                << "grid_step=" << opts.grid_step << "\n"
                << "n=" << choice.chosen_n << "\n"
                << "N=" << choice.chosen_n * choice.chosen_n << "\n"
                << "criterion_value=" << choice.criterion_value << "\n"
                << "grid=" << choice.grid << "\n";
        }
        return kOk;
    } catch (const std::exception& e) {
        err << "robust: " << e.what() << "\n";
        return kUsage;
    }
}

int cmd_verify(std::ostream& out) {
    bool all_pass = true;
    auto emit = [&](const VerificationReport& r) {
        out << "check=" << r.check << " grid=\"" << r.grid << "\" worst_residual="
            << r.worst_residual << " pass=" << (r.pass ? "true" : "false") << "\n";
        all_pass = all_pass && r.pass;
    };

    for (const auto& r : run_all_checks())
        emit(r);

    // published reference values
    {
        const CriticalPair& cp = a2_critical_pair();
        const double resid = std::fmax(std::fabs(cp.q_star - 0.748416),
                                       std::fabs(cp.n_star - 4.453524));
        emit(VerificationReport{"critical_pair_reference", "(q*, n*)", resid,
                                resid < 1e-5});
        const double r5 = std::fabs(a2_q5() - 0.750209961);
        emit(VerificationReport{"q5_reference", "g(q,5)=0", r5, r5 < 1e-8});
    }

    // enumeration equivalence of the executors against the cost functions
    for (Scheme s : {Scheme::Dorfman, Scheme::Sterrett, Scheme::Halving}) {
        double worst = 0.0;
        for (long N : {1L, 2L, 3L, 5L, 8L, 10L}) {
            for (double q : {0.75, 0.9, 0.97}) {
                const Prevalence prev = Prevalence::from_q(q);
                const double exact = enumerate_mean_tests_per_person(s, prev, N);
                const double analytic =
                    scheme_t(prev, SchemeSize::integer(s, N));
                worst = std::fmax(worst, std::fabs(exact - analytic));
            }
        }
        emit(VerificationReport{std::string("enumeration_") + scheme_name(s),
                                "N in {1,2,3,5,8,10}, q in {0.75,0.9,0.97}", worst,
                                worst < 1e-12});
    }
    {
        double worst = 0.0;
        for (long n : {2L, 3L}) {
            for (double q : {0.75, 0.9, 0.97}) {
                const Prevalence prev = Prevalence::from_q(q);
                const double exact = enumerate_mean_tests_per_person(Scheme::A2, prev, n);
                const double analytic = a2_t(prev, static_cast<double>(n));
                worst = std::fmax(worst, std::fabs(exact - analytic));
            }
        }
        emit(VerificationReport{"enumeration_a2", "n in {2,3}, q in {0.75,0.9,0.97}",
                                worst, worst < 1e-12});
    }

    out << (all_pass ? "verify: all checks passed\n" : "verify: FAILURES present\n");
    return all_pass ? kOk : kVerifyFailure;
}

int cmd_simulate(const SimulateOpts& opts, std::ostream& out, std::ostream& err) {
    try {
        const Scheme scheme = scheme_from_name(opts.scheme);
        const Prevalence prev = parse_p(opts.p);
        const SimulationReport rep =
            estimate_t(prev, scheme, opts.size, opts.trials, opts.seed);
        const double analytic = scheme_t(prev, SchemeSize::integer(scheme, opts.size));
        out << "scheme=" << scheme_name(scheme) << "\n"
            << "p=" << fmt6(prev.p) << "\n"
            << "size=" << opts.size << "\n"
            << "trials=" << rep.trials << "\n"
            << "seed=" << rep.seed << "\n"
            << "mean_tests_per_person=" << fmt6(rep.mean_tests_per_person) << "\n"
            << "std_error=" << fmt6(rep.std_error) << "\n";
        if (rep.trials == 1)
            out << "std_error_undefined=true\n";
        out << "analytic_t=" << fmt6(analytic) << "\n";
        if (rep.std_error > 0.0)
            out << "z=" << fmt6((rep.mean_tests_per_person - analytic) / rep.std_error)
                << "\n";
        return kOk;
    } catch (const std::exception& e) {
        err << "simulate: " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace gt::cli
