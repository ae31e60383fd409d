#ifndef GT_CLI_HPP
#define GT_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "gt/robust.hpp"
#include "gt/schemes.hpp"

namespace gt::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailure = 1;
inline constexpr int kUsage = 2;
inline constexpr int kIo = 3;

/// Fixed six-decimal rendering used for every numeric field; locale-free.
std::string fmt6(double v);

struct EvalOpts {
    std::string scheme;
    double p = 0.0;
    double size = 0.0;
};
int cmd_eval(const EvalOpts& opts, std::ostream& out, std::ostream& err);

struct OptimizeOpts {
    std::string scheme;
    double p = 0.0;
};
int cmd_optimize(const OptimizeOpts& opts, std::ostream& out, std::ostream& err);

struct TableOpts {
    double p_min = 0.0;
    double p_max = 0.0;
    double step = 1e-4;
    std::string out_path;
    bool force = false;
};
int cmd_table(const TableOpts& opts, std::ostream& err);

/// The table body itself, one row per p value; used by cmd_table and by the
/// determinism tests.
void write_table(std::ostream& out, double p_min, double p_max, double step);

struct CompareOpts {
    std::string out_dir;
    double p_min = 1e-3;
    double p_max = 0.2497;
    int points = 400;
};
int cmd_compare(const CompareOpts& opts, std::ostream& out, std::ostream& err);

struct RobustOpts {
    bool bayes = false;
    double q_max = 0.9997;
    double grid_step = 1e-3;
    double prior_lo = 0.750210;
    double prior_hi = 1.0;
    double quad_tol = 1e-8;
    long n_min = 5;
    long n_max = 64;
};
int cmd_robust(const RobustOpts& opts, std::ostream& out, std::ostream& err);

int cmd_verify(std::ostream& out);

struct SimulateOpts {
    std::string scheme;
    double p = 0.0;
    long size = 0;
    long trials = 100000;
    uint64_t seed = 1;
};
int cmd_simulate(const SimulateOpts& opts, std::ostream& out, std::ostream& err);

} // namespace gt::cli

#endif
