// Command line front end: evaluation, optimal configurations, the comparison
// table and plot data, robust pool-size selection, the verification suite,
// and Monte Carlo simulation.

#include <iostream>

#include <CLI11.hpp>

#include "gt/cli.hpp"

int main(int argc, char** argv) {
    using namespace gt::cli;

    CLI::App app{"Group testing design toolkit (square array and comparison schemes)"};
    app.require_subcommand(1);

    EvalOpts eval_opts;
    auto* eval = app.add_subcommand("eval", "Evaluate t, g, gain at a configuration");
    eval->add_option("--scheme", eval_opts.scheme, "a2|dorfman|sterrett|halving")->required();
    eval->add_option("--p", eval_opts.p, "prevalence in (0,1)")->required();
    eval->add_option("--size", eval_opts.size, "array order (a2) or pool size")->required();

    OptimizeOpts opt_opts;
    auto* optimize = app.add_subcommand("optimize", "Optimal configuration for a scheme");
    optimize->add_option("--scheme", opt_opts.scheme, "a2|dorfman|sterrett|halving")->required();
    optimize->add_option("--p", opt_opts.p, "prevalence in (0,1)")->required();

    TableOpts table_opts;
    auto* table = app.add_subcommand("table", "CSV table of optima across a p range");
    table->add_option("--p-min", table_opts.p_min)->required();
    table->add_option("--p-max", table_opts.p_max)->required();
    table->add_option("--step", table_opts.step, "grid step (default 1e-4)");
    table->add_option("--out", table_opts.out_path, "output CSV path")->required();
    table->add_flag("--force", table_opts.force, "overwrite an existing file");

    CompareOpts cmp_opts;
    auto* compare = app.add_subcommand("compare", "Plot-data series and comparison summary");
    compare->add_option("--out-dir", cmp_opts.out_dir, "output directory")->required();
    compare->add_option("--p-min", cmp_opts.p_min);
    compare->add_option("--p-max", cmp_opts.p_max);
    compare->add_option("--points", cmp_opts.points);

    RobustOpts rob_opts;
    auto* robust = app.add_subcommand("robust", "Pool size under unknown prevalence");
    robust->require_subcommand(1);
    auto* minimax = robust->add_subcommand("minimax", "worst-case excess over a q grid");
    minimax->add_option("--q-max", rob_opts.q_max, "grid upper endpoint (reported)");
    minimax->add_option("--grid-step", rob_opts.grid_step);
    minimax->add_option("--n-min", rob_opts.n_min);
    minimax->add_option("--n-max", rob_opts.n_max);
    auto* bayes = robust->add_subcommand("bayes", "prior-expected squared excess");
    bayes->add_option("--prior-lo", rob_opts.prior_lo);
    bayes->add_option("--prior-hi", rob_opts.prior_hi);
    bayes->add_option("--quad-tol", rob_opts.quad_tol);
    bayes->add_option("--n-min", rob_opts.n_min);
    bayes->add_option("--n-max", rob_opts.n_max);

    auto* verify = app.add_subcommand("verify", "Numerical verification suite");

    SimulateOpts sim_opts;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of t");
    simulate->add_option("--scheme", sim_opts.scheme)->required();
    simulate->add_option("--p", sim_opts.p)->required();
    simulate->add_option("--size", sim_opts.size)->required();
    simulate->add_option("--trials", sim_opts.trials);
    simulate->add_option("--seed", sim_opts.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (eval->parsed()) return cmd_eval(eval_opts, std::cout, std::cerr);
    if (optimize->parsed()) return cmd_optimize(opt_opts, std::cout, std::cerr);
    if (table->parsed()) return cmd_table(table_opts, std::cerr);
    if (compare->parsed()) return cmd_compare(cmp_opts, std::cout, std::cerr);
    if (robust->parsed()) {
        rob_opts.bayes = bayes->parsed();
        return cmd_robust(rob_opts, std::cout, std::cerr);
    }
    if (verify->parsed()) return cmd_verify(std::cout);
    if (simulate->parsed()) return cmd_simulate(sim_opts, std::cout, std::cerr);
    return kUsage;
}
