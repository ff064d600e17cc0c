// Command-line front end: gen, solve, improve, sweep, verify, oracle.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "shc/errors.hpp"
#include "shc/harness.hpp"
#include "shc/io.hpp"
#include "shc/local_search.hpp"
#include "shc/sbm.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitVerify = 2;

void emit(const std::optional<std::string>& out, const std::string& text) {
    if (out)
        shc::write_file(*out, text);
    else
        std::cout << text;
}

std::vector<std::size_t> parse_range(const std::string& spec) {
    // start:stop[:step], inclusive
    std::vector<std::size_t> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ':')) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (tok.empty() || pos != tok.size())
            throw shc::ParameterError("bad range '" + spec + "': expected start:stop[:step]");
        parts.push_back(static_cast<std::size_t>(v));
    }
    if (parts.size() < 2 || parts.size() > 3)
        throw shc::ParameterError("bad range '" + spec + "': expected start:stop[:step]");
    const std::size_t step = parts.size() == 3 ? parts[2] : 1;
    if (step == 0 || parts[0] > parts[1] || parts[0] == 0)
        throw shc::ParameterError("bad range '" + spec + "'");
    std::vector<std::size_t> out;
    for (std::size_t v = parts[0]; v <= parts[1]; v += step)
        out.push_back(v);
    return out;
}

std::vector<shc::Pipeline> parse_pipelines(const std::vector<std::string>& names) {
    std::vector<shc::Pipeline> out;
    for (const std::string& name : names)
        out.push_back(shc::Pipeline::parse(name));
    return out;
}

struct GenOpts {
    shc::SbmParams params;
    double rho = 0.5;
    std::optional<std::string> out;
};

struct SolveOpts {
    std::string in;
    std::string algo = "lmc";
    std::int64_t time_limit_ms = 60000;
    double epsilon = shc::kDefaultEpsilon;
    bool timing = false;
    std::optional<std::string> out;
    std::string id = "instance";
};

struct ImproveOpts {
    std::string in;
    std::string colouring;
    std::string algo = "ls";
    std::int64_t time_limit_ms = 60000;
    std::optional<std::string> out;
};

struct SweepOpts {
    shc::SweepConfig config;
    std::vector<std::string> algos;
    std::optional<std::string> pcc_range;
    std::int64_t time_limit_ms = 60000;
    bool rho_strata = false;
    bool resume = false;
    std::optional<std::string> out;
};

struct VerifyOpts {
    shc::VerifyConfig config;
    std::int64_t time_limit_ms = 60000;
    std::size_t sweep_per_cell = 34;
    std::size_t threads = 1;
};

struct OracleOpts {
    std::string in;
    std::optional<std::string> out;
};

int run_gen(const GenOpts& o) {
    const shc::Instance inst = shc::generate(o.params, o.rho);
    emit(o.out, shc::write_instance(inst));
    return kExitOk;
}

int run_solve(const SolveOpts& o) {
    const shc::Instance inst = shc::parse_instance(shc::read_file(o.in));
    const shc::Pipeline pipeline = shc::Pipeline::parse(o.algo);
    const shc::Budgets budgets{o.time_limit_ms, o.time_limit_ms};
    const shc::PipelineRun run = shc::execute_pipeline(inst, pipeline, budgets);
    const shc::ExperimentRecord rec = shc::make_record(inst, o.id, pipeline, run, o.epsilon, o.timing);
    if (o.out)
        shc::write_file(*o.out, shc::write_colouring(run.colouring));
    std::cout << shc::write_records(std::span(&rec, 1));
    if (run.interrupted)
        std::cerr << "warning: time limit reached, result is partial\n";
    return kExitOk;
}

int run_improve(const ImproveOpts& o) {
    const shc::Instance inst = shc::parse_instance(shc::read_file(o.in));
    const shc::Colouring sigma = shc::parse_colouring(shc::read_file(o.colouring));
    if (sigma.size() != inst.graph.num_vertices() || sigma.k() != inst.k)
        throw shc::ParameterError("colouring does not match the instance's n and k");
    if (!shc::extends_precolouring(inst, sigma))
        throw shc::ParameterError("colouring does not extend the instance's precolouring");
    const shc::Algorithm a = shc::parse_algorithm(o.algo);
    const shc::Deadline deadline = shc::Deadline::after_ms(o.time_limit_ms);
    shc::ImproveResult r;
    switch (a) {
    case shc::Algorithm::Ls:
        r = shc::ls(inst, sigma);
        break;
    case shc::Algorithm::Rls:
        r = shc::rls(inst, sigma, deadline);
        break;
    case shc::Algorithm::Els:
        r = shc::els(inst, sigma, deadline);
        break;
    default:
        throw shc::ParameterError("'" + o.algo + "' is not an improver (expected ls, rls or els)");
    }
    emit(o.out, shc::write_colouring(r.colouring));
    std::cerr << "happy " << r.before.happy_count << " -> " << r.after.happy_count << (r.reverted ? " (reverted)" : "")
              << (r.interrupted ? " (interrupted)" : "") << "\n";
    return kExitOk;
}

int run_sweep_cmd(SweepOpts& o) {
    shc::SweepConfig& c = o.config;
    if (!o.algos.empty())
        c.pipelines = parse_pipelines(o.algos);
    if (o.pcc_range)
        c.pcc_values = parse_range(*o.pcc_range);
    if (o.rho_strata)
        c.rho_mode = shc::RhoMode::Stratified;
    c.budgets = {o.time_limit_ms, o.time_limit_ms};
    c.validate();

    std::set<shc::RecordKey> skip;
    const bool appending = o.resume && o.out && std::filesystem::exists(*o.out);
    if (appending) {
        for (const shc::ExperimentRecord& r : shc::parse_records(shc::read_file(*o.out)))
            skip.emplace(r.instance_id, r.algorithm);
    }
    const std::vector<shc::ExperimentRecord> records = shc::run_sweep(c, skip);
    if (appending) {
        std::string rows;
        for (const shc::ExperimentRecord& r : records)
            rows += shc::record_row(r) + "\n";
        shc::append_file(*o.out, rows);
    } else {
        emit(o.out, shc::write_records(records));
    }
    return kExitOk;
}

int run_verify(VerifyOpts& o) {
    shc::VerifyConfig& c = o.config;
    c.budgets = {o.time_limit_ms, o.time_limit_ms};
    c.t2_sweep.instances_per_cell = o.sweep_per_cell;
    c.t2_sweep.threads = o.threads;
    c.t2_sweep.budgets = c.budgets;
    const shc::VerifyReport report = shc::verify_theorems(c);
    std::cout << report.summary();
    return report.passed() ? kExitOk : kExitVerify;
}

int run_oracle(const OracleOpts& o) {
    const shc::Instance inst = shc::parse_instance(shc::read_file(o.in));
    const shc::OracleResult r = shc::brute_force_optimum(inst);
    std::cerr << "optimum happy " << r.best_happy << " over " << r.space << " assignments\n";
    emit(o.out, shc::write_colouring(r.best));
    return kExitOk;
}

void add_sbm_flags(CLI::App* cmd, shc::SbmParams& p) {
    cmd->add_option("--n", p.n, "vertex count")->required();
    cmd->add_option("--k", p.k, "community count")->capture_default_str();
    cmd->add_option("--p", p.p, "intra-community edge probability")->required();
    cmd->add_option("--q", p.q, "inter-community edge probability")->required();
    cmd->add_option("--pcc", p.pcc, "precoloured vertices per community")->capture_default_str();
    cmd->add_option("--seed", p.seed, "generator seed")->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Soft happy colouring on stochastic block model graphs"};
    app.require_subcommand(1);

    GenOpts gen;
    gen.params.pcc = 1;
    auto* gen_cmd = app.add_subcommand("gen", "generate an SBM instance");
    add_sbm_flags(gen_cmd, gen.params);
    gen_cmd->add_option("--rho", gen.rho, "happiness proportion")->capture_default_str();
    gen_cmd->add_option("--out", gen.out, "instance file (default stdout)");

    SolveOpts solve;
    auto* solve_cmd = app.add_subcommand("solve", "run a pipeline on an instance and print its record");
    solve_cmd->add_option("--in", solve.in, "instance file")->required();
    solve_cmd->add_option("--algo", solve.algo, "pipeline, e.g. lmc or growth+rls")->capture_default_str();
    solve_cmd->add_option("--time-limit-ms", solve.time_limit_ms, "budget per phase")->capture_default_str();
    solve_cmd->add_option("--epsilon", solve.epsilon, "epsilon for xi")->capture_default_str();
    solve_cmd->add_option("--id", solve.id, "instance_id column")->capture_default_str();
    solve_cmd->add_flag("--timing", solve.timing, "fill the elapsed_ms column");
    solve_cmd->add_option("--out", solve.out, "colouring file");

    ImproveOpts improve;
    auto* improve_cmd = app.add_subcommand("improve", "run ls, rls or els on an existing colouring");
    improve_cmd->add_option("--in", improve.in, "instance file")->required();
    improve_cmd->add_option("--colouring", improve.colouring, "input colouring file")->required();
    improve_cmd->add_option("--algo", improve.algo, "ls, rls or els")->capture_default_str();
    improve_cmd->add_option("--time-limit-ms", improve.time_limit_ms, "budget")->capture_default_str();
    improve_cmd->add_option("--out", improve.out, "output colouring (default stdout)");

    SweepOpts sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "run pipelines over a grid of random instances");
    sweep_cmd->add_option("--n", sweep.config.n_values, "vertex counts")->delimiter(',');
    sweep_cmd->add_option("--k", sweep.config.k_values, "community counts")->delimiter(',');
    sweep_cmd->add_option("--pcc", sweep.config.pcc_values, "precoloured per community")->delimiter(',');
    sweep_cmd->add_option("--pcc-range", sweep.pcc_range, "pcc values start:stop[:step]")->excludes("--pcc");
    sweep_cmd->add_option("--p-min", sweep.config.p_min)->capture_default_str();
    sweep_cmd->add_option("--p-max", sweep.config.p_max)->capture_default_str();
    sweep_cmd->add_option("--q-ratio-min", sweep.config.q_ratio_min, "q/p lower bound (exclusive)")
        ->capture_default_str();
    sweep_cmd->add_option("--q-ratio-max", sweep.config.q_ratio_max, "q/p upper bound")->capture_default_str();
    sweep_cmd->add_option("--rho-min", sweep.config.rho_min)->capture_default_str();
    sweep_cmd->add_option("--rho-max", sweep.config.rho_max)->capture_default_str();
    sweep_cmd->add_flag("--rho-strata", sweep.rho_strata, "cycle rho through the three threshold buckets");
    sweep_cmd->add_option("--per-cell", sweep.config.instances_per_cell, "instances per cell")
        ->capture_default_str();
    sweep_cmd->add_option("--seed", sweep.config.master_seed, "master seed")->capture_default_str();
    sweep_cmd->add_option("--algo", sweep.algos, "pipelines (default: all)")->delimiter(',');
    sweep_cmd->add_option("--time-limit-ms", sweep.time_limit_ms, "budget per phase")->capture_default_str();
    sweep_cmd->add_option("--epsilon", sweep.config.epsilon)->capture_default_str();
    sweep_cmd->add_option("--threads", sweep.config.threads)->capture_default_str();
    sweep_cmd->add_flag("--timing", sweep.config.with_timing, "fill the elapsed_ms column");
    sweep_cmd->add_flag("--resume", sweep.resume, "append rows missing from an existing --out file");
    sweep_cmd->add_option("--out", sweep.out, "CSV file (default stdout)");

    VerifyOpts verify;
    auto* verify_cmd = app.add_subcommand("verify", "Monte Carlo checks of the threshold theorems");
    verify_cmd->add_option("--n", verify.config.n)->capture_default_str();
    verify_cmd->add_option("--k", verify.config.k)->capture_default_str();
    verify_cmd->add_option("--p", verify.config.p)->capture_default_str();
    verify_cmd->add_option("--q", verify.config.q)->capture_default_str();
    verify_cmd->add_option("--pcc", verify.config.pcc)->capture_default_str();
    verify_cmd->add_option("--seeds", verify.config.seeds, "instances per check")->capture_default_str();
    verify_cmd->add_option("--seed", verify.config.master_seed, "master seed")->capture_default_str();
    verify_cmd->add_option("--epsilon", verify.config.epsilon)->capture_default_str();
    verify_cmd->add_option("--time-limit-ms", verify.time_limit_ms, "budget per phase")->capture_default_str();
    verify_cmd->add_option("--sweep-per-cell", verify.sweep_per_cell, "replicates per cell of the ACD sweep")
        ->capture_default_str();
    verify_cmd->add_option("--threads", verify.threads, "threads for the ACD sweep")->capture_default_str();

    OracleOpts oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive optimum for a small instance");
    oracle_cmd->add_option("--in", oracle.in, "instance file")->required();
    oracle_cmd->add_option("--out", oracle.out, "optimal colouring (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*gen_cmd)
            return run_gen(gen);
        if (*solve_cmd)
            return run_solve(solve);
        if (*improve_cmd)
            return run_improve(improve);
        if (*sweep_cmd)
            return run_sweep_cmd(sweep);
        if (*verify_cmd)
            return run_verify(verify);
        if (*oracle_cmd)
            return run_oracle(oracle);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
