#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shc/colouring.hpp"
#include "shc/instance.hpp"
#include "shc/metrics.hpp"
#include "shc/record.hpp"

namespace shc {

// ---------------------------------------------------------------------------
// Exhaustive oracle

inline constexpr std::uint64_t kOracleSpaceLimit = 10'000'000;

struct OracleResult {
    std::size_t best_happy = 0;
    /// Lexicographically smallest maximiser over free vertices in ascending order.
    Colouring best;
    std::uint64_t space = 0;
};

/// Enumerates every colouring of the free vertices. Throws ParameterError
/// when k^(free vertices) exceeds kOracleSpaceLimit.
OracleResult brute_force_optimum(const Instance& inst);

// ---------------------------------------------------------------------------
// Pipelines

enum class Algorithm { Greedy, Growth, Ngc, Lmc, Random, Ls, Rls, Els };

std::string_view algorithm_name(Algorithm a);
Algorithm parse_algorithm(std::string_view name);
bool is_improver(Algorithm a);

/// A constructive phase optionally followed by an improver, written `lmc+ls`.
/// An improver may only follow a constructive or a strictly lighter improver
/// (ls < rls < els).
struct Pipeline {
    Algorithm constructive = Algorithm::Lmc;
    std::optional<Algorithm> improver;

    std::string name() const;
    static Pipeline parse(std::string_view spec);

    friend bool operator==(const Pipeline&, const Pipeline&) = default;
};

/// The base heuristics plus the improvement combinations of the benchmark tables.
std::vector<Pipeline> default_pipelines();

struct Budgets {
    std::int64_t construct_ms = 60'000;
    std::int64_t improve_ms = 60'000;
};

struct PipelineRun {
    Colouring colouring;
    HappinessReport report;
    std::optional<bool> reverted;
    bool interrupted = false;
    double construct_ms = 0.0;
    double improve_ms = 0.0;
};

/// Seed handed to the randomised algorithms; shared by every pipeline on an
/// instance so `lmc` and `lmc+ls` start from the same colouring.
std::uint64_t algorithm_seed(const Instance& inst);

PipelineRun execute_pipeline(const Instance& inst, const Pipeline& pipeline, const Budgets& budgets);

ExperimentRecord make_record(const Instance& inst, std::string_view instance_id, const Pipeline& pipeline,
                             const PipelineRun& run, double epsilon, bool with_timing);

ExperimentRecord run_pipeline(const Instance& inst, std::string_view instance_id, const Pipeline& pipeline,
                              const Budgets& budgets, double epsilon = kDefaultEpsilon, bool with_timing = false);

// ---------------------------------------------------------------------------
// Sweeps

enum class RhoMode {
    /// rho ~ (rho_min, rho_max].
    Uniform,
    /// Replicate r draws rho uniformly from bucket r mod 3 of its own graph.
    Stratified,
};

struct SweepConfig {
    std::vector<std::size_t> n_values{200, 400, 800};
    std::vector<Colour> k_values{2, 4, 8};
    /// Values above floor(n/k) are skipped for that (n, k).
    std::vector<std::size_t> pcc_values{1};
    /// p ~ (p_min, p_max]; q = p * u with u ~ (q_ratio_min, q_ratio_max].
    double p_min = 0.0;
    double p_max = 1.0;
    double q_ratio_min = 0.0;
    double q_ratio_max = 0.5;
    double rho_min = 0.0;
    double rho_max = 1.0;
    RhoMode rho_mode = RhoMode::Uniform;
    std::size_t instances_per_cell = 5;
    std::uint64_t master_seed = 1;
    Budgets budgets;
    double epsilon = kDefaultEpsilon;
    std::vector<Pipeline> pipelines = default_pipelines();
    std::size_t threads = 1;
    /// Fresh (p, q) draws allowed when a draw is too sparse to give a connected graph.
    int max_param_redraws = 20;
    bool with_timing = false;

    /// Throws ParameterError on out-of-domain ranges or empty lists.
    void validate() const;
};

struct SweepInstance {
    std::string id;
    Instance instance;
};

/// Enumerates the planned instance ids in output order, without generating graphs.
std::vector<std::string> sweep_instance_ids(const SweepConfig& config);

/// Draws replicate `rep` of (n, k, pcc) deterministically from the master seed.
SweepInstance sweep_instance(const SweepConfig& config, std::size_t n, Colour k, std::size_t pcc, std::size_t rep);

using RecordKey = std::pair<std::string, std::string>; // (instance_id, algorithm)

/// Runs every configured pipeline on every planned instance. Rows whose key is
/// in `skip` are not recomputed. Output order is cell, replicate, pipeline,
/// independent of `threads`.
std::vector<ExperimentRecord> run_sweep(const SweepConfig& config, const std::set<RecordKey>& skip = {});

// ---------------------------------------------------------------------------
// Threshold checks

enum class CheckStatus { Pass, Fail, InsufficientData };

std::string_view check_status_name(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Fail;
    std::string detail;
};

/// The default ACD sweep: 9 cells x 34 replicates, stratified rho, p in (0.2, 1],
/// q/p in (0, 0.25]. Denser, better separated graphs than the full ranges, so
/// both lower buckets collect enough complete colourings.
SweepConfig default_t2_sweep();

struct VerifyConfig {
    std::size_t n = 1500;
    Colour k = 4;
    double p = 0.3;
    double q = 0.05;
    std::size_t pcc = 1;
    std::size_t seeds = 100;
    std::uint64_t master_seed = 7;
    double epsilon = kDefaultEpsilon;
    Budgets budgets;

    /// rho used by the community-colouring check, as a multiple of xi_tilde.
    double t1_rho_factor = 0.8;
    /// Fraction of seeds that must give a complete community colouring.
    double t1_min_fraction = 0.9;

    /// rho = xi_tilde + offset for the impossibility check.
    double t3_rho_offset = 0.15;
    std::vector<Pipeline> t3_pipelines = default_pipelines();

    /// ACD-ordering check, computed on sweep records.
    SweepConfig t2_sweep = default_t2_sweep();
    Pipeline t2_pipeline{Algorithm::Lmc, Algorithm::Ls};
    double t2_slack = 0.02;
    std::size_t t2_min_samples = 20;
};

/// Community colouring complete rho-happy at rho = factor * xi_tilde for at least t1_min_fraction of the seeds.
CheckResult check_community_happiness(const VerifyConfig& config);

/// Among complete outputs of `pipeline`, mean ACD over [mu, xi_tilde] is at least the
/// mean over [0, mu) minus slack.
CheckResult check_acd_ordering(std::span<const ExperimentRecord> records, std::string_view pipeline, double slack,
                               std::size_t min_samples);

/// No complete rho-happy colouring at rho = xi_tilde + offset, from the community
/// colouring or any pipeline.
CheckResult check_impossibility(const VerifyConfig& config);

/// Every record above xi_tilde is incomplete.
CheckResult check_above_threshold_incomplete(std::span<const ExperimentRecord> records);

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool passed() const;
    std::string summary() const;
};

VerifyReport verify_theorems(const VerifyConfig& config);

} // namespace shc
