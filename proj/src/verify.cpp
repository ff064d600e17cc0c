#include <sstream>
#include <string>

#include "shc/errors.hpp"
#include "shc/harness.hpp"
#include "shc/io.hpp"
#include "shc/rng.hpp"
#include "shc/sbm.hpp"

namespace shc {

namespace {

SbmParams verify_params(const VerifyConfig& config, std::size_t s) {
    SbmParams sp;
    sp.n = config.n;
    sp.k = config.k;
    sp.p = config.p;
    sp.q = config.q;
    sp.pcc = config.pcc;
    sp.seed = derive_seed(config.master_seed, 0x766572u, s);
    return sp;
}

} // namespace

std::string_view check_status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass:
        return "PASS";
    case CheckStatus::Fail:
        return "FAIL";
    case CheckStatus::InsufficientData:
        return "INSUFFICIENT DATA";
    }
    return "?";
}

SweepConfig default_t2_sweep() {
    SweepConfig c;
    c.n_values = {200, 400, 800};
    c.k_values = {2, 4, 8};
    c.instances_per_cell = 34;
    c.p_min = 0.2;
    c.q_ratio_max = 0.25;
    c.rho_mode = RhoMode::Stratified;
    c.master_seed = 11;
    c.pipelines = {Pipeline::parse("lmc+ls")};
    return c;
}

CheckResult check_community_happiness(const VerifyConfig& config) {
    const double rho = config.t1_rho_factor * xi_tilde(config.p, config.q, config.k);
    std::size_t complete = 0;
    for (std::size_t s = 0; s < config.seeds; ++s) {
        const Instance inst = generate(verify_params(config, s), rho);
        complete += happiness_report(inst, community_colouring(inst)).complete;
    }
    CheckResult r;
    r.name = "T1 community colouring happy below xi_tilde";
    const double need = config.t1_min_fraction * static_cast<double>(config.seeds);
    r.status = config.seeds > 0 && static_cast<double>(complete) >= need - 1e-9 ? CheckStatus::Pass : CheckStatus::Fail;
    r.detail = std::to_string(complete) + "/" + std::to_string(config.seeds) + " complete at rho = " +
               format_double(rho) + " (need >= " + format_double(need) + ")";
    return r;
}

CheckResult check_acd_ordering(std::span<const ExperimentRecord> records, std::string_view pipeline, double slack,
                               std::size_t min_samples) {
    double sum_low = 0, sum_mid = 0;
    std::size_t n_low = 0, n_mid = 0;
    for (const ExperimentRecord& r : records) {
        if (r.algorithm != pipeline || !r.complete || !r.bucket)
            continue;
        if (*r.bucket == Bucket::BelowMu) {
            sum_low += r.acd;
            ++n_low;
        } else if (*r.bucket == Bucket::MuToXiTilde) {
            sum_mid += r.acd;
            ++n_mid;
        }
    }
    CheckResult res;
    res.name = "T2 ACD ordering of complete " + std::string(pipeline) + " colourings";
    std::ostringstream d;
    d << "complete below_mu = " << n_low << ", mu_to_xitilde = " << n_mid;
    if (n_low < min_samples || n_mid < min_samples) {
        res.status = CheckStatus::InsufficientData;
        d << " (need " << min_samples << " per bucket)";
    } else {
        const double low = sum_low / static_cast<double>(n_low);
        const double mid = sum_mid / static_cast<double>(n_mid);
        res.status = mid >= low - slack ? CheckStatus::Pass : CheckStatus::Fail;
        d << "; mean ACD below_mu = " << format_double(low) << ", mu_to_xitilde = " << format_double(mid)
          << " (slack " << format_double(slack) << ")";
    }
    res.detail = d.str();
    return res;
}

CheckResult check_impossibility(const VerifyConfig& config) {
    const double rho = xi_tilde(config.p, config.q, config.k) + config.t3_rho_offset;
    if (rho > 1.0)
        throw ParameterError("xi_tilde + offset exceeds 1; the impossibility check needs rho <= 1");
    std::size_t instances_with_complete = 0;
    std::size_t complete_runs = 0;
    for (std::size_t s = 0; s < config.seeds; ++s) {
        const Instance inst = generate(verify_params(config, s), rho);
        bool any = happiness_report(inst, community_colouring(inst)).complete;
        complete_runs += any;
        for (const Pipeline& p : config.t3_pipelines) {
            const bool c = execute_pipeline(inst, p, config.budgets).report.complete;
            complete_runs += c;
            any = any || c;
        }
        instances_with_complete += any;
    }
    CheckResult r;
    r.name = "T3 no complete colouring above xi_tilde";
    r.status = instances_with_complete == 0 ? CheckStatus::Pass : CheckStatus::Fail;
    r.detail = std::to_string(instances_with_complete) + "/" + std::to_string(config.seeds) +
               " instances with a complete colouring at rho = " + format_double(rho) + " (" +
               std::to_string(config.t3_pipelines.size()) + " pipelines + community colouring, " +
               std::to_string(complete_runs) + " complete runs)";
    return r;
}

CheckResult check_above_threshold_incomplete(std::span<const ExperimentRecord> records) {
    std::size_t above = 0, violations = 0;
    for (const ExperimentRecord& r : records) {
        if (r.bucket != Bucket::AboveXiTilde)
            continue;
        ++above;
        violations += r.complete;
    }
    CheckResult res;
    res.name = "T4 records above xi_tilde are incomplete";
    res.status = violations == 0 ? CheckStatus::Pass : CheckStatus::Fail;
    res.detail = std::to_string(violations) + " complete among " + std::to_string(above) + " above_xitilde records (" +
                 std::to_string(records.size()) + " records total)";
    return res;
}

bool VerifyReport::passed() const {
    for (const CheckResult& c : checks)
        if (c.status == CheckStatus::Fail)
            return false;
    return true;
}

std::string VerifyReport::summary() const {
    std::string out;
    for (const CheckResult& c : checks)
        out += std::string(check_status_name(c.status)) + "  " + c.name + ": " + c.detail + "\n";
    return out;
}

VerifyReport verify_theorems(const VerifyConfig& config) {
    VerifyReport report;
    report.checks.push_back(check_community_happiness(config));

    SweepConfig sweep = config.t2_sweep;
    sweep.pipelines = {config.t2_pipeline};
    sweep.epsilon = config.epsilon;
    const std::vector<ExperimentRecord> records = run_sweep(sweep);
    report.checks.push_back(
        check_acd_ordering(records, config.t2_pipeline.name(), config.t2_slack, config.t2_min_samples));
    report.checks.push_back(check_above_threshold_incomplete(records));

    report.checks.push_back(check_impossibility(config));
    return report;
}

} // namespace shc
