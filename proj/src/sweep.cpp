#include <atomic>
#include <exception>
#include <string>
#include <thread>

#include "shc/errors.hpp"
#include "shc/harness.hpp"
#include "shc/rng.hpp"
#include "shc/sbm.hpp"

namespace shc {

namespace {

struct PlannedInstance {
    std::size_t n;
    Colour k;
    std::size_t pcc;
    std::size_t rep;
    std::string id;
};

std::string make_id(std::size_t n, Colour k, std::size_t pcc, std::size_t rep) {
    return "n" + std::to_string(n) + "-k" + std::to_string(k) + "-pcc" + std::to_string(pcc) + "-r" +
           std::to_string(rep);
}

std::vector<PlannedInstance> plan(const SweepConfig& config) {
    std::vector<PlannedInstance> out;
    for (std::size_t n : config.n_values)
        for (Colour k : config.k_values)
            for (std::size_t pcc : config.pcc_values) {
                if (k > n || pcc > n / k)
                    continue;
                for (std::size_t rep = 0; rep < config.instances_per_cell; ++rep)
                    out.push_back({n, k, pcc, rep, make_id(n, k, pcc, rep)});
            }
    return out;
}

double draw_rho(const SweepConfig& config, Rng& rng, const SbmParams& sp, std::size_t rep) {
    if (config.rho_mode == RhoMode::Uniform)
        return rng.uniform_open_closed(config.rho_min, config.rho_max);
    const double lo = mu(sp.p, sp.q, sp.k);
    const double hi = xi_tilde(sp.p, sp.q, sp.k);
    switch (rep % 3) {
    case 0:
        return lo * rng.uniform01();
    case 1:
        return lo + (hi - lo) * rng.uniform01();
    default:
        return rng.uniform_open_closed(hi, 1.0);
    }
}

} // namespace

void SweepConfig::validate() const {
    if (n_values.empty() || k_values.empty() || pcc_values.empty())
        throw ParameterError("sweep needs at least one n, k and pcc value");
    for (Colour k : k_values)
        if (k < 2)
            throw ParameterError("k values must be at least 2");
    for (std::size_t pcc : pcc_values)
        if (pcc < 1)
            throw ParameterError("pcc values must be at least 1");
    if (!(p_min >= 0.0 && p_min <= p_max && p_max > 0.0 && p_max <= 1.0))
        throw ParameterError("p range must satisfy 0 <= p_min <= p_max <= 1 with p_max > 0");
    if (!(q_ratio_min >= 0.0 && q_ratio_min <= q_ratio_max && q_ratio_max > 0.0 && q_ratio_max < 1.0))
        throw ParameterError("q/p range must satisfy 0 <= min <= max < 1 with max > 0");
    if (!(rho_min >= 0.0 && rho_min <= rho_max && rho_max <= 1.0))
        throw ParameterError("rho range must satisfy 0 <= rho_min <= rho_max <= 1");
    if (instances_per_cell < 1)
        throw ParameterError("instances per cell must be at least 1");
    if (pipelines.empty())
        throw ParameterError("sweep needs at least one pipeline");
    if (threads < 1)
        throw ParameterError("threads must be at least 1");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw ParameterError("epsilon must lie in (0, 1)");
    if (plan(*this).empty())
        throw ParameterError("no (n, k, pcc) combination satisfies k <= n and pcc <= n/k");
}

std::vector<std::string> sweep_instance_ids(const SweepConfig& config) {
    std::vector<std::string> ids;
    for (auto& p : plan(config))
        ids.push_back(p.id);
    return ids;
}

SweepInstance sweep_instance(const SweepConfig& config, std::size_t n, Colour k, std::size_t pcc, std::size_t rep) {
    Rng rng(derive_seed(derive_seed(config.master_seed, n, k), pcc, rep));
    for (int attempt = 0; attempt <= config.max_param_redraws; ++attempt) {
        SbmParams sp;
        sp.n = n;
        sp.k = k;
        sp.pcc = pcc;
        sp.p = rng.uniform_open_closed(config.p_min, config.p_max);
        sp.q = sp.p * rng.uniform_open_closed(config.q_ratio_min, config.q_ratio_max);
        const double rho = draw_rho(config, rng, sp, rep);
        sp.seed = rng.next();
        try {
            return {make_id(n, k, pcc, rep), generate(sp, rho)};
        } catch (const GenerationError&) {
            // too sparse to be connected; draw new (p, q)
        }
    }
    throw GenerationError("no connected instance for " + make_id(n, k, pcc, rep) + " after " +
                          std::to_string(config.max_param_redraws + 1) + " parameter draws");
}

std::vector<ExperimentRecord> run_sweep(const SweepConfig& config, const std::set<RecordKey>& skip) {
    config.validate();
    const std::vector<PlannedInstance> planned = plan(config);
    std::vector<std::vector<ExperimentRecord>> results(planned.size());

    auto work_on = [&](std::size_t i) {
        const PlannedInstance& pi = planned[i];
        std::vector<const Pipeline*> todo;
        for (const Pipeline& p : config.pipelines)
            if (!skip.contains({pi.id, p.name()}))
                todo.push_back(&p);
        if (todo.empty())
            return;
        const SweepInstance si = sweep_instance(config, pi.n, pi.k, pi.pcc, pi.rep);
        for (const Pipeline* p : todo)
            results[i].push_back(
                run_pipeline(si.instance, si.id, *p, config.budgets, config.epsilon, config.with_timing));
    };

    if (config.threads <= 1) {
        for (std::size_t i = 0; i < planned.size(); ++i)
            work_on(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::atomic<bool> failed{false};
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < config.threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < planned.size() && !failed; i = next++) {
                    try {
                        work_on(i);
                    } catch (...) {
                        if (!failed.exchange(true))
                            failure = std::current_exception();
                    }
                }
            });
        }
        pool.clear();
        if (failure)
            std::rethrow_exception(failure);
    }

    std::vector<ExperimentRecord> out;
    for (auto& rs : results)
        for (auto& r : rs)
            out.push_back(std::move(r));
    return out;
}

} // namespace shc
