#include <array>
#include <string>

#include "shc/errors.hpp"
#include "shc/harness.hpp"
#include "shc/heuristics.hpp"
#include "shc/local_search.hpp"
#include "shc/rng.hpp"

namespace shc {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 8> kNames{{
    {Algorithm::Greedy, "greedy"},
    {Algorithm::Growth, "growth"},
    {Algorithm::Ngc, "ngc"},
    {Algorithm::Lmc, "lmc"},
    {Algorithm::Random, "random"},
    {Algorithm::Ls, "ls"},
    {Algorithm::Rls, "rls"},
    {Algorithm::Els, "els"},
}};

int weight(Algorithm a) {
    switch (a) {
    case Algorithm::Ls:
        return 1;
    case Algorithm::Rls:
        return 2;
    case Algorithm::Els:
        return 3;
    default:
        return 0;
    }
}

ImproveResult improve(Algorithm a, const Instance& inst, const Colouring& sigma, Deadline deadline) {
    switch (a) {
    case Algorithm::Ls:
        return ls(inst, sigma);
    case Algorithm::Rls:
        return rls(inst, sigma, deadline);
    case Algorithm::Els:
        return els(inst, sigma, deadline);
    default:
        throw ParameterError("not an improver: " + std::string(algorithm_name(a)));
    }
}

} // namespace

std::string_view algorithm_name(Algorithm a) {
    for (auto [id, name] : kNames)
        if (id == a)
            return name;
    return "?";
}

Algorithm parse_algorithm(std::string_view name) {
    for (auto [id, n] : kNames)
        if (n == name)
            return id;
    throw ParameterError("unknown algorithm id '" + std::string(name) + "'");
}

bool is_improver(Algorithm a) { return weight(a) > 0; }

std::string Pipeline::name() const {
    std::string s(algorithm_name(constructive));
    if (improver) {
        s += '+';
        s += algorithm_name(*improver);
    }
    return s;
}

Pipeline Pipeline::parse(std::string_view spec) {
    Pipeline p;
    const std::size_t plus = spec.find('+');
    p.constructive = parse_algorithm(spec.substr(0, plus));
    if (plus == std::string_view::npos)
        return p;
    const std::string_view rest = spec.substr(plus + 1);
    if (rest.find('+') != std::string_view::npos)
        throw ParameterError("pipeline '" + std::string(spec) + "' has more than two stages");
    const Algorithm imp = parse_algorithm(rest);
    if (!is_improver(imp))
        throw ParameterError("'" + std::string(rest) + "' is not an improver (ls, rls, els)");
    if (weight(imp) <= weight(p.constructive))
        throw ParameterError("illegal stacking '" + std::string(spec) +
                             "': an improver may not follow the same or a heavier improver");
    p.improver = imp;
    return p;
}

std::vector<Pipeline> default_pipelines() {
    std::vector<Pipeline> out;
    for (const char* s : {"greedy", "growth", "ngc", "lmc", "random", "ls", "rls", "els", "lmc+ls", "lmc+rls",
                          "lmc+els", "growth+ls", "growth+rls", "growth+els", "random+ls", "random+rls", "random+els",
                          "ls+rls", "ls+els", "rls+els"})
        out.push_back(Pipeline::parse(s));
    return out;
}

std::uint64_t algorithm_seed(const Instance& inst) { return derive_seed(instance_seed(inst), 0x616c676fu); }

PipelineRun execute_pipeline(const Instance& inst, const Pipeline& pipeline, const Budgets& budgets) {
    PipelineRun run;
    const std::uint64_t seed = algorithm_seed(inst);

    auto start = Clock::now();
    const Deadline first = Deadline::after_ms(budgets.construct_ms);
    switch (pipeline.constructive) {
    case Algorithm::Greedy:
        run.colouring = greedy(inst);
        break;
    case Algorithm::Growth: {
        Construction c = growth(inst, first, seed);
        run.colouring = std::move(c.colouring);
        run.interrupted = c.interrupted;
        break;
    }
    case Algorithm::Ngc: {
        Construction c = ngc(inst, first);
        run.colouring = std::move(c.colouring);
        run.interrupted = c.interrupted;
        break;
    }
    case Algorithm::Lmc:
        run.colouring = lmc(inst, seed);
        break;
    case Algorithm::Random:
        run.colouring = random_completion(inst, seed);
        break;
    case Algorithm::Ls:
    case Algorithm::Rls:
    case Algorithm::Els: {
        ImproveResult r = improve(pipeline.constructive, inst, precolouring(inst), first);
        run.colouring = std::move(r.colouring);
        run.reverted = r.reverted;
        run.interrupted = r.interrupted;
        break;
    }
    }
    run.construct_ms = elapsed_ms(start);

    if (pipeline.improver) {
        start = Clock::now();
        ImproveResult r = improve(*pipeline.improver, inst, run.colouring, Deadline::after_ms(budgets.improve_ms));
        run.colouring = std::move(r.colouring);
        run.reverted = r.reverted;
        run.interrupted = run.interrupted || r.interrupted;
        run.improve_ms = elapsed_ms(start);
    }
    run.report = happiness_report(inst, run.colouring);
    return run;
}

ExperimentRecord make_record(const Instance& inst, std::string_view instance_id, const Pipeline& pipeline,
                             const PipelineRun& run, double epsilon, bool with_timing) {
    ExperimentRecord r;
    r.instance_id = std::string(instance_id);
    r.n = inst.num_vertices();
    r.k = inst.k;
    r.rho = inst.rho;
    r.params = inst.params;
    if (inst.params) {
        r.thresholds = thresholds(inst.params->n, inst.params->k, inst.params->p, inst.params->q, epsilon);
        r.bucket = rho_bucket(inst.rho, *r.thresholds);
    }
    r.algorithm = pipeline.name();
    r.alpha = run.report.alpha;
    r.acd = run.report.acd;
    r.happy_count = run.report.happy_count;
    r.complete = run.report.complete;
    r.reverted = run.reverted;
    if (with_timing)
        r.elapsed_ms = run.construct_ms + run.improve_ms;
    return r;
}

ExperimentRecord run_pipeline(const Instance& inst, std::string_view instance_id, const Pipeline& pipeline,
                              const Budgets& budgets, double epsilon, bool with_timing) {
    return make_record(inst, instance_id, pipeline, execute_pipeline(inst, pipeline, budgets), epsilon, with_timing);
}

} // namespace shc
