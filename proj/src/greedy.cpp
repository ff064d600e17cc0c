#include "shc/heuristics.hpp"
#include "shc/metrics.hpp"

namespace shc {

Colouring greedy(const Instance& inst) {
    const Colouring base = precolouring(inst);
    std::vector<Vertex> free;
    for (Vertex v = 0; v < base.size(); ++v)
        if (!base.coloured(v))
            free.push_back(v);
    if (free.empty())
        return base;

    Colouring best = base;
    std::size_t best_happy = 0;
    bool have_best = false;
    Colouring trial = base;
    for (Colour c = 1; c <= inst.k; ++c) {
        for (Vertex v : free)
            trial.set(v, c);
        const std::size_t happy = happy_count(inst.graph, trial, inst.rho);
        if (!have_best || happy > best_happy) {
            best = trial;
            best_happy = happy;
            have_best = true;
        }
    }
    return best;
}

} // namespace shc
