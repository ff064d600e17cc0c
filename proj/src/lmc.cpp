#include <cstdint>

#include "shc/heuristics.hpp"
#include "shc/rng.hpp"

namespace shc {

Colouring lmc(const Instance& inst, std::uint64_t seed) {
    const Graph& g = inst.graph;
    Colouring c = precolouring(inst);
    Rng rng(derive_seed(seed, 0x6c6d63u));

    // Uncoloured vertices with a coloured neighbour, with swap-remove positions.
    std::vector<Vertex> frontier;
    std::vector<std::size_t> position(g.num_vertices(), SIZE_MAX);
    auto enter = [&](Vertex u) {
        if (!c.coloured(u) && position[u] == SIZE_MAX) {
            position[u] = frontier.size();
            frontier.push_back(u);
        }
    };
    for (auto [v, colour] : inst.precoloured)
        for (Vertex u : g.neighbours(v))
            enter(u);

    ColourTally tally(inst.k);
    while (!frontier.empty()) {
        const std::size_t pick = rng.below(frontier.size());
        const Vertex v = frontier[pick];
        frontier[pick] = frontier.back();
        position[frontier[pick]] = pick;
        frontier.pop_back();

        tally.load(g, c, v);
        c.set(v, tally.argmax());
        for (Vertex u : g.neighbours(v))
            enter(u);
    }
    return c;
}

Colouring random_completion(const Instance& inst, std::uint64_t seed) {
    Colouring c = precolouring(inst);
    Rng rng(derive_seed(seed, 0x726e64u));
    for (Vertex v = 0; v < c.size(); ++v)
        if (!c.coloured(v))
            c.set(v, static_cast<Colour>(1 + rng.below(inst.k)));
    return c;
}

} // namespace shc
