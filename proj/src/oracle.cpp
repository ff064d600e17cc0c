#include <string>

#include "shc/errors.hpp"
#include "shc/harness.hpp"

namespace shc {

namespace {

// Written against the raw definition (same + slack >= rho * deg) rather than
// the metrics module, so the oracle does not share code with what it checks.
std::size_t count_happy(const Graph& g, const std::vector<Colour>& colour, double rho) {
    std::size_t happy = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (colour[v] == kUncoloured)
            continue;
        std::size_t same = 0;
        for (Vertex u : g.neighbours(v))
            if (colour[u] == colour[v])
                ++same;
        if (static_cast<double>(same) + 1e-9 >= rho * static_cast<double>(g.degree(v)))
            ++happy;
    }
    return happy;
}

} // namespace

OracleResult brute_force_optimum(const Instance& inst) {
    const std::size_t n = inst.num_vertices();
    std::vector<Colour> colour(n, kUncoloured);
    for (auto [v, c] : inst.precoloured)
        colour[v] = c;
    std::vector<Vertex> free;
    for (Vertex v = 0; v < n; ++v)
        if (colour[v] == kUncoloured)
            free.push_back(v);

    std::uint64_t space = 1;
    for (std::size_t i = 0; i < free.size(); ++i) {
        if (inst.k == 0 || space > kOracleSpaceLimit / inst.k)
            throw ParameterError("oracle search space exceeds " + std::to_string(kOracleSpaceLimit) + " (k = " +
                                 std::to_string(inst.k) + ", " + std::to_string(free.size()) + " free vertices)");
        space *= inst.k;
    }

    for (Vertex v : free)
        colour[v] = 1;
    OracleResult best{0, Colouring(colour, inst.k), space};
    best.best_happy = count_happy(inst.graph, colour, inst.rho);

    // Odometer over free vertices, the first free vertex most significant, so
    // the first maximiser met is the lexicographically smallest.
    for (std::uint64_t step = 1; step < space; ++step) {
        std::size_t pos = free.size();
        while (pos > 0) {
            --pos;
            if (colour[free[pos]] < inst.k) {
                ++colour[free[pos]];
                break;
            }
            colour[free[pos]] = 1;
        }
        const std::size_t happy = count_happy(inst.graph, colour, inst.rho);
        if (happy > best.best_happy) {
            best.best_happy = happy;
            best.best = Colouring(colour, inst.k);
        }
    }
    return best;
}

} // namespace shc
