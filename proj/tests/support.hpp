#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "shc/colouring.hpp"
#include "shc/graph.hpp"
#include "shc/instance.hpp"
#include "shc/rng.hpp"
#include "shc/sbm.hpp"

namespace shc::testing {

// Hand-built instance, not validated. Vertices are 0-based here.
inline Instance make_instance(std::size_t n, std::vector<Edge> edges, Colour k, double rho,
                              std::vector<Colour> communities, std::vector<Precolour> pre) {
    Instance inst;
    inst.graph = build_graph(n, edges);
    inst.k = k;
    inst.rho = rho;
    inst.communities = std::move(communities);
    inst.precoloured = std::move(pre);
    return inst;
}

// Star with centre 0 and leaves 1..leaves.
inline std::vector<Edge> star_edges(std::size_t leaves) {
    std::vector<Edge> e;
    for (Vertex v = 1; v <= leaves; ++v)
        e.emplace_back(0, v);
    return e;
}

inline std::vector<Edge> path_edges(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v)
        e.emplace_back(v, v + 1);
    return e;
}

// Straight from the definition, no shared code with the library.
inline std::size_t naive_happy(const Instance& inst, const Colouring& c) {
    std::size_t h = 0;
    for (Vertex v = 0; v < inst.graph.num_vertices(); ++v) {
        if (c[v] == kUncoloured)
            continue;
        std::size_t same = 0;
        for (Vertex u : inst.graph.neighbours(v))
            same += c[u] == c[v];
        const double need = inst.rho * static_cast<double>(inst.graph.degree(v));
        if (static_cast<double>(same) + 1e-9 >= need)
            ++h;
    }
    return h;
}

// Small connected SBM instance drawn from `seed`: n in [lo, hi], k in {2, 3}.
inline Instance small_sbm(std::uint64_t seed, std::size_t lo = 4, std::size_t hi = 10,
                          std::initializer_list<double> rhos = {0.3, 0.7, 1.0}) {
    Rng rng(seed);
    for (;;) {
        SbmParams sp;
        sp.k = 2 + static_cast<Colour>(rng.below(2));
        sp.n = lo + rng.below(hi - lo + 1);
        if (sp.n < sp.k * 2)
            sp.n = sp.k * 2;
        sp.p = 0.5 + 0.5 * rng.uniform01();
        sp.q = sp.p * (0.1 + 0.8 * rng.uniform01());
        sp.pcc = 1 + rng.below(sp.n / sp.k);
        if (rng.bernoulli(0.5))
            sp.pcc = 1;
        sp.seed = rng.next();
        const double rho = *(rhos.begin() + rng.below(rhos.size()));
        try {
            return generate(sp, rho);
        } catch (const std::exception&) {
        }
    }
}

} // namespace shc::testing
