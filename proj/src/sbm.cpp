#include "shc/sbm.hpp"

#include <cmath>
#include <string>

#include "shc/errors.hpp"
#include "shc/rng.hpp"

namespace shc {

std::vector<std::size_t> community_sizes(std::size_t n, std::size_t k) {
    std::vector<std::size_t> sizes(k, n / k);
    for (std::size_t i = 0; i < n % k; ++i)
        ++sizes[i];
    return sizes;
}

Instance generate(const SbmParams& params, double rho) {
    params.validate();
    if (!(rho >= 0.0 && rho <= 1.0))
        throw ParameterError("rho must lie in [0, 1], got " + std::to_string(rho));

    const std::size_t n = params.n;
    Instance inst;
    inst.k = params.k;
    inst.rho = rho;
    inst.params = params;
    inst.communities.resize(n);

    Vertex next = 0;
    Colour id = 1;
    for (std::size_t size : community_sizes(n, params.k)) {
        for (std::size_t i = 0; i < size; ++i, ++next) {
            inst.communities[next] = id;
            if (i < params.pcc)
                inst.precoloured.emplace_back(next, id);
        }
        ++id;
    }

    Rng rng(params.seed);
    std::vector<Edge> edges;
    for (int attempt = 0; attempt < kConnectivityRetries; ++attempt) {
        edges.clear();
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                const double prob = inst.communities[u] == inst.communities[v] ? params.p : params.q;
                if (rng.bernoulli(prob))
                    edges.emplace_back(u, v);
            }
        }
        Graph g = Graph::from_edges(n, edges);
        if (is_connected(g)) {
            inst.graph = std::move(g);
            return inst;
        }
    }
    throw GenerationError("connectivity retry limit exceeded (" + std::to_string(kConnectivityRetries) +
                          " disconnected samples) for n = " + std::to_string(n) + ", k = " + std::to_string(params.k) +
                          ", p = " + std::to_string(params.p) + ", q = " + std::to_string(params.q));
}

} // namespace shc
