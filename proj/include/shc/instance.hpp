#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "shc/colouring.hpp"
#include "shc/graph.hpp"

namespace shc {

/// Parameters of the planted partition model G(n, k, p, q) plus the number
/// of precoloured vertices per community.
struct SbmParams {
    std::size_t n = 0;
    Colour k = 2;
    double p = 0.5;
    double q = 0.1;
    std::size_t pcc = 1;
    std::uint64_t seed = 0;

    /// Throws ParameterError unless 0 < q < p <= 1, k >= 2, k <= n and 1 <= pcc <= n / k.
    void validate() const;

    friend bool operator==(const SbmParams&, const SbmParams&) = default;
};

using Precolour = std::pair<Vertex, Colour>;

/// A partially precoloured graph with its planted communities.
///
/// Communities are numbered 1..k and every precoloured vertex carries its
/// community id. `precoloured` is sorted by vertex. Instances built by the
/// generator or the parser have passed validate(); algorithms do not require
/// it, which is what lets tests hand-build degenerate cases.
struct Instance {
    Graph graph;
    Colour k = 0;
    double rho = 0.0;
    std::vector<Colour> communities;
    std::vector<Precolour> precoloured;
    std::optional<SbmParams> params;

    std::size_t num_vertices() const noexcept { return graph.num_vertices(); }

    /// Throws InstanceError naming the first broken invariant.
    void validate() const;

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Colouring holding only the precoloured vertices.
Colouring precolouring(const Instance& inst);

/// Per-vertex flag: true for precoloured (non-free) vertices.
std::vector<bool> fixed_mask(const Instance& inst);

/// True iff c agrees with every precoloured vertex of inst.
bool extends_precolouring(const Instance& inst, const Colouring& c);

/// c(v) = community(v) for all v.
Colouring community_colouring(const Instance& inst);

/// Seed recorded in the instance provenance, 0 for hand-built instances.
std::uint64_t instance_seed(const Instance& inst);

} // namespace shc
