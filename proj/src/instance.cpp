#include "shc/instance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "shc/errors.hpp"

namespace shc {

void SbmParams::validate() const {
    using std::to_string;
    if (k < 2)
        throw ParameterError("k must be at least 2, got " + to_string(k));
    if (k > n)
        throw ParameterError("k = " + to_string(k) + " exceeds n = " + to_string(n));
    if (!(p > 0.0 && p <= 1.0))
        throw ParameterError("p must lie in (0, 1], got " + std::to_string(p));
    if (!(q > 0.0))
        throw ParameterError("q must be positive, got " + std::to_string(q));
    if (!(q < p))
        throw ParameterError("q must be below p (q = " + std::to_string(q) + ", p = " + std::to_string(p) + ")");
    if (pcc < 1 || pcc > n / k)
        throw ParameterError("pcc must lie in [1, floor(n/k)] = [1, " + to_string(n / k) + "], got " +
                             to_string(pcc));
}

void Instance::validate() const {
    using std::to_string;
    const std::size_t n = num_vertices();
    if (k < 1)
        throw InstanceError("k must be at least 1");
    if (!(rho >= 0.0 && rho <= 1.0))
        throw InstanceError("rho must lie in [0, 1]");
    if (communities.size() != n)
        throw InstanceError("community assignment incomplete: " + to_string(communities.size()) + " of " +
                            to_string(n) + " vertices assigned");
    if (k > n)
        throw InstanceError("k = " + to_string(k) + " exceeds n = " + to_string(n));

    std::vector<std::size_t> sizes(k + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (communities[v] < 1 || communities[v] > k)
            throw InstanceError("community of vertex " + to_string(v + 1) + " outside 1.." + to_string(k));
        ++sizes[communities[v]];
    }
    auto [lo, hi] = std::minmax_element(sizes.begin() + 1, sizes.end());
    if (*hi - *lo > 1)
        throw InstanceError("community sizes unbalanced: between " + to_string(*lo) + " and " + to_string(*hi));

    std::vector<std::size_t> seeded(k + 1, 0);
    for (std::size_t i = 0; i < precoloured.size(); ++i) {
        auto [v, c] = precoloured[i];
        if (v >= n)
            throw InstanceError("precoloured vertex " + to_string(v + 1) + " out of range");
        if (i > 0 && precoloured[i - 1].first >= v)
            throw InstanceError("precoloured vertices not strictly ascending at vertex " + to_string(v + 1));
        if (c != communities[v])
            throw InstanceError("precolouring violates community rule at vertex " + to_string(v + 1));
        ++seeded[c];
    }
    for (Colour c = 1; c <= k; ++c)
        if (seeded[c] == 0)
            throw InstanceError("community " + to_string(c) + " has no precoloured vertex");

    if (params) {
        params->validate();
        if (params->n != n || params->k != k)
            throw InstanceError("params disagree with the graph (n or k)");
        for (Colour c = 1; c <= k; ++c)
            if (seeded[c] != params->pcc)
                throw InstanceError("community " + to_string(c) + " has " + to_string(seeded[c]) +
                                    " precoloured vertices, params say " + to_string(params->pcc));
    }

    if (!is_connected(graph))
        throw InstanceError("instance not connected");
}

Colouring precolouring(const Instance& inst) {
    Colouring c(inst.num_vertices(), inst.k);
    for (auto [v, colour] : inst.precoloured)
        c.set(v, colour);
    return c;
}

std::vector<bool> fixed_mask(const Instance& inst) {
    std::vector<bool> fixed(inst.num_vertices(), false);
    for (auto [v, colour] : inst.precoloured)
        fixed[v] = true;
    return fixed;
}

bool extends_precolouring(const Instance& inst, const Colouring& c) {
    if (c.size() != inst.num_vertices())
        return false;
    return std::all_of(inst.precoloured.begin(), inst.precoloured.end(),
                       [&](const Precolour& pc) { return c[pc.first] == pc.second; });
}

Colouring community_colouring(const Instance& inst) { return Colouring(inst.communities, inst.k); }

std::uint64_t instance_seed(const Instance& inst) { return inst.params ? inst.params->seed : 0; }

} // namespace shc
