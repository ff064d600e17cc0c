#include <set>

#include "shc/heuristics.hpp"
#include "shc/metrics.hpp"
#include "shc/rng.hpp"

// Growth keeps every vertex in one of these groups:
//
//   P   coloured, not yet happy, and enough uncoloured neighbours remain for
//       matching + uncoloured >= ceil(rho * deg)
//   Lh  uncoloured, and some colour c has count_c + uncoloured >= ceil(rho * deg)
//   Lu  uncoloured, and no colour can make it happy
//
// Each step takes the lowest-id vertex of the first non-empty group. A P
// vertex recruits just enough uncoloured neighbours (ascending id) into its
// colour to become happy. An Lh vertex takes its majority neighbour colour,
// which is always one of the feasible ones; Lh vertices touching the
// coloured region go before those that do not. An Lu vertex gets a uniform
// random colour. Only the newly coloured vertices and their neighbours can
// change group, so updates are local.

namespace shc {

namespace {

enum class Group : unsigned char { None, P, LhFrontier, LhInterior, Lu };

class GrowthState {
  public:
    GrowthState(const Instance& inst)
        : g_(inst.graph), k_(inst.k), stride_(static_cast<std::size_t>(inst.k) + 1), colouring_(precolouring(inst)),
          uncoloured_(g_.num_vertices()), counts_(g_.num_vertices() * stride_, 0), required_(g_.num_vertices()),
          group_(g_.num_vertices(), Group::None) {
        const std::size_t n = g_.num_vertices();
        for (Vertex v = 0; v < n; ++v) {
            required_[v] = required_matches(inst.rho, g_.degree(v));
            for (Vertex u : g_.neighbours(v)) {
                if (colouring_.coloured(u))
                    ++counts_[v * stride_ + colouring_[u]];
                else
                    ++uncoloured_[v];
            }
        }
        for (Vertex v = 0; v < n; ++v)
            reclassify(v);
    }

    const Colouring& colouring() const { return colouring_; }
    Colouring take() { return std::move(colouring_); }

    bool done() const { return p_.empty() && lh_frontier_.empty() && lh_interior_.empty() && lu_.empty(); }

    void step(Rng& rng) {
        if (!p_.empty()) {
            const Vertex v = *p_.begin();
            const Colour own = colouring_[v];
            std::size_t need = required_[v] - count(v, own);
            for (Vertex u : g_.neighbours(v)) {
                if (need == 0)
                    break;
                if (!colouring_.coloured(u)) {
                    assign(u, own);
                    --need;
                }
            }
        } else if (!lh_frontier_.empty() || !lh_interior_.empty()) {
            const Vertex v = !lh_frontier_.empty() ? *lh_frontier_.begin() : *lh_interior_.begin();
            assign(v, majority(v));
        } else {
            const Vertex v = *lu_.begin();
            assign(v, static_cast<Colour>(1 + rng.below(k_)));
        }
    }

  private:
    std::size_t count(Vertex v, Colour c) const { return counts_[v * stride_ + c]; }

    Colour majority(Vertex v) const {
        Colour best = 1;
        for (Colour c = 2; c <= k_; ++c)
            if (count(v, c) > count(v, best))
                best = c;
        return best;
    }

    std::set<Vertex>* set_of(Group grp) {
        switch (grp) {
        case Group::P:
            return &p_;
        case Group::LhFrontier:
            return &lh_frontier_;
        case Group::LhInterior:
            return &lh_interior_;
        case Group::Lu:
            return &lu_;
        case Group::None:
            break;
        }
        return nullptr;
    }

    Group classify(Vertex v) const {
        if (colouring_.coloured(v)) {
            const std::size_t same = count(v, colouring_[v]);
            const bool can_grow = same < required_[v] && same + uncoloured_[v] >= required_[v];
            return can_grow ? Group::P : Group::None;
        }
        if (count(v, majority(v)) + uncoloured_[v] >= required_[v])
            return uncoloured_[v] < g_.degree(v) ? Group::LhFrontier : Group::LhInterior;
        return Group::Lu;
    }

    void reclassify(Vertex v) {
        const Group next = classify(v);
        if (next == group_[v])
            return;
        if (auto* s = set_of(group_[v]))
            s->erase(v);
        if (auto* s = set_of(next))
            s->insert(v);
        group_[v] = next;
    }

    void assign(Vertex v, Colour c) {
        colouring_.set(v, c);
        for (Vertex u : g_.neighbours(v)) {
            --uncoloured_[u];
            ++counts_[u * stride_ + c];
        }
        reclassify(v);
        for (Vertex u : g_.neighbours(v))
            reclassify(u);
    }

    const Graph& g_;
    Colour k_;
    std::size_t stride_;
    Colouring colouring_;
    std::vector<std::size_t> uncoloured_;
    std::vector<std::size_t> counts_;
    std::vector<std::size_t> required_;
    std::vector<Group> group_;
    std::set<Vertex> p_, lh_frontier_, lh_interior_, lu_;
};

} // namespace

Construction growth(const Instance& inst, Deadline deadline, std::uint64_t seed) {
    GrowthState state(inst);
    Rng rng(derive_seed(seed, 0x67726f77u));
    while (!state.done()) {
        if (deadline.expired())
            return {state.take(), true};
        state.step(rng);
    }
    return {state.take(), false};
}

} // namespace shc
