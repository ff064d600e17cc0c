#include <cstdint>

#include "shc/heuristics.hpp"
#include "shc/metrics.hpp"

namespace shc {

namespace {

// Scores "give colour i to every uncoloured neighbour of an i-coloured
// vertex" as the change in H_rho over the recoloured vertices and their
// neighbours, the only vertices whose happiness can move.
class NgcState {
  public:
    explicit NgcState(const Instance& inst)
        : g_(inst.graph), rho_(inst.rho), colouring_(precolouring(inst)), happy_(g_.num_vertices(), false),
          overlay_stamp_(g_.num_vertices(), 0), affected_stamp_(g_.num_vertices(), 0),
          colour_stamp_(static_cast<std::size_t>(inst.k) + 1, 0), frontiers_(static_cast<std::size_t>(inst.k) + 1) {
        for (Vertex v = 0; v < g_.num_vertices(); ++v)
            happy_[v] = is_rho_happy(g_, colouring_, rho_, v);
    }

    Colouring take() { return std::move(colouring_); }

    /// Rebuilds every colour's frontier; false when all are empty.
    bool collect_frontiers() {
        bool any = false;
        for (auto& f : frontiers_)
            f.clear();
        for (Vertex u = 0; u < g_.num_vertices(); ++u) {
            if (colouring_.coloured(u))
                continue;
            const std::uint64_t stamp = ++colour_clock_;
            for (Vertex w : g_.neighbours(u)) {
                const Colour c = colouring_[w];
                if (c != kUncoloured && colour_stamp_[c] != stamp) {
                    colour_stamp_[c] = stamp;
                    frontiers_[c].push_back(u);
                    any = true;
                }
            }
        }
        return any;
    }

    const std::vector<Vertex>& frontier(Colour c) const { return frontiers_[c]; }

    /// Happy-count change if colour c were given to its whole frontier.
    std::int64_t score(Colour c) {
        mark(c);
        std::int64_t delta = 0;
        for (Vertex a : affected_)
            delta += static_cast<std::int64_t>(happy_under_overlay(a, c)) - static_cast<std::int64_t>(happy_[a]);
        return delta;
    }

    void commit(Colour c) {
        mark(c);
        for (Vertex u : frontiers_[c])
            colouring_.set(u, c);
        for (Vertex a : affected_)
            happy_[a] = is_rho_happy(g_, colouring_, rho_, a);
    }

  private:
    void mark(Colour c) {
        overlay_mark_ = ++overlay_clock_;
        affected_.clear();
        for (Vertex u : frontiers_[c])
            overlay_stamp_[u] = overlay_mark_;
        for (Vertex u : frontiers_[c]) {
            touch(u);
            for (Vertex w : g_.neighbours(u))
                touch(w);
        }
    }

    void touch(Vertex v) {
        if (affected_stamp_[v] != overlay_mark_) {
            affected_stamp_[v] = overlay_mark_;
            affected_.push_back(v);
        }
    }

    Colour overlay_colour(Vertex v, Colour c) const { return overlay_stamp_[v] == overlay_mark_ ? c : colouring_[v]; }

    bool happy_under_overlay(Vertex v, Colour c) const {
        const Colour own = overlay_colour(v, c);
        if (own == kUncoloured)
            return false;
        std::size_t same = 0;
        for (Vertex w : g_.neighbours(v))
            same += overlay_colour(w, c) == own;
        return same >= required_matches(rho_, g_.degree(v));
    }

    const Graph& g_;
    double rho_;
    Colouring colouring_;
    std::vector<bool> happy_;
    std::vector<std::uint64_t> overlay_stamp_;
    std::vector<std::uint64_t> affected_stamp_;
    std::vector<std::uint64_t> colour_stamp_;
    std::vector<std::vector<Vertex>> frontiers_;
    std::vector<Vertex> affected_;
    std::uint64_t overlay_clock_ = 0;
    std::uint64_t overlay_mark_ = 0;
    std::uint64_t colour_clock_ = 0;
};

} // namespace

Construction ngc(const Instance& inst, Deadline deadline) {
    NgcState state(inst);
    while (state.collect_frontiers()) {
        Colour best = kUncoloured;
        std::int64_t best_score = 0;
        for (Colour c = 1; c <= inst.k; ++c) {
            if (deadline.expired())
                return {state.take(), true};
            if (state.frontier(c).empty())
                continue;
            const std::int64_t s = state.score(c);
            if (best == kUncoloured || s > best_score) {
                best = c;
                best_score = s;
            }
        }
        state.commit(best);
    }
    return {state.take(), false};
}

} // namespace shc
