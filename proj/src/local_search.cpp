#include "shc/local_search.hpp"

#include <string>

#include "shc/errors.hpp"

namespace shc {

namespace {

std::vector<Vertex> unhappy_free(const Instance& inst, const std::vector<bool>& fixed, const Colouring& c) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < inst.num_vertices(); ++v)
        if (!fixed[v] && !is_rho_happy(inst.graph, c, inst.rho, v))
            out.push_back(v);
    return out;
}

/// Majority colour among coloured neighbours, lowest on ties, except that a
/// current colour tying the maximum is kept.
Colour majority_keep_current(const ColourTally& tally, Colour current) {
    if (current != kUncoloured && tally.count(current) == tally.max_count())
        return current;
    return tally.argmax();
}

struct DrainOutcome {
    std::size_t sweeps = 0;
    bool interrupted = false;
};

/// Recolours every vertex of `work` that has a coloured neighbour; the rest
/// wait for the next sweep.
DrainOutcome drain(const Instance& inst, Colouring& c, std::vector<Vertex> work, const Deadline& deadline) {
    DrainOutcome out;
    ColourTally tally(inst.k);
    std::vector<Vertex> waiting;
    while (!work.empty()) {
        ++out.sweeps;
        waiting.clear();
        bool progress = false;
        for (Vertex u : work) {
            if (deadline.expired()) {
                out.interrupted = true;
                return out;
            }
            tally.load(inst.graph, c, u);
            if (tally.empty()) {
                waiting.push_back(u);
                continue;
            }
            c.set(u, majority_keep_current(tally, c[u]));
            progress = true;
        }
        if (!progress)
            throw SearchError("LS cannot terminate: unreachable uncoloured component (" +
                              std::to_string(waiting.size()) + " vertices without coloured neighbours)");
        work.swap(waiting);
    }
    return out;
}

void finish(const Instance& inst, const Colouring& sigma, Colouring& result, ImproveResult& r) {
    r.after = happiness_report(inst, result);
    if (r.after.happy_count < r.before.happy_count) {
        result = sigma;
        r.after = r.before;
        r.reverted = true;
    }
    r.colouring = std::move(result);
}

} // namespace

ImproveResult ls(const Instance& inst, const Colouring& sigma) {
    const auto start = Clock::now();
    ImproveResult r;
    r.before = happiness_report(inst, sigma);
    const std::vector<bool> fixed = fixed_mask(inst);

    Colouring result = sigma;
    const DrainOutcome d = drain(inst, result, unhappy_free(inst, fixed, sigma), Deadline::never());
    r.passes = 1 + d.sweeps;

    finish(inst, sigma, result, r);
    r.elapsed_ms = elapsed_ms(start);
    return r;
}

ImproveResult rls(const Instance& inst, const Colouring& sigma, Deadline deadline) {
    const auto start = Clock::now();
    ImproveResult r;
    r.before = happiness_report(inst, sigma);
    const std::vector<bool> fixed = fixed_mask(inst);
    const std::size_t cap = inst.num_vertices();

    Colouring result = sigma;
    std::vector<Vertex> work = unhappy_free(inst, fixed, sigma);
    r.passes = 1;
    std::size_t recomputations = 0;
    while (!work.empty()) {
        const DrainOutcome d = drain(inst, result, work, deadline);
        r.passes += d.sweeps;
        if (d.interrupted) {
            r.interrupted = true;
            break;
        }
        std::vector<Vertex> next = unhappy_free(inst, fixed, result);
        ++r.passes;
        ++recomputations;
        if (next == work || recomputations >= cap)
            break;
        if (deadline.expired()) {
            r.interrupted = !next.empty();
            break;
        }
        work = std::move(next);
    }

    finish(inst, sigma, result, r);
    r.elapsed_ms = elapsed_ms(start);
    return r;
}

namespace {

// Happiness bookkeeping for single-vertex moves. same[v] counts neighbours
// sharing v's colour, so the effect of recolouring u is visible from N(u).
class MoveEvaluator {
  public:
    MoveEvaluator(const Instance& inst, Colouring& c)
        : g_(inst.graph), c_(c), same_(g_.num_vertices()), required_(g_.num_vertices()), happy_(g_.num_vertices()) {
        for (Vertex v = 0; v < g_.num_vertices(); ++v) {
            same_[v] = matching_neighbours(g_, c_, v);
            required_[v] = required_matches(inst.rho, g_.degree(v));
            happy_[v] = c_.coloured(v) && same_[v] >= required_[v];
        }
    }

    std::size_t required(Vertex v) const { return required_[v]; }

    /// Change in H_rho if u moved to colour q, given that q makes u happy.
    long gain(Vertex u, Colour q) const {
        const Colour old = c_[u];
        long delta = happy_[u] ? 0 : 1;
        for (Vertex w : g_.neighbours(u)) {
            const Colour cw = c_[w];
            if (cw == kUncoloured)
                continue;
            std::size_t s = same_[w];
            if (cw == old)
                --s;
            if (cw == q)
                ++s;
            delta += static_cast<long>(s >= required_[w]) - static_cast<long>(happy_[w]);
        }
        return delta;
    }

    void apply(Vertex u, Colour q, std::size_t matches) {
        const Colour old = c_[u];
        for (Vertex w : g_.neighbours(u)) {
            const Colour cw = c_[w];
            if (cw == kUncoloured)
                continue;
            if (cw == old)
                --same_[w];
            if (cw == q)
                ++same_[w];
            happy_[w] = same_[w] >= required_[w];
        }
        c_.set(u, q);
        same_[u] = matches;
        happy_[u] = matches >= required_[u];
    }

  private:
    const Graph& g_;
    Colouring& c_;
    std::vector<std::size_t> same_;
    std::vector<std::size_t> required_;
    std::vector<bool> happy_;
};

} // namespace

ImproveResult els(const Instance& inst, const Colouring& sigma, Deadline deadline) {
    const auto start = Clock::now();
    ImproveResult r;
    r.before = happiness_report(inst, sigma);
    const std::vector<bool> fixed = fixed_mask(inst);

    Colouring result = sigma;
    const std::vector<Vertex> work = unhappy_free(inst, fixed, sigma);
    r.passes = work.empty() ? 1 : 2;
    MoveEvaluator eval(inst, result);
    ColourTally tally(inst.k);
    for (Vertex u : work) {
        if (deadline.expired()) {
            r.interrupted = true;
            break;
        }
        tally.load(inst.graph, result, u);
        const Colour current = result[u];
        Colour best = kUncoloured;
        long best_gain = 0;
        for (Colour q = 1; q <= inst.k; ++q) {
            if (q == current || tally.count(q) < eval.required(u))
                continue;
            const long g = eval.gain(u, q);
            if (g > best_gain) {
                best = q;
                best_gain = g;
            }
        }
        if (best != kUncoloured)
            eval.apply(u, best, tally.count(best));
    }

    finish(inst, sigma, result, r);
    r.elapsed_ms = elapsed_ms(start);
    return r;
}

} // namespace shc
