#include "shc/graph.hpp"

#include <algorithm>
#include <string>

#include "shc/colouring.hpp"
#include "shc/errors.hpp"

namespace shc {

namespace {

std::string pair_text(const Edge& e) {
    return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
}

} // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<Edge> norm;
    norm.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.first >= n || e.second >= n)
            throw GraphError("endpoint out of range in edge " + pair_text(e) + " for n = " + std::to_string(n));
        if (e.first == e.second)
            throw GraphError("self-loop at vertex " + std::to_string(e.first));
        norm.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (const Edge& e : norm) {
        ++g.offsets_[e.first + 1];
        ++g.offsets_[e.second + 1];
    }
    for (std::size_t v = 0; v < n; ++v)
        g.offsets_[v + 1] += g.offsets_[v];

    g.neighbours_.resize(2 * norm.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // Edges arrive sorted with first < second, so every list is filled with
    // its smaller neighbours (as `second`) before its larger ones (as `first`),
    // each group ascending.
    for (const Edge& e : norm) {
        g.neighbours_[fill[e.first]++] = e.second;
        g.neighbours_[fill[e.second]++] = e.first;
    }
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    auto nb = neighbours(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (Vertex v : neighbours(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n <= 1)
        return true;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbours(v)) {
            if (!seen[u]) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

std::map<Colour, std::size_t> neighbour_colour_counts(const Graph& g, const Colouring& c, Vertex v) {
    std::map<Colour, std::size_t> counts;
    for (Vertex u : g.neighbours(v))
        if (c.coloured(u))
            ++counts[c[u]];
    return counts;
}

void ColourTally::load(const Graph& g, const Colouring& c, Vertex v) {
    clear();
    for (Vertex u : g.neighbours(v))
        if (c.coloured(u))
            add(c[u]);
}

Colour ColourTally::argmax() const {
    Colour best = kUncoloured;
    std::size_t best_count = 0;
    for (Colour c : touched_) {
        if (counts_[c] > best_count || (counts_[c] == best_count && c < best)) {
            best = c;
            best_count = counts_[c];
        }
    }
    return best;
}

std::size_t ColourTally::max_count() const {
    std::size_t best = 0;
    for (Colour c : touched_)
        best = std::max(best, counts_[c]);
    return best;
}

} // namespace shc
