#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace shc {

using Vertex = std::uint32_t;
using Colour = std::uint32_t;

/// Colour 0 marks an uncoloured vertex; legal colours are 1..k.
inline constexpr Colour kUncoloured = 0;

using Edge = std::pair<Vertex, Vertex>;

class Colouring;

/// Immutable simple undirected graph. Adjacency is stored in CSR form; each
/// neighbour list is strictly increasing.
class Graph {
  public:
    Graph() = default;

    /// Normalises the edge list (orientation, duplicates) and builds the
    /// adjacency. Throws GraphError on an out-of-range endpoint or a self-loop.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t num_edges() const noexcept { return neighbours_.size() / 2; }

    std::span<const Vertex> neighbours(Vertex v) const noexcept {
        return {neighbours_.data() + offsets_[v], neighbours_.data() + offsets_[v + 1]};
    }

    std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

    bool adjacent(Vertex u, Vertex v) const;

    /// Edges with u < v in ascending lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> neighbours_;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
    return Graph::from_edges(n, edges);
}

/// Single traversal from vertex 0; empty and one-vertex graphs count as connected.
bool is_connected(const Graph& g);

/// Colour -> number of neighbours of v carrying it. Uncoloured neighbours are skipped.
std::map<Colour, std::size_t> neighbour_colour_counts(const Graph& g, const Colouring& c, Vertex v);

/// Reusable per-colour counter for the hot loops. Only touched slots are
/// cleared between uses, so a reset costs O(distinct colours seen).
class ColourTally {
  public:
    explicit ColourTally(Colour k) : counts_(static_cast<std::size_t>(k) + 1, 0) {}

    void add(Colour c) {
        if (counts_[c]++ == 0)
            touched_.push_back(c);
    }

    std::size_t count(Colour c) const { return counts_[c]; }
    std::span<const Colour> touched() const { return touched_; }
    bool empty() const { return touched_.empty(); }

    void clear() {
        for (Colour c : touched_)
            counts_[c] = 0;
        touched_.clear();
    }

    /// Tallies the coloured neighbours of v (after clearing).
    void load(const Graph& g, const Colouring& c, Vertex v);

    /// Colour with the largest count, lowest colour on ties; kUncoloured when empty.
    Colour argmax() const;

    std::size_t max_count() const;

  private:
    std::vector<std::size_t> counts_;
    std::vector<Colour> touched_;
};

} // namespace shc
