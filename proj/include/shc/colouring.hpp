#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shc/graph.hpp"

namespace shc {

/// Dense vertex -> colour map over 0..k, where 0 is uncoloured.
class Colouring {
  public:
    Colouring() = default;
    Colouring(std::size_t n, Colour k) : assignment_(n, kUncoloured), k_(k) {}

    /// Throws ParameterError when a value exceeds k.
    Colouring(std::vector<Colour> assignment, Colour k);

    std::size_t size() const noexcept { return assignment_.size(); }
    Colour k() const noexcept { return k_; }

    Colour operator[](Vertex v) const noexcept { return assignment_[v]; }
    Colour at(Vertex v) const { return assignment_.at(v); }

    bool coloured(Vertex v) const noexcept { return assignment_[v] != kUncoloured; }

    /// Throws ParameterError for colours above k.
    void set(Vertex v, Colour c);

    void clear(Vertex v) noexcept { assignment_[v] = kUncoloured; }

    bool is_complete() const noexcept;
    std::size_t uncoloured_count() const noexcept;

    std::span<const Colour> values() const noexcept { return assignment_; }

    friend bool operator==(const Colouring&, const Colouring&) = default;

  private:
    std::vector<Colour> assignment_;
    Colour k_ = 0;
};

} // namespace shc
