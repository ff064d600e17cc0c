#pragma once

#include <cstdint>

#include "shc/colouring.hpp"
#include "shc/deadline.hpp"
#include "shc/instance.hpp"

namespace shc {

/// Output of a constructive heuristic. `interrupted` is set when the deadline
/// tripped and the colouring may still have uncoloured vertices.
struct Construction {
    Colouring colouring;
    bool interrupted = false;
};

/// Colours every free vertex with one colour, trying all k, and keeps the one
/// with the most happy vertices (lowest colour on ties). O(km).
Colouring greedy(const Instance& inst);

/// Growth heuristic adapted to rho-happiness. See growth.cpp for the set
/// definitions and selection order.
Construction growth(const Instance& inst, Deadline deadline, std::uint64_t seed);

inline Construction growth(const Instance& inst, Deadline deadline = Deadline::never()) {
    return growth(inst, deadline, instance_seed(inst));
}

/// Neighbour Greedy Colouring: each round tentatively grows every colour class
/// by its uncoloured neighbours and commits the best one.
Construction ngc(const Instance& inst, Deadline deadline = Deadline::never());

/// Local Maximal Colouring: repeatedly picks a random uncoloured vertex on the
/// coloured frontier and gives it the majority colour of its neighbours. O(m).
Colouring lmc(const Instance& inst, std::uint64_t seed);

/// Independent uniform colour in 1..k for every free vertex.
Colouring random_completion(const Instance& inst, std::uint64_t seed);

} // namespace shc
