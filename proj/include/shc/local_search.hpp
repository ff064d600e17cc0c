#pragma once

#include <cstddef>

#include "shc/colouring.hpp"
#include "shc/deadline.hpp"
#include "shc/instance.hpp"
#include "shc/metrics.hpp"

namespace shc {

struct ImproveResult {
    Colouring colouring;
    HappinessReport before;
    HappinessReport after;
    /// The search lowered H_rho and the input was returned unchanged.
    bool reverted = false;
    /// The deadline tripped before the search finished.
    bool interrupted = false;
    double elapsed_ms = 0.0;
    /// Full scans of the vertex set: the initial unhappy-set build plus one per
    /// sweep or recomputation.
    std::size_t passes = 0;
};

/// Majority-colour local search. Free unhappy vertices take the most frequent
/// colour among their coloured neighbours; vertices with no coloured neighbour
/// wait for a later pass. The input is restored when H_rho dropped.
/// Throws SearchError when some uncoloured component is unreachable.
ImproveResult ls(const Instance& inst, const Colouring& sigma);

/// ls repeated on the recomputed unhappy set until it stops changing, empties,
/// the deadline trips, or n recomputations have run.
ImproveResult rls(const Instance& inst, const Colouring& sigma, Deadline deadline = Deadline::never());

/// One sweep over the free unhappy vertices. A vertex switches to the colour
/// that makes it happy and gives the largest strict gain in H_rho.
ImproveResult els(const Instance& inst, const Colouring& sigma, Deadline deadline = Deadline::never());

} // namespace shc
