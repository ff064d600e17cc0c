#pragma once

#include <cstddef>
#include <vector>

#include "shc/instance.hpp"

namespace shc {

/// Consecutive disconnected draws tolerated before generate() gives up.
inline constexpr int kConnectivityRetries = 50;

/// Sizes of the k contiguous communities: floor(n/k), plus one for the
/// first n mod k communities.
std::vector<std::size_t> community_sizes(std::size_t n, std::size_t k);

/// Samples a connected SBM instance. Vertices are assigned to communities in
/// contiguous index blocks, and the first pcc vertices of each block are
/// precoloured. Disconnected samples are rejected and redrawn from the same
/// stream. Pure function of (params, rho).
Instance generate(const SbmParams& params, double rho);

} // namespace shc
