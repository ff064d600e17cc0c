#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "shc/instance.hpp"
#include "shc/metrics.hpp"

namespace shc {

/// One (instance, pipeline) result row. Optional fields serialise as empty CSV cells.
struct ExperimentRecord {
    std::string instance_id;
    std::size_t n = 0;
    Colour k = 0;
    double rho = 0.0;
    /// Generation parameters; absent for instances read from files without provenance.
    std::optional<SbmParams> params;
    std::optional<Thresholds> thresholds;
    std::optional<Bucket> bucket;
    std::string algorithm;
    double alpha = 0.0;
    double acd = 0.0;
    std::size_t happy_count = 0;
    bool complete = false;
    /// Only improvers report a revert flag.
    std::optional<bool> reverted;
    /// Only filled when timing output is enabled, so default CSVs are reproducible.
    std::optional<double> elapsed_ms;

    friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

} // namespace shc
