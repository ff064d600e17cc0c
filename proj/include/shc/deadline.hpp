#pragma once

#include <chrono>
#include <cstdint>
#include <limits>

namespace shc {

using Clock = std::chrono::steady_clock;

/// Cooperative wall-clock budget. Algorithms poll expired() between
/// vertices or passes and hand back whatever they have when it trips.
class Deadline {
  public:
    static Deadline never() { return Deadline(Clock::time_point::max()); }
    static Deadline after(std::chrono::milliseconds budget) { return Deadline(Clock::now() + budget); }
    static Deadline after_ms(std::int64_t ms) {
        return ms < 0 ? never() : after(std::chrono::milliseconds(ms));
    }

    bool unlimited() const noexcept { return at_ == Clock::time_point::max(); }
    bool expired() const { return !unlimited() && Clock::now() >= at_; }

  private:
    explicit Deadline(Clock::time_point at) : at_(at) {}
    Clock::time_point at_;
};

/// Milliseconds elapsed since start, as a double.
inline double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

} // namespace shc
