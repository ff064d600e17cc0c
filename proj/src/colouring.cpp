#include "shc/colouring.hpp"

#include <algorithm>
#include <string>

#include "shc/errors.hpp"

namespace shc {

Colouring::Colouring(std::vector<Colour> assignment, Colour k) : assignment_(std::move(assignment)), k_(k) {
    for (std::size_t v = 0; v < assignment_.size(); ++v)
        if (assignment_[v] > k_)
            throw ParameterError("colour " + std::to_string(assignment_[v]) + " at vertex " + std::to_string(v) +
                                 " exceeds k = " + std::to_string(k_));
}

void Colouring::set(Vertex v, Colour c) {
    if (c > k_)
        throw ParameterError("colour " + std::to_string(c) + " exceeds k = " + std::to_string(k_));
    assignment_[v] = c;
}

bool Colouring::is_complete() const noexcept {
    return std::none_of(assignment_.begin(), assignment_.end(), [](Colour c) { return c == kUncoloured; });
}

std::size_t Colouring::uncoloured_count() const noexcept {
    return static_cast<std::size_t>(std::count(assignment_.begin(), assignment_.end(), kUncoloured));
}

} // namespace shc
