#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace semitoric {

template <class T>
std::vector<T> rotate_left(const std::vector<T>& v, std::size_t k) {
    std::vector<T> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[(i + k) % v.size()];
    return out;
}

// Lexicographically least rotation.
template <class T>
std::vector<T> least_rotation(const std::vector<T>& v) {
    std::vector<T> best = v;
    for (std::size_t k = 1; k < v.size(); ++k) {
        auto r = rotate_left(v, k);
        if (r < best) best = std::move(r);
    }
    return best;
}

}  // namespace semitoric
