#pragma once

#include <cstdint>
#include <vector>

#include "turbokit/rng.hpp"
#include "turbokit/trellis.hpp"

namespace turbokit::testutil {

// 4-state code: 1 + D^2 over 1 + D + D^2 (octal 5/7)
inline GeneratorSpec rsc_5_7() { return {{1, 0, 1}, {1, 1, 1}}; }

// 16-state code: 1 + D^4 over 1 + D + D^2 + D^3 + D^4 (octal 21/37)
inline GeneratorSpec rsc_21_37() { return {{1, 0, 0, 0, 1}, {1, 1, 1, 1, 1}}; }

inline std::vector<std::uint8_t> random_bits(std::size_t n, Rng& rng) {
    std::vector<std::uint8_t> bits(n);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng.bit());
    return bits;
}

inline std::vector<double> random_llrs(std::size_t n, double scale, Rng& rng) {
    std::vector<double> llrs(n);
    for (auto& v : llrs) v = scale * rng.gaussian();
    return llrs;
}

} // namespace turbokit::testutil
