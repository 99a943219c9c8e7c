#include "turbokit/interleaver.hpp"

#include <numeric>

#include "turbokit/rng.hpp"

namespace turbokit {

Permutation::Permutation(std::vector<std::uint32_t> forward)
    : forward_(std::move(forward)) {
    const std::size_t n = forward_.size();
    if (n == 0) throw std::invalid_argument("Permutation: empty map");
    inverse_.assign(n, static_cast<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t f = forward_[i];
        if (f >= n || inverse_[f] != n)
            throw std::invalid_argument("Permutation: map is not a bijection");
        inverse_[f] = static_cast<std::uint32_t>(i);
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint32_t> fwd(n);
    std::iota(fwd.begin(), fwd.end(), 0u);
    return Permutation(std::move(fwd));
}

Permutation make_random_interleaver(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("make_random_interleaver: n must be >= 1");
    std::vector<std::uint32_t> fwd(n);
    std::iota(fwd.begin(), fwd.end(), 0u);
    Rng rng(seed);
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
        std::swap(fwd[i], fwd[j]);
    }
    return Permutation(std::move(fwd));
}

} // namespace turbokit
