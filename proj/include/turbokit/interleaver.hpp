#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace turbokit {

// Fixed bijection on [0, n) with a precomputed inverse.
class Permutation {
  public:
    // takes ownership of the forward map; throws if it is not a bijection
    explicit Permutation(std::vector<std::uint32_t> forward);

    static Permutation identity(std::size_t n);

    std::size_t size() const { return forward_.size(); }
    std::uint32_t forward(std::size_t i) const { return forward_[i]; }
    std::uint32_t inverse(std::size_t i) const { return inverse_[i]; }

  private:
    std::vector<std::uint32_t> forward_;
    std::vector<std::uint32_t> inverse_;
};

// Seeded Fisher-Yates shuffle of the identity map. Identical (n, seed)
// always produce the same permutation.
Permutation make_random_interleaver(std::size_t n, std::uint64_t seed);

// out[i] = xs[p.forward(i)]
template <typename T>
std::vector<T> permute(const Permutation& p, std::span<const T> xs) {
    if (xs.size() != p.size())
        throw std::invalid_argument("permute: length mismatch");
    std::vector<T> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = xs[p.forward(i)];
    return out;
}

// undoes permute: out[p.forward(i)] = xs[i]
template <typename T>
std::vector<T> inverse_permute(const Permutation& p, std::span<const T> xs) {
    if (xs.size() != p.size())
        throw std::invalid_argument("inverse_permute: length mismatch");
    std::vector<T> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = xs[p.inverse(i)];
    return out;
}

template <typename T>
std::vector<T> permute(const Permutation& p, const std::vector<T>& xs) {
    return permute(p, std::span<const T>(xs));
}

template <typename T>
std::vector<T> inverse_permute(const Permutation& p, const std::vector<T>& xs) {
    return inverse_permute(p, std::span<const T>(xs));
}

} // namespace turbokit
