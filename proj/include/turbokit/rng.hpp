#pragma once

#include <cstdint>
#include <random>

namespace turbokit {

// splitmix64 finalizer; mixes seed material into independent streams.
std::uint64_t mix64(std::uint64_t x);

// Seed for the (stream, substream) slot of a master seed. Used to give
// every simulated frame its own generator so frames can run in any order
// (or concurrently) and still reproduce byte-identical results.
std::uint64_t derive_stream(std::uint64_t master, std::uint64_t stream,
                            std::uint64_t substream);

// Seeded generator wrapper. The bounded draw and the gaussian are
// implemented here instead of through <random> distributions so the
// produced sequences depend only on the mt19937_64 stream, which is
// bit-exact everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // one random bit
    int bit() { return static_cast<int>(next_u64() >> 63); }

    // uniform in [0, bound), unbiased via rejection; bound >= 1
    std::uint64_t below(std::uint64_t bound);

    // uniform in (0, 1], 53-bit resolution
    double uniform_pos();

    // standard normal, Box-Muller; the second value of each pair is cached
    double gaussian();

  private:
    std::mt19937_64 gen_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

} // namespace turbokit
