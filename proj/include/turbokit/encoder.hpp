#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "turbokit/interleaver.hpp"
#include "turbokit/trellis.hpp"

namespace turbokit {

// Output of the parallel concatenation: the systematic stream, one parity
// stream per constituent encoder, and the two termination tails. The tails
// hold `memory` systematic bits and `memory` parity bits each, so the total
// transmitted length is 3n + 4*memory.
struct Codeword {
    std::vector<std::uint8_t> systematic;
    std::vector<std::uint8_t> parity1;
    std::vector<std::uint8_t> parity2;
    std::vector<std::uint8_t> tail1_sys, tail1_par;
    std::vector<std::uint8_t> tail2_sys, tail2_par;

    std::size_t frame_size() const { return systematic.size(); }
    std::size_t total_bits() const;

    // [systematic | parity1 | parity2 | tail1 sys,par | tail2 sys,par]
    std::vector<std::uint8_t> transmit_order() const;
};

// Encoder 1 sees the frame as-is, encoder 2 the interleaved frame. Both
// start in state 0 and are driven back to state 0 by their own tail; the
// tails are outside the interleaved region.
Codeword encode(std::span<const std::uint8_t> info, const Trellis& trellis,
                const Permutation& perm);

// n / (3n + 4*memory): the rate-1/3 concatenation with termination overhead.
double code_rate(std::size_t frame_size, int memory);

} // namespace turbokit
