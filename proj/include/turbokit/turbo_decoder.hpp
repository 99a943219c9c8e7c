#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "turbokit/channel.hpp"
#include "turbokit/interleaver.hpp"
#include "turbokit/siso.hpp"

namespace turbokit {

struct DecoderConfig {
    MaxStarVariant variant;
    int iterations = 8;
    bool trace_llr = false; // keep the a posteriori LLRs of every iteration
};

struct DecodeOutput {
    std::vector<std::uint8_t> bits;
    std::vector<double> final_llr;
    std::vector<std::vector<double>> per_iteration_llr; // filled when trace_llr
};

// bit = 1 iff llr > 0; an exactly-zero LLR decides 0
std::vector<std::uint8_t> hard_decision(std::span<const double> llr);

// Two SISO decoders exchanging extrinsic information through the
// interleaver for a fixed number of iterations. The first iteration
// starts from an all-zero a priori; the final LLRs are the deinterleaved
// output of the second decoder.
DecodeOutput turbo_decode(const SoftFrame& frame, const Trellis& trellis,
                          const Permutation& perm, const DecoderConfig& cfg);

} // namespace turbokit
