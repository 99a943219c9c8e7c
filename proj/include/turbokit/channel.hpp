#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "turbokit/interleaver.hpp"
#include "turbokit/rng.hpp"

namespace turbokit {

// AWGN operating point for unit-energy BPSK. The code rate folds the
// energy per transmitted symbol back to energy per information bit, so
// sigma^2 = 1 / (2 * rate * 10^(ebno_db/10)).
struct ChannelParams {
    double ebno_db = 0.0;
    double rate = 1.0;
    double sigma = 0.0; // per-dimension noise standard deviation
};

// throws std::invalid_argument when rate is outside (0, 1]
double sigma_for(double ebno_db, double rate);

ChannelParams make_channel_params(double ebno_db, double rate);

// bit 1 -> +1.0, bit 0 -> -1.0, so a positive LLR votes for bit 1
std::vector<double> modulate(std::span<const std::uint8_t> bits);

std::vector<double> add_awgn(std::span<const double> symbols,
                             const ChannelParams& params, Rng& rng);

// exact Gaussian log-likelihood ratio for one observation: (2/sigma^2) * y
double channel_llr(double y, const ChannelParams& params);

std::vector<double> channel_llrs(std::span<const double> received,
                                 const ChannelParams& params);

// Channel LLRs split per constituent decoder; every vector has length
// n + memory. Decoder 2 sees the interleaved systematic values with its
// own unpermuted tail appended.
struct SoftFrame {
    std::vector<double> sys_llr;
    std::vector<double> par1_llr;
    std::vector<double> sys2_llr;
    std::vector<double> par2_llr;
};

// Inverse of Codeword::transmit_order over channel LLRs.
SoftFrame demultiplex(std::span<const double> llr, const Permutation& perm,
                      int memory);

} // namespace turbokit
