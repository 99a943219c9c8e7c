#include "turbokit/encoder.hpp"

#include <stdexcept>

namespace turbokit {

namespace {

struct RscOutput {
    std::vector<std::uint8_t> parity;
    std::vector<std::uint8_t> tail_sys, tail_par;
};

// Run one RSC encoder from state 0 over the input, then terminate.
RscOutput rsc_encode(std::span<const std::uint8_t> input, const Trellis& trellis) {
    RscOutput out;
    out.parity.reserve(input.size());
    std::uint32_t state = 0;
    for (const std::uint8_t bit : input) {
        const auto& e = trellis.step(state, bit);
        out.parity.push_back(e.parity);
        state = e.next_state;
    }
    for (int j = 0; j < trellis.memory(); ++j) {
        const std::uint8_t bit = trellis.termination_input(state);
        const auto& e = trellis.step(state, bit);
        out.tail_sys.push_back(bit);
        out.tail_par.push_back(e.parity);
        state = e.next_state;
    }
    return out;
}

} // namespace

std::size_t Codeword::total_bits() const {
    return systematic.size() + parity1.size() + parity2.size() + tail1_sys.size() +
           tail1_par.size() + tail2_sys.size() + tail2_par.size();
}

std::vector<std::uint8_t> Codeword::transmit_order() const {
    std::vector<std::uint8_t> bits;
    bits.reserve(total_bits());
    for (const auto* part : {&systematic, &parity1, &parity2, &tail1_sys, &tail1_par,
                             &tail2_sys, &tail2_par})
        bits.insert(bits.end(), part->begin(), part->end());
    return bits;
}

Codeword encode(std::span<const std::uint8_t> info, const Trellis& trellis,
                const Permutation& perm) {
    if (info.size() != perm.size())
        throw std::invalid_argument("encode: frame length does not match interleaver");

    Codeword cw;
    cw.systematic.assign(info.begin(), info.end());

    RscOutput enc1 = rsc_encode(info, trellis);
    cw.parity1 = std::move(enc1.parity);
    cw.tail1_sys = std::move(enc1.tail_sys);
    cw.tail1_par = std::move(enc1.tail_par);

    const std::vector<std::uint8_t> interleaved = permute(perm, info);
    RscOutput enc2 = rsc_encode(interleaved, trellis);
    cw.parity2 = std::move(enc2.parity);
    cw.tail2_sys = std::move(enc2.tail_sys);
    cw.tail2_par = std::move(enc2.tail_par);
    return cw;
}

double code_rate(std::size_t frame_size, int memory) {
    if (frame_size == 0)
        throw std::invalid_argument("code_rate: frame size must be >= 1");
    return static_cast<double>(frame_size) /
           (3.0 * static_cast<double>(frame_size) + 4.0 * memory);
}

} // namespace turbokit
