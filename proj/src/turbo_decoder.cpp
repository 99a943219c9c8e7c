#include "turbokit/turbo_decoder.hpp"

#include <stdexcept>

namespace turbokit {

std::vector<std::uint8_t> hard_decision(std::span<const double> llr) {
    std::vector<std::uint8_t> bits(llr.size());
    for (std::size_t i = 0; i < llr.size(); ++i)
        bits[i] = llr[i] > 0.0 ? 1 : 0;
    return bits;
}

DecodeOutput turbo_decode(const SoftFrame& frame, const Trellis& trellis,
                          const Permutation& perm, const DecoderConfig& cfg) {
    const std::size_t n = perm.size();
    const std::size_t steps = n + static_cast<std::size_t>(trellis.memory());
    if (frame.sys_llr.size() != steps || frame.par1_llr.size() != steps ||
        frame.sys2_llr.size() != steps || frame.par2_llr.size() != steps)
        throw std::invalid_argument("turbo_decode: frame dimensions do not match trellis/interleaver");
    if (cfg.iterations < 1)
        throw std::invalid_argument("turbo_decode: iterations must be >= 1");

    DecodeOutput out;
    std::vector<double> apriori1(n, 0.0);
    SisoResult second;
    for (int it = 0; it < cfg.iterations; ++it) {
        const SisoResult first =
            siso_decode(frame.sys_llr, frame.par1_llr, apriori1, trellis, cfg.variant);
        const std::vector<double> apriori2 = permute(perm, first.extrinsic);
        second = siso_decode(frame.sys2_llr, frame.par2_llr, apriori2, trellis, cfg.variant);
        // only the extrinsic part travels back; the systematic and a priori
        // shares would otherwise re-enter the loop as self-confirmation
        apriori1 = inverse_permute(perm, second.extrinsic);
        if (cfg.trace_llr)
            out.per_iteration_llr.push_back(inverse_permute(perm, second.llr));
    }
    out.final_llr = inverse_permute(perm, second.llr);
    out.bits = hard_decision(out.final_llr);
    return out;
}

} // namespace turbokit
