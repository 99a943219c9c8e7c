#include "turbokit/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace turbokit {

double sigma_for(double ebno_db, double rate) {
    if (!(rate > 0.0) || rate > 1.0)
        throw std::invalid_argument("sigma_for: rate must be in (0, 1]");
    const double ebno = std::pow(10.0, ebno_db / 10.0);
    return std::sqrt(1.0 / (2.0 * rate * ebno));
}

ChannelParams make_channel_params(double ebno_db, double rate) {
    return {ebno_db, rate, sigma_for(ebno_db, rate)};
}

std::vector<double> modulate(std::span<const std::uint8_t> bits) {
    std::vector<double> symbols(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        symbols[i] = bits[i] ? 1.0 : -1.0;
    return symbols;
}

std::vector<double> add_awgn(std::span<const double> symbols,
                             const ChannelParams& params, Rng& rng) {
    std::vector<double> out(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i)
        out[i] = symbols[i] + params.sigma * rng.gaussian();
    return out;
}

double channel_llr(double y, const ChannelParams& params) {
    return 2.0 * y / (params.sigma * params.sigma);
}

std::vector<double> channel_llrs(std::span<const double> received,
                                 const ChannelParams& params) {
    std::vector<double> out(received.size());
    const double scale = 2.0 / (params.sigma * params.sigma);
    for (std::size_t i = 0; i < received.size(); ++i) out[i] = scale * received[i];
    return out;
}

SoftFrame demultiplex(std::span<const double> llr, const Permutation& perm,
                      int memory) {
    const std::size_t n = perm.size();
    const std::size_t m = static_cast<std::size_t>(memory);
    if (llr.size() != 3 * n + 4 * m)
        throw std::invalid_argument("demultiplex: received length does not match 3n + 4*memory");

    const auto seg = [&](std::size_t offset, std::size_t len) {
        return std::vector<double>(llr.begin() + offset, llr.begin() + offset + len);
    };

    SoftFrame frame;
    frame.sys_llr = seg(0, n);
    frame.par1_llr = seg(n, n);
    frame.sys2_llr = permute(perm, std::span<const double>(llr.first(n)));
    frame.par2_llr = seg(2 * n, n);

    // tails: [tail1 sys | tail1 par | tail2 sys | tail2 par]
    const std::size_t tails = 3 * n;
    const auto append = [&](std::vector<double>& dst, std::size_t offset) {
        dst.insert(dst.end(), llr.begin() + offset, llr.begin() + offset + m);
    };
    append(frame.sys_llr, tails);
    append(frame.par1_llr, tails + m);
    append(frame.sys2_llr, tails + 2 * m);
    append(frame.par2_llr, tails + 3 * m);
    return frame;
}

} // namespace turbokit
