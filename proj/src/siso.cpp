#include "turbokit/siso.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace turbokit {

namespace {

inline double bipolar(std::uint8_t bit) { return bit ? 1.0 : -1.0; }

// Kernel templated on the variant so the recursions inline it.
template <MaxStarKind K>
inline double ms(double x, double y, const MaxStarVariant& v) {
    const double mx = std::max(x, y);
    if constexpr (K == MaxStarKind::max_only) {
        return mx;
    } else if constexpr (K == MaxStarKind::exact) {
        return mx + std::log1p(std::exp(-std::abs(x - y)));
    } else if constexpr (K == MaxStarKind::constant) {
        return std::abs(x - y) <= v.constant_threshold ? mx + v.constant_offset : mx;
    } else {
        return mx + std::max(0.0, v.linear_slope * (std::abs(x - y) - v.linear_threshold));
    }
}

template <MaxStarKind K>
StateMetrics forward_backward_impl(const BranchMetrics& gamma, const Trellis& trellis,
                                   const MaxStarVariant& v) {
    const std::size_t T = gamma.n_steps;
    const std::uint32_t S = trellis.n_states();

    StateMetrics m;
    m.n_steps = T;
    m.n_states = S;
    m.alpha.assign((T + 1) * S, kLogZero);
    m.beta.assign((T + 1) * S, kLogZero);

    // terminated trellis: both recursions start and end in state 0
    m.alpha[0] = 0.0;
    m.beta[T * S] = 0.0;

    for (std::size_t t = 0; t < T; ++t) {
        const double* prev = &m.alpha[t * S];
        double* next = &m.alpha[(t + 1) * S];
        double peak = kLogZero;
        for (std::uint32_t s = 0; s < S; ++s) {
            const auto& pred = trellis.predecessors(s);
            const double a0 =
                log_sat_add(prev[pred[0].prev_state], gamma.at(t, pred[0].prev_state, pred[0].input));
            const double a1 =
                log_sat_add(prev[pred[1].prev_state], gamma.at(t, pred[1].prev_state, pred[1].input));
            next[s] = ms<K>(a0, a1, v);
            peak = std::max(peak, next[s]);
        }
        for (std::uint32_t s = 0; s < S; ++s)
            next[s] = std::max(next[s] - peak, kLogZero);
    }

    for (std::size_t t = T; t-- > 0;) {
        const double* next = &m.beta[(t + 1) * S];
        double* cur = &m.beta[t * S];
        double peak = kLogZero;
        for (std::uint32_t s = 0; s < S; ++s) {
            const double b0 =
                log_sat_add(next[trellis.step(s, 0).next_state], gamma.at(t, s, 0));
            const double b1 =
                log_sat_add(next[trellis.step(s, 1).next_state], gamma.at(t, s, 1));
            cur[s] = ms<K>(b0, b1, v);
            peak = std::max(peak, cur[s]);
        }
        for (std::uint32_t s = 0; s < S; ++s)
            cur[s] = std::max(cur[s] - peak, kLogZero);
    }
    return m;
}

template <MaxStarKind K>
SisoResult siso_decode_impl(std::span<const double> sys_llr,
                            std::span<const double> par_llr,
                            std::span<const double> apriori, const Trellis& trellis,
                            const MaxStarVariant& v) {
    const std::size_t T = sys_llr.size();
    const std::size_t n = apriori.size();

    // tail steps carry no a priori information
    std::vector<double> apriori_full(T, 0.0);
    std::copy(apriori.begin(), apriori.end(), apriori_full.begin());

    const BranchMetrics gamma = branch_metrics(sys_llr, par_llr, apriori_full, trellis);
    const StateMetrics m = forward_backward_impl<K>(gamma, trellis, v);

    const std::uint32_t S = trellis.n_states();
    SisoResult result;
    result.llr.resize(n);
    result.extrinsic.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
        // The systematic and a priori halves of gamma are constant within
        // each hypothesis set, so they factor out of the reductions; what
        // remains of the log-ratio is exactly the extrinsic term. Summing
        // the three parts back keeps llr = sys + apriori + extrinsic
        // bit-exact.
        double acc1 = kLogZero;
        double acc0 = kLogZero;
        for (std::uint32_t s = 0; s < S; ++s) {
            const double a = m.alpha_at(t, s);
            for (int input = 0; input < 2; ++input) {
                const auto& e = trellis.step(s, input);
                const double parity_metric =
                    0.5 * bipolar(e.parity) * par_llr[t];
                const double term = log_sat_add(log_sat_add(a, parity_metric),
                                                m.beta_at(t + 1, e.next_state));
                if (input)
                    acc1 = ms<K>(acc1, term, v);
                else
                    acc0 = ms<K>(acc0, term, v);
            }
        }
        result.extrinsic[t] = acc1 - acc0;
        result.llr[t] = sys_llr[t] + apriori[t] + result.extrinsic[t];
    }
    return result;
}

} // namespace

BranchMetrics branch_metrics(std::span<const double> sys_llr,
                             std::span<const double> par_llr,
                             std::span<const double> apriori,
                             const Trellis& trellis) {
    const std::size_t T = sys_llr.size();
    if (par_llr.size() != T || apriori.size() != T)
        throw std::invalid_argument("branch_metrics: input lengths differ");

    BranchMetrics gamma;
    gamma.n_steps = T;
    gamma.n_states = trellis.n_states();
    gamma.values.resize(T * trellis.n_states() * 2);
    for (std::size_t t = 0; t < T; ++t) {
        for (std::uint32_t s = 0; s < trellis.n_states(); ++s) {
            for (int input = 0; input < 2; ++input) {
                const auto& e = trellis.step(s, input);
                gamma.at(t, s, input) = 0.5 * bipolar(e.systematic) * sys_llr[t] +
                                        0.5 * bipolar(e.parity) * par_llr[t] +
                                        0.5 * bipolar(static_cast<std::uint8_t>(input)) *
                                            apriori[t];
            }
        }
    }
    return gamma;
}

StateMetrics forward_backward(const BranchMetrics& gamma, const Trellis& trellis,
                              const MaxStarVariant& variant) {
    if (gamma.n_states != trellis.n_states())
        throw std::invalid_argument("forward_backward: metrics built for another trellis");
    switch (variant.kind) {
        case MaxStarKind::exact:
            return forward_backward_impl<MaxStarKind::exact>(gamma, trellis, variant);
        case MaxStarKind::max_only:
            return forward_backward_impl<MaxStarKind::max_only>(gamma, trellis, variant);
        case MaxStarKind::constant:
            return forward_backward_impl<MaxStarKind::constant>(gamma, trellis, variant);
        case MaxStarKind::linear:
            return forward_backward_impl<MaxStarKind::linear>(gamma, trellis, variant);
    }
    throw std::logic_error("forward_backward: unknown variant");
}

SisoResult siso_decode(std::span<const double> sys_llr,
                       std::span<const double> par_llr,
                       std::span<const double> apriori, const Trellis& trellis,
                       const MaxStarVariant& variant) {
    const std::size_t T = sys_llr.size();
    const std::size_t n = apriori.size();
    if (par_llr.size() != T)
        throw std::invalid_argument("siso_decode: parity length differs from systematic");
    if (T != n + static_cast<std::size_t>(trellis.memory()))
        throw std::invalid_argument("siso_decode: expected info length + memory tail steps");
    if (n == 0) throw std::invalid_argument("siso_decode: empty frame");

    switch (variant.kind) {
        case MaxStarKind::exact:
            return siso_decode_impl<MaxStarKind::exact>(sys_llr, par_llr, apriori, trellis, variant);
        case MaxStarKind::max_only:
            return siso_decode_impl<MaxStarKind::max_only>(sys_llr, par_llr, apriori, trellis, variant);
        case MaxStarKind::constant:
            return siso_decode_impl<MaxStarKind::constant>(sys_llr, par_llr, apriori, trellis, variant);
        case MaxStarKind::linear:
            return siso_decode_impl<MaxStarKind::linear>(sys_llr, par_llr, apriori, trellis, variant);
    }
    throw std::logic_error("siso_decode: unknown variant");
}

} // namespace turbokit
