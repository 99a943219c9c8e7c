#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "turbokit/maxstar.hpp"
#include "turbokit/trellis.hpp"

namespace turbokit {

// Log-domain branch metrics of one constituent code, stored per
// (step, state, input) — one slot per valid transition.
struct BranchMetrics {
    std::size_t n_steps = 0;
    std::uint32_t n_states = 0;
    std::vector<double> values; // [t * 2*n_states + state * 2 + input]

    double at(std::size_t t, std::uint32_t state, int input) const {
        return values[(t * n_states + state) * 2 + input];
    }
    double& at(std::size_t t, std::uint32_t state, int input) {
        return values[(t * n_states + state) * 2 + input];
    }
};

// Forward/backward path metrics over a terminated trellis, renormalized
// per step so that max over states is 0. Unreachable states carry the
// kLogZero sentinel.
struct StateMetrics {
    std::size_t n_steps = 0;
    std::uint32_t n_states = 0;
    std::vector<double> alpha; // (n_steps + 1) * n_states
    std::vector<double> beta;

    double alpha_at(std::size_t t, std::uint32_t state) const {
        return alpha[t * n_states + state];
    }
    double beta_at(std::size_t t, std::uint32_t state) const {
        return beta[t * n_states + state];
    }
};

struct SisoResult {
    std::vector<double> llr;       // a posteriori, info positions only
    std::vector<double> extrinsic; // llr - sys_llr - apriori, bit-exact
};

// ln gamma for each transition: half the bipolar systematic, parity and
// a priori contributions. All three sequences cover the full n + memory
// steps; the a priori entries on tail steps must be 0.
BranchMetrics branch_metrics(std::span<const double> sys_llr,
                             std::span<const double> par_llr,
                             std::span<const double> apriori,
                             const Trellis& trellis);

StateMetrics forward_backward(const BranchMetrics& gamma, const Trellis& trellis,
                              const MaxStarVariant& variant);

// Soft-in/soft-out decode of one constituent code. sys_llr and par_llr
// cover n + memory steps (info plus this encoder's tail); apriori covers
// only the n info positions. Tail steps shape the metrics but emit no LLR.
SisoResult siso_decode(std::span<const double> sys_llr,
                       std::span<const double> par_llr,
                       std::span<const double> apriori, const Trellis& trellis,
                       const MaxStarVariant& variant);

} // namespace turbokit
