#include "turbokit/trellis.hpp"

#include <cassert>
#include <stdexcept>

namespace turbokit {

namespace {

int poly_degree(const std::vector<std::uint8_t>& coeffs) {
    int deg = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (coeffs[j]) deg = static_cast<int>(j);
    return deg;
}

// XOR of the tap coefficients against the register contents. Register bit
// at delay j (1-based) sits at state bit (memory - j).
std::uint8_t tap_parity(const std::vector<std::uint8_t>& coeffs, std::uint32_t state,
                        int memory) {
    std::uint8_t acc = 0;
    for (int j = 1; j <= memory; ++j) {
        const std::uint8_t tap =
            (static_cast<std::size_t>(j) < coeffs.size()) ? coeffs[j] : 0;
        acc ^= tap & static_cast<std::uint8_t>((state >> (memory - j)) & 1u);
    }
    return acc;
}

} // namespace

int GeneratorSpec::memory() const {
    return std::max(poly_degree(feedforward), poly_degree(feedback));
}

void GeneratorSpec::validate() const {
    if (feedback.empty() || feedback[0] != 1)
        throw std::invalid_argument(
            "GeneratorSpec: feedback polynomial must have constant term 1");
    if (memory() < 1)
        throw std::invalid_argument("GeneratorSpec: memory must be at least 1");
}

Trellis::Trellis(const GeneratorSpec& spec) {
    spec.validate();
    memory_ = spec.memory();
    n_states_ = 1u << memory_;
    edges_.resize(static_cast<std::size_t>(n_states_) * 2);
    preds_.resize(n_states_);
    termination_.resize(n_states_);

    std::vector<std::uint8_t> seen(n_states_, 0);
    for (std::uint32_t state = 0; state < n_states_; ++state) {
        const std::uint8_t fb = tap_parity(spec.feedback, state, memory_);
        const std::uint8_t ff_reg = tap_parity(spec.feedforward, state, memory_);
        for (int input = 0; input < 2; ++input) {
            const std::uint8_t a = static_cast<std::uint8_t>(input) ^ fb;
            const std::uint8_t parity =
                static_cast<std::uint8_t>((spec.feedforward.empty() ? 0 : spec.feedforward[0]) & a) ^
                ff_reg;
            const std::uint32_t next =
                (static_cast<std::uint32_t>(a) << (memory_ - 1)) | (state >> 1);
            edges_[state * 2 + input] = {next, static_cast<std::uint8_t>(input), parity};
            preds_[next][seen[next]++] = {state, static_cast<std::uint8_t>(input)};
        }
        // the feedback-cancelling input leaves a = 0 and shifts toward zero
        termination_[state] = fb;
    }
    for (std::uint32_t s = 0; s < n_states_; ++s)
        assert(seen[s] == 2); // every state has exactly two incoming edges
}

const Trellis::Edge& Trellis::step(std::uint32_t state, int input) const {
    assert(state < n_states_ && (input == 0 || input == 1));
    return edges_[state * 2 + input];
}

const std::array<Trellis::Pred, 2>& Trellis::predecessors(std::uint32_t next_state) const {
    assert(next_state < n_states_);
    return preds_[next_state];
}

std::uint8_t Trellis::termination_input(std::uint32_t state) const {
    assert(state < n_states_);
    return termination_[state];
}

} // namespace turbokit
