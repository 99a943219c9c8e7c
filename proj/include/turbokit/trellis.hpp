#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace turbokit {

// Generator polynomials of a rate-1/2 recursive systematic convolutional
// encoder, as coefficient bit-vectors with the constant term at index 0.
// The feedback polynomial must include the current input (constant term 1).
struct GeneratorSpec {
    std::vector<std::uint8_t> feedforward;
    std::vector<std::uint8_t> feedback;

    // max degree over both polynomials
    int memory() const;

    // throws std::invalid_argument on a violated invariant
    void validate() const;
};

// State-transition table of the RSC encoder. The state packs the shift
// register with the most recent bit in the top position, so state 0 is the
// empty register and shifting a zero in halves the state.
// Immutable after construction; safe to share across threads.
class Trellis {
  public:
    struct Edge {
        std::uint32_t next_state;
        std::uint8_t systematic; // equals the input bit
        std::uint8_t parity;
        bool operator==(const Edge&) const = default;
    };
    struct Pred {
        std::uint32_t prev_state;
        std::uint8_t input;
        bool operator==(const Pred&) const = default;
    };

    explicit Trellis(const GeneratorSpec& spec);

    int memory() const { return memory_; }
    std::uint32_t n_states() const { return n_states_; }

    // single-transition lookup; state must be < n_states()
    const Edge& step(std::uint32_t state, int input) const;

    // the two (predecessor, input) pairs that lead into next_state
    const std::array<Pred, 2>& predecessors(std::uint32_t next_state) const;

    // Input bit that cancels the feedback, shifting the register one step
    // toward zero; `memory` applications from any state reach state 0.
    std::uint8_t termination_input(std::uint32_t state) const;

    bool operator==(const Trellis&) const = default;

  private:
    int memory_ = 0;
    std::uint32_t n_states_ = 0;
    std::vector<Edge> edges_;                // [state * 2 + input]
    std::vector<std::array<Pred, 2>> preds_; // [next_state]
    std::vector<std::uint8_t> termination_;  // [state]
};

inline Trellis build_trellis(const GeneratorSpec& spec) { return Trellis(spec); }

} // namespace turbokit
