#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "turbokit/encoder.hpp"
#include "turbokit/turbo_decoder.hpp"

namespace turbokit {

// Counters of one Eb/N0 operating point. A point is censored when the
// frame cap stopped it before the bit-error target was reached.
struct SimPoint {
    double ebno_db = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t info_bits = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_errors = 0;
    bool censored = false;

    double ber() const {
        return info_bits ? static_cast<double>(bit_errors) / static_cast<double>(info_bits) : 0.0;
    }
    double fer() const {
        return frames ? static_cast<double>(frame_errors) / static_cast<double>(frames) : 0.0;
    }
};

struct SimConfig {
    GeneratorSpec generator;
    MaxStarVariant variant;
    int iterations = 8;
    std::size_t frame_size = 483;
    std::vector<double> ebno_grid_db;
    std::uint64_t min_bit_errors = 100; // 0 disables the error target
    std::uint64_t max_frames = 100000;  // 0 disables the frame cap
    std::uint64_t seed = 1;
    bool uncoded = false; // skip the code entirely: BPSK slicing at rate 1
    int threads = 1;
};

// Monte Carlo at one operating point. Frames are numbered and each draws
// its generator stream from (seed, ebno_index, frame index), so the result
// is a pure function of the config regardless of thread count.
SimPoint run_point(const SimConfig& cfg, double ebno_db, std::size_t ebno_index = 0);

// One SimPoint per grid entry, in grid order. The optional callback fires
// after each finished point (progress reporting).
std::vector<SimPoint> run_sweep(const SimConfig& cfg,
                                const std::function<void(const SimPoint&)>& on_point = {});

// CSV with the fixed header
//   ebno_db,frames,info_bits,bit_errors,frame_errors,ber,fer,censored
// ber/fer in scientific notation. The file overload throws
// std::runtime_error when the path cannot be written.
void write_csv(std::ostream& os, const std::vector<SimPoint>& points);
void write_csv(const std::string& path, const std::vector<SimPoint>& points);
std::vector<SimPoint> read_csv(std::istream& is);
std::vector<SimPoint> read_csv_file(const std::string& path);

// Octal shorthand for the generator pair, most significant digit first:
// (21, 37) is the 16-state code 1 + D^4 over 1 + D + D^2 + D^3 + D^4.
GeneratorSpec generator_from_octal(const std::string& feedforward_octal,
                                   const std::string& feedback_octal);

// "start:step:stop" in dB, or a single value
std::vector<double> parse_snr_grid(const std::string& text);

// A posteriori LLRs after every iteration for one simulated frame at the
// given point; reproduces exactly the frame the sweep would run.
std::vector<std::vector<double>> trace_frame_llrs(const SimConfig& cfg, double ebno_db,
                                                  std::size_t ebno_index = 0,
                                                  std::uint64_t frame_index = 0);

} // namespace turbokit
