#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "turbokit/harness.hpp"

namespace {

turbokit::MaxStarVariant variant_from_name(const std::string& name) {
    using turbokit::MaxStarVariant;
    if (name == "log-map") return MaxStarVariant::exact();
    if (name == "max-log-map") return MaxStarVariant::max_only();
    if (name == "constant-log-map") return MaxStarVariant::constant();
    if (name == "linear-log-map") return MaxStarVariant::linear();
    throw std::invalid_argument("unknown algorithm: " + name);
}

void print_llr_trace(const turbokit::SimConfig& cfg, double ebno_db,
                     std::size_t ebno_index) {
    const auto trace = turbokit::trace_frame_llrs(cfg, ebno_db, ebno_index);
    for (std::size_t it = 0; it < trace.size(); ++it) {
        double sum = 0.0;
        for (const double v : trace[it]) sum += std::abs(v);
        std::fprintf(stderr, "# trace ebno=%.6g iter=%zu mean_abs_llr=%.6g\n",
                     ebno_db, it + 1, sum / static_cast<double>(trace[it].size()));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"turbokit: turbo-code BER/FER Monte Carlo simulator"};
    app.require_subcommand(1);

    auto* sim = app.add_subcommand("simulate", "Sweep Eb/N0 and write BER/FER CSV");
    std::string algorithm = "log-map";
    int iterations = 8;
    std::size_t frame_size = 483;
    std::string gen_ff = "21";
    std::string gen_fb = "37";
    std::string snr;
    std::uint64_t min_errors = 100;
    std::uint64_t max_frames = 100000;
    std::uint64_t seed = 1;
    std::string out_path;
    bool uncoded = false;
    bool trace_llr = false;
    int threads = 1;

    sim->add_option("--algorithm", algorithm, "Decoder kernel")
        ->check(CLI::IsMember({"log-map", "max-log-map", "constant-log-map",
                               "linear-log-map"}));
    sim->add_option("--iterations", iterations, "Full decoder iterations")
        ->check(CLI::PositiveNumber);
    sim->add_option("--frame-size", frame_size, "Information bits per frame")
        ->check(CLI::PositiveNumber);
    sim->add_option("--gen-ff", gen_ff, "Feedforward polynomial, octal");
    sim->add_option("--gen-fb", gen_fb, "Feedback polynomial, octal");
    sim->add_option("--snr", snr, "Eb/N0 grid in dB: start:step:stop or one value")
        ->required();
    sim->add_option("--min-errors", min_errors,
                    "Stop a point after this many bit errors (0: no target)");
    sim->add_option("--max-frames", max_frames,
                    "Frame cap per point (0: no cap)");
    sim->add_option("--seed", seed, "Master seed");
    sim->add_option("--out", out_path, "Output CSV path")->required();
    sim->add_flag("--uncoded", uncoded, "Uncoded BPSK baseline at rate 1");
    sim->add_flag("--trace-llr", trace_llr,
                  "Print per-iteration LLR summary of frame 0 at each point");
    sim->add_option("--threads", threads, "Worker threads per point")
        ->check(CLI::PositiveNumber);

    auto* rate = app.add_subcommand("rate", "Print the terminated code rate");
    std::size_t rate_n = 0;
    int rate_memory = 0;
    rate->add_option("--frame-size", rate_n, "Information bits per frame")
        ->required()
        ->check(CLI::PositiveNumber);
    rate->add_option("--memory", rate_memory, "Encoder memory")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (rate->parsed()) {
            std::printf("%.4f\n", turbokit::code_rate(rate_n, rate_memory));
            return 0;
        }

        turbokit::SimConfig cfg;
        cfg.generator = turbokit::generator_from_octal(gen_ff, gen_fb);
        cfg.variant = variant_from_name(algorithm);
        cfg.iterations = iterations;
        cfg.frame_size = frame_size;
        cfg.ebno_grid_db = turbokit::parse_snr_grid(snr);
        cfg.min_bit_errors = min_errors;
        cfg.max_frames = max_frames;
        cfg.seed = seed;
        cfg.uncoded = uncoded;
        cfg.threads = threads;

        std::size_t index = 0;
        const auto points = turbokit::run_sweep(cfg, [&](const turbokit::SimPoint& p) {
            std::fprintf(stderr, "ebno=%.6g dB  frames=%llu  ber=%.6e  fer=%.6e%s\n",
                         p.ebno_db, static_cast<unsigned long long>(p.frames), p.ber(),
                         p.fer(), p.censored ? "  (censored)" : "");
            if (trace_llr && !uncoded) print_llr_trace(cfg, p.ebno_db, index);
            ++index;
        });
        turbokit::write_csv(out_path, points);
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
