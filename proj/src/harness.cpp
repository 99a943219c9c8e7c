#include "turbokit/harness.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "turbokit/rng.hpp"

namespace turbokit {

namespace {

std::vector<std::uint8_t> random_frame(std::size_t n, Rng& rng) {
    std::vector<std::uint8_t> info(n);
    for (auto& b : info) b = static_cast<std::uint8_t>(rng.bit());
    return info;
}

std::uint32_t count_bit_errors(const std::vector<std::uint8_t>& a,
                               const std::vector<std::uint8_t>& b) {
    std::uint32_t errors = 0;
    for (std::size_t i = 0; i < a.size(); ++i) errors += a[i] != b[i];
    return errors;
}

// Everything one frame needs; shared read-only across worker threads.
struct PointContext {
    const SimConfig& cfg;
    ChannelParams params;
    std::size_t ebno_index;
    const Trellis* trellis = nullptr;     // null when uncoded
    const Permutation* perm = nullptr;
    DecoderConfig decoder;
};

std::uint32_t simulate_frame(const PointContext& ctx, std::uint64_t frame_index) {
    Rng rng(derive_stream(ctx.cfg.seed, ctx.ebno_index, frame_index));
    const std::vector<std::uint8_t> info = random_frame(ctx.cfg.frame_size, rng);

    if (ctx.cfg.uncoded) {
        const auto symbols = modulate(info);
        const auto received = add_awgn(symbols, ctx.params, rng);
        const auto llrs = channel_llrs(received, ctx.params);
        return count_bit_errors(info, hard_decision(llrs));
    }

    const Codeword cw = encode(info, *ctx.trellis, *ctx.perm);
    const auto symbols = modulate(cw.transmit_order());
    const auto received = add_awgn(symbols, ctx.params, rng);
    const auto llrs = channel_llrs(received, ctx.params);
    const SoftFrame frame = demultiplex(llrs, *ctx.perm, ctx.trellis->memory());
    const DecodeOutput out = turbo_decode(frame, *ctx.trellis, *ctx.perm, ctx.decoder);
    return count_bit_errors(info, out.bits);
}

// Per-frame error counts for frame indices [first, first + count), computed
// with `threads` workers. Frame order inside the result is by index, so the
// caller's fold does not depend on scheduling.
std::vector<std::uint32_t> run_batch(const PointContext& ctx, std::uint64_t first,
                                     std::size_t count, int threads) {
    std::vector<std::uint32_t> errors(count);
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            errors[i] = simulate_frame(ctx, first + i);
        return errors;
    }
    const std::size_t workers = std::min<std::size_t>(threads, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers)
                errors[i] = simulate_frame(ctx, first + i);
        });
    }
    for (auto& t : pool) t.join();
    return errors;
}

void validate(const SimConfig& cfg) {
    if (cfg.frame_size == 0)
        throw std::invalid_argument("SimConfig: frame size must be >= 1");
    if (cfg.min_bit_errors == 0 && cfg.max_frames == 0)
        throw std::invalid_argument("SimConfig: need an error target or a frame cap");
    if (cfg.iterations < 1)
        throw std::invalid_argument("SimConfig: iterations must be >= 1");
}

PointContext make_context(const SimConfig& cfg, double ebno_db, std::size_t ebno_index,
                          const Trellis* trellis, const Permutation* perm) {
    const double rate =
        cfg.uncoded ? 1.0 : code_rate(cfg.frame_size, trellis->memory());
    return {cfg,
            make_channel_params(ebno_db, rate),
            ebno_index,
            trellis,
            perm,
            {cfg.variant, cfg.iterations, false}};
}

} // namespace

SimPoint run_point(const SimConfig& cfg, double ebno_db, std::size_t ebno_index) {
    validate(cfg);

    // trellis and permutation are shared read-only by every frame
    std::optional<Trellis> trellis;
    std::optional<Permutation> perm;
    if (!cfg.uncoded) {
        trellis.emplace(cfg.generator);
        perm.emplace(make_random_interleaver(cfg.frame_size,
                                             derive_stream(cfg.seed, 0x1eaf, 0)));
    }
    const PointContext ctx = make_context(cfg, ebno_db, ebno_index,
                                          trellis ? &*trellis : nullptr,
                                          perm ? &*perm : nullptr);

    const std::uint64_t frame_cap =
        cfg.max_frames == 0 ? std::numeric_limits<std::uint64_t>::max() : cfg.max_frames;
    const std::size_t batch =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::max(cfg.threads, 1)) * 16);

    SimPoint point;
    point.ebno_db = ebno_db;
    bool reached_target = false;
    std::uint64_t next_frame = 0;
    while (!reached_target && next_frame < frame_cap) {
        const std::size_t count = static_cast<std::size_t>(
            std::min<std::uint64_t>(batch, frame_cap - next_frame));
        const auto errors = run_batch(ctx, next_frame, count, cfg.threads);
        for (std::size_t i = 0; i < count; ++i) {
            point.frames += 1;
            point.info_bits += cfg.frame_size;
            point.bit_errors += errors[i];
            point.frame_errors += errors[i] > 0;
            if (cfg.min_bit_errors > 0 && point.bit_errors >= cfg.min_bit_errors) {
                reached_target = true;
                break;
            }
        }
        next_frame += count;
    }
    point.censored = !reached_target && cfg.min_bit_errors > 0;
    return point;
}

std::vector<SimPoint> run_sweep(const SimConfig& cfg,
                                const std::function<void(const SimPoint&)>& on_point) {
    validate(cfg);
    if (cfg.ebno_grid_db.empty())
        throw std::invalid_argument("run_sweep: empty Eb/N0 grid");
    std::vector<SimPoint> points;
    points.reserve(cfg.ebno_grid_db.size());
    for (std::size_t i = 0; i < cfg.ebno_grid_db.size(); ++i) {
        points.push_back(run_point(cfg, cfg.ebno_grid_db[i], i));
        if (on_point) on_point(points.back());
    }
    return points;
}

void write_csv(std::ostream& os, const std::vector<SimPoint>& points) {
    os << "ebno_db,frames,info_bits,bit_errors,frame_errors,ber,fer,censored\n";
    char line[256];
    for (const auto& p : points) {
        std::snprintf(line, sizeof(line), "%.6g,%llu,%llu,%llu,%llu,%.6e,%.6e,%d\n",
                      p.ebno_db, static_cast<unsigned long long>(p.frames),
                      static_cast<unsigned long long>(p.info_bits),
                      static_cast<unsigned long long>(p.bit_errors),
                      static_cast<unsigned long long>(p.frame_errors), p.ber(),
                      p.fer(), p.censored ? 1 : 0);
        os << line;
    }
}

void write_csv(const std::string& path, const std::vector<SimPoint>& points) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_csv(os, points);
    os.flush();
    if (!os) throw std::runtime_error("write failed: " + path);
}

std::vector<SimPoint> read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) ||
        line != "ebno_db,frames,info_bits,bit_errors,frame_errors,ber,fer,censored")
        throw std::runtime_error("read_csv: missing or unexpected header");

    std::vector<SimPoint> points;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 8)
            throw std::runtime_error("read_csv: malformed row: " + line);
        SimPoint p;
        p.ebno_db = std::stod(fields[0]);
        p.frames = std::stoull(fields[1]);
        p.info_bits = std::stoull(fields[2]);
        p.bit_errors = std::stoull(fields[3]);
        p.frame_errors = std::stoull(fields[4]);
        p.censored = fields[7] == "1";
        points.push_back(p);
    }
    return points;
}

std::vector<SimPoint> read_csv_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return read_csv(is);
}

GeneratorSpec generator_from_octal(const std::string& feedforward_octal,
                                   const std::string& feedback_octal) {
    const auto parse = [](const std::string& s) -> std::uint64_t {
        if (s.empty()) throw std::invalid_argument("empty generator polynomial");
        std::uint64_t value = 0;
        for (const char c : s) {
            if (c < '0' || c > '7')
                throw std::invalid_argument("generator polynomial is not octal: " + s);
            value = value * 8 + static_cast<std::uint64_t>(c - '0');
        }
        if (value == 0) throw std::invalid_argument("generator polynomial is zero");
        return value;
    };
    const std::uint64_t ff = parse(feedforward_octal);
    const std::uint64_t fb = parse(feedback_octal);

    // the shared bit width fixes the memory; the top bit is the constant term
    const int width = std::max(std::bit_width(ff), std::bit_width(fb));
    const int memory = width - 1;
    const auto to_coeffs = [&](std::uint64_t value) {
        std::vector<std::uint8_t> coeffs(static_cast<std::size_t>(width));
        for (int degree = 0; degree < width; ++degree)
            coeffs[degree] = static_cast<std::uint8_t>((value >> (memory - degree)) & 1u);
        return coeffs;
    };
    GeneratorSpec spec{to_coeffs(ff), to_coeffs(fb)};
    spec.validate();
    return spec;
}

std::vector<double> parse_snr_grid(const std::string& text) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ':')) {
        std::size_t used = 0;
        const double value = std::stod(token, &used);
        if (used != token.size())
            throw std::invalid_argument("bad Eb/N0 value: " + token);
        parts.push_back(value);
    }
    if (parts.size() == 1) return parts;
    if (parts.size() != 3)
        throw std::invalid_argument("Eb/N0 grid must be a value or start:step:stop");

    const double start = parts[0], step = parts[1], stop = parts[2];
    if (stop < start) throw std::invalid_argument("Eb/N0 grid: stop is below start");
    if (start != stop && step <= 0.0)
        throw std::invalid_argument("Eb/N0 grid: step must be positive");

    std::vector<double> grid;
    if (start == stop) {
        grid.push_back(start);
        return grid;
    }
    for (double v = start; v <= stop + 1e-9; v += step) grid.push_back(v);
    return grid;
}

std::vector<std::vector<double>> trace_frame_llrs(const SimConfig& cfg, double ebno_db,
                                                  std::size_t ebno_index,
                                                  std::uint64_t frame_index) {
    validate(cfg);
    if (cfg.uncoded)
        throw std::invalid_argument("trace_frame_llrs: uncoded runs have no iterations");

    Trellis trellis = build_trellis(cfg.generator);
    Permutation perm =
        make_random_interleaver(cfg.frame_size, derive_stream(cfg.seed, 0x1eaf, 0));
    PointContext ctx = make_context(cfg, ebno_db, ebno_index, &trellis, &perm);
    ctx.decoder.trace_llr = true;

    Rng rng(derive_stream(cfg.seed, ebno_index, frame_index));
    const std::vector<std::uint8_t> info = random_frame(cfg.frame_size, rng);
    const Codeword cw = encode(info, trellis, perm);
    const auto symbols = modulate(cw.transmit_order());
    const auto received = add_awgn(symbols, ctx.params, rng);
    const auto llrs = channel_llrs(received, ctx.params);
    const SoftFrame frame = demultiplex(llrs, perm, trellis.memory());
    return turbo_decode(frame, trellis, perm, ctx.decoder).per_iteration_llr;
}

} // namespace turbokit
