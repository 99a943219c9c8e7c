#pragma once

namespace turbokit {

// Log-domain zero. Kept finite (instead of -inf) so that differences of
// empty-hypothesis reductions stay NaN-free; additions saturate here.
inline constexpr double kLogZero = -1e30;

inline double log_sat_add(double a, double b) {
    const double s = a + b;
    return s < kLogZero ? kLogZero : s;
}

enum class MaxStarKind { exact, max_only, constant, linear };

// max*(x, y) = max(x, y) + f_c(|x - y|) kernel selector. The correction
// constants of the constant and linear approximations live here so tests
// can vary them.
struct MaxStarVariant {
    MaxStarKind kind = MaxStarKind::exact;
    double constant_offset = 0.5;     // C, applied while |x - y| <= T_c
    double constant_threshold = 1.5;  // T_c
    double linear_slope = -0.24904;   // a, correction max(0, a * (|x - y| - T_l))
    double linear_threshold = 2.5068; // T_l

    static MaxStarVariant exact() { return {MaxStarKind::exact}; }
    static MaxStarVariant max_only() { return {MaxStarKind::max_only}; }
    static MaxStarVariant constant() { return {MaxStarKind::constant}; }
    static MaxStarVariant linear() { return {MaxStarKind::linear}; }
};

// Correction term f_c(z) for z = |x - y| >= 0; throws std::domain_error on
// negative z. The exact kernel uses ln(1 + e^-z).
double correction_fc(double z, const MaxStarVariant& variant);

// max(x, y) + f_c(|x - y|); absorbs the kLogZero sentinel in every variant.
double maxstar(double x, double y, const MaxStarVariant& variant);

} // namespace turbokit
