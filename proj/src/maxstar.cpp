#include "turbokit/maxstar.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace turbokit {

double correction_fc(double z, const MaxStarVariant& variant) {
    if (z < 0.0) throw std::domain_error("correction_fc: |x - y| cannot be negative");
    switch (variant.kind) {
        case MaxStarKind::exact:
            return std::log1p(std::exp(-z));
        case MaxStarKind::max_only:
            return 0.0;
        case MaxStarKind::constant:
            return z <= variant.constant_threshold ? variant.constant_offset : 0.0;
        case MaxStarKind::linear:
            return std::max(0.0, variant.linear_slope * (z - variant.linear_threshold));
    }
    return 0.0;
}

double maxstar(double x, double y, const MaxStarVariant& variant) {
    return std::max(x, y) + correction_fc(std::abs(x - y), variant);
}

} // namespace turbokit
