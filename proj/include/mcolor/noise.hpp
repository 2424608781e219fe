#pragma once

#include <cstdint>

namespace mcolor {

/// Mixed Poisson-Gaussian noise model: per-pixel variance = alpha * value + sigma2.
struct NoiseParams {
    double alpha = 0.0;
    double sigma2 = 0.0;
    uint64_t seed = 0;
};

} // namespace mcolor
