#pragma once

#include <optional>

#include "mcolor/image.hpp"
#include "mcolor/noise.hpp"

namespace mcolor {

struct DenoiseParams {
    int patch_size = 8;
    double threshold_multiplier = 2.7; // threshold = multiplier * sqrt(patch variance)
    int patches_per_pixel = 4;         // expected coverage of random overlapping patches

    void validate() const {
        if (patch_size < 4) throw std::invalid_argument("DenoiseParams: patch_size < 4");
        if (threshold_multiplier <= 0) throw std::invalid_argument("DenoiseParams: multiplier <= 0");
        if (patches_per_pixel < 1) throw std::invalid_argument("DenoiseParams: patches_per_pixel < 1");
    }
};

/// Per-pixel noise variance averaged over a patch_size window. With known
/// NoiseParams this evaluates the mixed Poisson-Gaussian law directly;
/// otherwise the variance is estimated from finest-scale diagonal differences.
PlaneImage estimate_noise_variance(const PlaneImage& img,
                                   const std::optional<NoiseParams>& noise,
                                   int patch_size = 8);

struct DenoiseResult {
    PlaneImage image;
    bool undersized = false; // input smaller than a patch, returned as-is
};

/// Randomized redundant DCT denoising: hard-thresholds the DCT coefficients of
/// randomly placed overlapping patches and aggregates them by uniform averaging.
/// Deterministic for a fixed seed.
DenoiseResult rrdct_denoise(const PlaneImage& img, const DenoiseParams& params,
                            const std::optional<NoiseParams>& noise, uint64_t rng_seed);

/// Applies rrdct_denoise to all three Lab planes (seeds derived from rng_seed).
LabImage rrdct_denoise(const LabImage& img, const DenoiseParams& params,
                       const std::optional<NoiseParams>& noise, uint64_t rng_seed);

} // namespace mcolor
