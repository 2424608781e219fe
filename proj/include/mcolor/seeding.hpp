#pragma once

#include <span>
#include <vector>

#include "mcolor/image.hpp"
#include "mcolor/scribble.hpp"

namespace mcolor {

struct SeedConfig {
    int block_size = 20;           // B
    double level_tau = 9.0 / 255.0; // tau_l, luminance-level splitter threshold
    int neighbors = 3;             // N_p
    int neighbor_window = 50;      // W_N, centered on the seed pixel
    double epsilon = 1e-4;
    int match_window = 5;          // window for neighbor luminance similarity

    void validate() const {
        if (block_size < 1 || neighbors < 1 || neighbor_window < 1 || match_window < 1)
            throw std::invalid_argument("SeedConfig: nonpositive field");
        if (level_tau <= 0 || epsilon <= 0)
            throw std::invalid_argument("SeedConfig: nonpositive threshold");
        if (neighbor_window <= block_size)
            throw std::invalid_argument("SeedConfig: neighbor_window must exceed block_size");
    }
};

/// Groups values into luminance levels: sorted ascending, split where an
/// adjacent gap exceeds tau. Returns groups of input indices.
std::vector<std::vector<int>> luminance_levels(std::span<const float> lumas, double tau);

struct Seed {
    int y = 0, x = 0;
    float chroma_a = kNeutralChroma, chroma_b = kNeutralChroma;
};

struct SeedingResult {
    std::vector<Seed> seeds;  // row-major order
    int skipped_levels = 0;   // levels left uncovered (no scribble found nearby)
};

/// Places one seed in every luminance level of every B x B block that has no
/// color hint, fetching chroma from the most luminance-similar scribbles nearby.
/// Marks seeded pixels in the map.
SeedingResult generate_seeds(const PlaneImage& mono, ScribbleMap& scribbles,
                             const SeedConfig& cfg);

void save_seeds_csv(const std::string& path, const std::vector<Seed>& seeds);
void dump_seed_overlay_png(const std::string& path, const PlaneImage& mono,
                           const std::vector<Seed>& seeds);

} // namespace mcolor
