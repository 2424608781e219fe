#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcolor/image.hpp"
#include "mcolor/jnd.hpp"

namespace mcolor {

enum class PixelStatus : uint8_t { valid, occluded, ambiguous, seeded, propagated };

/// Per-pixel chroma hints plus classification status. Chroma planes hold the
/// neutral value wherever the status carries no color.
struct ScribbleMap {
    int height = 0, width = 0;
    std::vector<PixelStatus> status;
    PlaneImage chroma_a, chroma_b;

    ScribbleMap() = default;
    ScribbleMap(int h, int w)
        : height(h), width(w),
          status(static_cast<size_t>(h) * w, PixelStatus::occluded),
          chroma_a(h, w, kNeutralChroma), chroma_b(h, w, kNeutralChroma) {}

    PixelStatus status_at(int y, int x) const { return status[static_cast<size_t>(y) * width + x]; }
    PixelStatus& status_at(int y, int x) { return status[static_cast<size_t>(y) * width + x]; }

    static bool carries_chroma(PixelStatus s) {
        return s == PixelStatus::valid || s == PixelStatus::seeded || s == PixelStatus::propagated;
    }
    /// True for pixels that constrain propagation (dense scribbles and seeds).
    bool is_hint(int y, int x) const {
        PixelStatus s = status_at(y, x);
        return s == PixelStatus::valid || s == PixelStatus::seeded;
    }

    size_t count(PixelStatus s) const;
};

enum class SearchDirection {
    negative, // guidance content shifts left: horizontal offsets in [-W_h, 0]
    positive, // offsets in [0, W_h]
    both      // offsets in [-W_h, W_h]
};

struct MatchConfig {
    int patch_size = 16;        // S
    int search_width = -1;      // W_h; -1 means "use PairGeometry::max_disparity"
    int search_height = 30;     // W_v, split evenly around the patch row
    int stride = 8;             // patch grid stride; (S/stride)^2 candidates per pixel
    int similar_required = 4;   // T
    double epsilon = 1e-4;      // Eq-weights denominator guard
    double ambiguity_tau = 5.0 / 255.0;
    SearchDirection direction = SearchDirection::negative;

    int samples_per_pixel() const { // N
        int k = patch_size / stride;
        return k * k;
    }
    void validate() const {
        if (patch_size < 1 || stride < 1) throw std::invalid_argument("MatchConfig: bad sizes");
        if (patch_size % stride != 0)
            throw std::invalid_argument("MatchConfig: stride must divide patch_size");
        if (similar_required < 1 || similar_required > samples_per_pixel())
            throw std::invalid_argument("MatchConfig: similar_required out of [1, N]");
        if (ambiguity_tau <= 0) throw std::invalid_argument("MatchConfig: ambiguity_tau <= 0");
        if (search_height < 0) throw std::invalid_argument("MatchConfig: search_height < 0");
        if (epsilon <= 0) throw std::invalid_argument("MatchConfig: epsilon <= 0");
    }
};

/// Per-pixel candidate triples in compressed row-major layout.
struct CandidateSet {
    int height = 0, width = 0;
    std::vector<uint32_t> offsets; // size height*width + 1
    std::vector<float> luma, chroma_a, chroma_b;

    int count(int y, int x) const {
        size_t i = static_cast<size_t>(y) * width + x;
        return static_cast<int>(offsets[i + 1] - offsets[i]);
    }
    std::span<const float> lumas(int y, int x) const {
        size_t i = static_cast<size_t>(y) * width + x;
        return {luma.data() + offsets[i], offsets[i + 1] - offsets[i]};
    }
    std::span<const float> chromas_a(int y, int x) const {
        size_t i = static_cast<size_t>(y) * width + x;
        return {chroma_a.data() + offsets[i], offsets[i + 1] - offsets[i]};
    }
    std::span<const float> chromas_b(int y, int x) const {
        size_t i = static_cast<size_t>(y) * width + x;
        return {chroma_b.data() + offsets[i], offsets[i + 1] - offsets[i]};
    }
};

// ---- elementary operations ----

/// Squared Frobenius norm of the luminance difference of two equal-size blocks.
double patch_distance(const PlaneImage& mono_patch, const PlaneImage& guide_patch_l);

struct MatchResult {
    int row = 0, col = 0;   // top-left of the minimizing guidance patch
    double distance = 0.0;
};

/// Exhaustive search for the most similar guidance patch inside the W_h x W_v
/// window around (row, col). Ties break on smallest displacement magnitude,
/// then window scan order (row-major).
MatchResult best_match(const PlaneImage& mono, int row, int col, const PlaneImage& guide_l,
                       const MatchConfig& cfg, const PairGeometry& geom);

/// Reciprocal-luminance-difference weights, normalized to sum 1.
std::vector<double> candidate_weights(double target_luma, std::span<const float> matched_lumas,
                                      double epsilon);

/// Weighted average of candidate chroma (one channel).
double weighted_color(std::span<const float> chroma, std::span<const double> weights);

/// True when the sorted values contain an adjacent gap greater than tau.
bool sorted_gap_exceeds(std::span<const float> values, double tau);

/// Color-ambiguity test over both chroma channels.
bool ambiguity_check(std::span<const float> chroma_a, std::span<const float> chroma_b, double tau);

// ---- dense scribbling ----

struct ScribbleOptions {
    bool keep_candidates = false;  // materialize the CandidateSet (memory-heavy at stride 1)
    bool keep_estimates = false;   // keep pre-outlier-removal color estimates for every pixel
    int threads = 0;               // 0: library default
};

struct ScribbleOutput {
    ScribbleMap map;
    CandidateSet candidates;             // empty unless keep_candidates
    std::vector<uint16_t> similar_count; // per pixel: candidates passing the JND test
    std::vector<uint16_t> candidate_count;
    PlaneImage estimate_a, estimate_b;   // empty unless keep_estimates
};

/// Block matching over the stride grid, candidate accumulation, Eq-weights color
/// estimation and outlier classification. Deterministic and schedule-independent.
ScribbleOutput dense_scribble(const PlaneImage& mono, const LabImage& guide, const JndMap& jnd,
                              const MatchConfig& cfg, const PairGeometry& geom,
                              const ScribbleOptions& opts = {});

/// Writes the status map as a color-coded PNG (debug aid).
void dump_status_png(const std::string& path, const ScribbleMap& map);
/// Writes the scribble chroma over mid luminance as a PNG (debug aid).
void dump_chroma_png(const std::string& path, const ScribbleMap& map);

} // namespace mcolor
