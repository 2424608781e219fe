#pragma once

#include <string>
#include <vector>

#include "mcolor/image.hpp"
#include "mcolor/jnd.hpp"
#include "mcolor/scribble.hpp"

namespace mcolor {

/// Prior statistics of the patch-sampling model: the distribution P(g) of the
/// number of JND-similar candidates a pixel obtains without sampling, and a
/// linear fit of the color-correctness prior P(B|g).
struct PriorTable {
    int pool = 256;                 // S^2
    std::vector<double> p_g;        // index 1..pool; index 0 unused
    double slope = 0.0;             // P(B|g) ~ slope * g + intercept, clamped to [0,1]
    double intercept = 1.0;

    PriorTable() : p_g(257, 0.0) { p_g[256] = 1.0; }
    explicit PriorTable(int pool_size)
        : pool(pool_size), p_g(static_cast<size_t>(pool_size) + 1, 0.0) {}

    double b_given_g(int g) const {
        double v = slope * g + intercept;
        return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
    }
    void normalize();
    void validate() const;
};

/// Exact hypergeometric probability of drawing r similar values when sampling
/// N from a pool containing g similar ones. Out-of-support parameters give 0.
double hypergeometric_term(int r, int g, int N, int pool = 256);

/// P(A_r): probability of exactly r similar values among N sampled, under the prior.
double prob_a_r(int r, int N, const PriorTable& prior);

/// Probability of a valid match: sum of P(A_r) for r in [T, N].
double prob_valid_match(int N, int T, const PriorTable& prior);

/// Posterior probability of a correct color estimate given exactly T similar samples.
double prob_confidence(int N, int T, const PriorTable& prior);

struct SelectionRow {
    int n, t;
    double phi_valid, phi_confidence;
};

/// Dense (N, T) grid of both criteria for plotting or table export.
std::vector<SelectionRow> emit_selection_table(const PriorTable& prior,
                                               const std::vector<int>& n_values,
                                               const std::vector<int>& t_values);

void save_selection_csv(const std::string& path, const std::vector<SelectionRow>& rows);

// ---- calibration ----

struct CalibrationPair {
    PlaneImage mono;
    LabImage guide;               // same dims as mono, intensity-matched
    PlaneImage truth_a, truth_b;  // ground-truth chroma in [0,1] units
    PairGeometry geometry;
};

/// Runs full (stride-1) matching on every pair, histograms the similar-candidate
/// count g, measures empirical color correctness per g bin and fits the linear
/// P(B|g) model. Deterministic for a fixed dataset and config.
PriorTable calibrate_priors(const std::vector<CalibrationPair>& dataset, MatchConfig cfg,
                            const JndParams& jnd_params = {}, int min_bin_samples = 50);

// ---- plain-text serialization: `g <int> <float>` x pool, slope, intercept ----

void save_prior(const std::string& path, const PriorTable& prior);
PriorTable load_prior(const std::string& path);

} // namespace mcolor
