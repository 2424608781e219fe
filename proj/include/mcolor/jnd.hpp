#pragma once

#include "mcolor/image.hpp"

namespace mcolor {

/// Constants of the just-noticeable-difference model. Luminance units are [0,1].
struct JndParams {
    int background_window = 5;            // window of the local background mean
    double floor = 3.0 / 255.0;           // lower bound of the intensity term
    double texture_gain = 0.25;           // J_T = gain * local max gradient magnitude
    double texture_cap = 30.0 / 255.0;    // upper bound of the texture term
    int texture_window = 5;               // window of the local gradient maximum
};

/// Per-pixel perceptual luminance thresholds; every value in (0, 0.5].
struct JndMap {
    PlaneImage thresholds;
};

/// Intensity term: background-luminance adaptation curve (high in the dark,
/// minimum near mid-gray, mild rise toward white).
double jnd_luminance_term(double background, const JndParams& p = {});
/// Texture term from the local gradient magnitude.
double jnd_texture_term(double max_gradient, const JndParams& p = {});
/// Combination J = J_L + J_T - 0.3 min(J_L, J_T).
double jnd_combine(double jl, double jt);

JndMap compute_jnd(const PlaneImage& mono, const JndParams& p = {});

/// True when the luminance pair is perceptually indistinguishable.
inline bool is_similar(float a, float b, float jnd_at_a) {
    float d = a - b;
    if (d < 0) d = -d;
    return d < jnd_at_a;
}

} // namespace mcolor
