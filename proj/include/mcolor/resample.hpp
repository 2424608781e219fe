#pragma once

#include "mcolor/image.hpp"

namespace mcolor {

/// Bicubic resize to an explicit output size (Catmull-Rom kernel, clamped borders).
PlaneImage resize_bicubic(const PlaneImage& img, int out_height, int out_width);

/// Bicubic upsampling by a scale factor >= 1; output dims = round(input * factor).
PlaneImage upsample_bicubic(const PlaneImage& img, double factor);

RgbImage resize_bicubic(const RgbImage& img, int out_height, int out_width);

enum class IntensityMatchMode { global, local };

struct IntensityMatchResult {
    PlaneImage plane;        // lambda-scaled gray, clamped to [0,1]
    double lambda = 1.0;     // global ratio (1.0 in local mode)
    bool degenerate = false; // set when mean(gray) fell below the guard
};

/// Scales `gray` onto the intensity level of `mono` via the mean luminance ratio.
/// Local mode computes the ratio per pixel over a square window of the given size.
IntensityMatchResult intensity_match(const PlaneImage& mono, const PlaneImage& gray,
                                     IntensityMatchMode mode = IntensityMatchMode::global,
                                     int window = 51);

} // namespace mcolor
