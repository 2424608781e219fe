#pragma once

#include <array>

#include "mcolor/image.hpp"

namespace mcolor {

/// Standard illuminant tag for the RGB -> CIELAB conversion.
enum class WhitePoint { d65 };

/// Converts one nonlinear sRGB triple to raw CIELAB (L* in [0,100], a*/b* around 0).
std::array<double, 3> srgb_to_lab(double r, double g, double b, WhitePoint wp = WhitePoint::d65);
/// Inverse of srgb_to_lab; out-of-gamut results are clamped to [0,1].
std::array<double, 3> lab_to_srgb(double L, double a, double b, WhitePoint wp = WhitePoint::d65);

LabImage rgb_to_lab(const RgbImage& rgb, WhitePoint wp = WhitePoint::d65);
RgbImage lab_to_rgb(const LabImage& lab, WhitePoint wp = WhitePoint::d65);

/// Per-pixel arithmetic mean of the R, G and B channels.
PlaneImage gray_of_color(const RgbImage& rgb);

} // namespace mcolor
