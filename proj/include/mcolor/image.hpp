#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcolor {

/// Dense 2-D scalar plane, row-major, top-left origin, values in [0,1].
class PlaneImage {
public:
    PlaneImage() = default;
    PlaneImage(int height, int width, float fill = 0.0f)
        : height_(height), width_(width),
          data_(static_cast<size_t>(height) * width, fill) {
        if (height < 0 || width < 0)
            throw std::invalid_argument("PlaneImage: negative dimensions");
    }

    int height() const { return height_; }
    int width() const { return width_; }
    size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    float& at(int y, int x) { return data_[static_cast<size_t>(y) * width_ + x]; }
    float at(int y, int x) const { return data_[static_cast<size_t>(y) * width_ + x]; }

    float* row(int y) { return data_.data() + static_cast<size_t>(y) * width_; }
    const float* row(int y) const { return data_.data() + static_cast<size_t>(y) * width_; }

    float* data() { return data_.data(); }
    const float* data() const { return data_.data(); }

    bool same_size(const PlaneImage& o) const {
        return height_ == o.height_ && width_ == o.width_;
    }

    /// Clamps every value into [0,1] in place; returns *this.
    PlaneImage& clamp01();

    double mean() const;

private:
    int height_ = 0;
    int width_ = 0;
    std::vector<float> data_;
};

/// 3-plane color image with standard-gamut nonlinear RGB planes in [0,1].
struct RgbImage {
    PlaneImage r, g, b;

    RgbImage() = default;
    RgbImage(int height, int width, float fill = 0.0f)
        : r(height, width, fill), g(height, width, fill), b(height, width, fill) {}

    int height() const { return r.height(); }
    int width() const { return r.width(); }
    bool same_size(const RgbImage& o) const { return r.same_size(o.r); }

    PlaneImage& plane(int k) { return k == 0 ? r : (k == 1 ? g : b); }
    const PlaneImage& plane(int k) const { return k == 0 ? r : (k == 1 ? g : b); }
};

/// CIELAB image. l is L*/100; a/b are affinely mapped from [-128,127] to [0,1].
struct LabImage {
    PlaneImage l, a, b;

    LabImage() = default;
    LabImage(int height, int width) : l(height, width), a(height, width), b(height, width) {}

    int height() const { return l.height(); }
    int width() const { return l.width(); }
};

/// Affine map between raw CIELAB chroma ([-128,127]) and stored [0,1] units.
inline float chroma_to_unit(double raw) { return static_cast<float>((raw + 128.0) / 255.0); }
inline double chroma_from_unit(float unit) { return unit * 255.0 - 128.0; }
/// Stored value of the neutral (a*=b*=0) axis.
inline constexpr float kNeutralChroma = 128.0f / 255.0f;

/// Capture geometry of a mono-color pair.
struct PairGeometry {
    int max_disparity = 30;     // D, horizontal search bound in pixels
    int vertical_tolerance = 15; // half-height of the vertical search band

    void validate() const {
        if (max_disparity < 0 || vertical_tolerance < 0)
            throw std::invalid_argument("PairGeometry: negative field");
    }
};

// ---- file I/O (PNG and binary PPM/PGM, 8- and 16-bit) ----

struct LoadedImage {
    RgbImage rgb;        // gray files have r==g==b
    int channels = 0;    // 1 or 3 as stored in the file
    int bit_depth = 0;   // 8 or 16
};

LoadedImage load_image(const std::string& path);
RgbImage load_rgb(const std::string& path);
/// Loads a single plane; color files are reduced to CIELAB lightness.
PlaneImage load_gray(const std::string& path);

void save_rgb(const std::string& path, const RgbImage& img, int bit_depth = 8);
void save_gray(const std::string& path, const PlaneImage& img, int bit_depth = 8);

} // namespace mcolor
