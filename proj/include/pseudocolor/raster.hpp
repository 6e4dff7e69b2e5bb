// Copyright (c) the pseudocolor authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PSEUDOCOLOR_RASTER_HPP_
#define PSEUDOCOLOR_RASTER_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pseudocolor {

// Rounds half away from zero and saturates to [0, 255].
std::uint8_t round_to_u8(double v);

// Single-band 8-bit intensity image, row-major, top-left origin.
class GrayRaster {
 public:
  GrayRaster(std::size_t width, std::size_t height, std::uint8_t fill = 0);
  GrayRaster(std::size_t width, std::size_t height,
             std::vector<std::uint8_t> data);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t size() const { return data_.size(); }

  std::uint8_t at(std::size_t x, std::size_t y) const {
    return data_[y * width_ + x];
  }
  std::uint8_t& at(std::size_t x, std::size_t y) {
    return data_[y * width_ + x];
  }

  std::span<const std::uint8_t> pixels() const { return data_; }
  std::span<std::uint8_t> pixels() { return data_; }

  friend bool operator==(const GrayRaster&, const GrayRaster&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> data_;
};

// Three-channel 8-bit display image, interleaved R, G, B.
class ColorRaster8 {
 public:
  ColorRaster8(std::size_t width, std::size_t height);
  ColorRaster8(std::size_t width, std::size_t height,
               std::vector<std::uint8_t> interleaved);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t pixel_count() const { return width_ * height_; }

  std::uint8_t at(std::size_t x, std::size_t y, int channel) const {
    return data_[(y * width_ + x) * 3 + channel];
  }
  std::uint8_t& at(std::size_t x, std::size_t y, int channel) {
    return data_[(y * width_ + x) * 3 + channel];
  }

  std::array<std::uint8_t, 3> pixel(std::size_t index) const {
    return {data_[index * 3], data_[index * 3 + 1], data_[index * 3 + 2]};
  }
  void set_pixel(std::size_t index, std::array<std::uint8_t, 3> rgb) {
    data_[index * 3] = rgb[0];
    data_[index * 3 + 1] = rgb[1];
    data_[index * 3 + 2] = rgb[2];
  }

  std::span<const std::uint8_t> interleaved() const { return data_; }

  friend bool operator==(const ColorRaster8&, const ColorRaster8&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> data_;
};

// (alpha, beta) recorded alongside a colorized product.
struct ColorProvenance {
  double alpha;
  double beta;

  friend bool operator==(const ColorProvenance&,
                         const ColorProvenance&) = default;
};

// Lossless colorized product: three unclipped real-valued planes.
// All channel values are finite and >= 0.
class ColorRasterF {
 public:
  ColorRasterF(std::size_t width, std::size_t height);
  ColorRasterF(std::size_t width, std::size_t height,
               std::array<std::vector<double>, 3> planes,
               std::optional<ColorProvenance> meta = std::nullopt);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t pixel_count() const { return width_ * height_; }

  std::span<const double> plane(int channel) const { return planes_[channel]; }

  double at(std::size_t x, std::size_t y, int channel) const {
    return planes_[channel][y * width_ + x];
  }

  const std::optional<ColorProvenance>& meta() const { return meta_; }

  friend bool operator==(const ColorRasterF&, const ColorRasterF&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::array<std::vector<double>, 3> planes_;
  std::optional<ColorProvenance> meta_;
};

// Real-valued single plane; the working type for metrics and spectral
// filtering.
struct PlaneF {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<double> values;

  PlaneF() = default;
  PlaneF(std::size_t w, std::size_t h, double fill = 0.0)
      : width(w), height(h), values(w * h, fill) {}

  double at(std::size_t x, std::size_t y) const { return values[y * width + x]; }
  double& at(std::size_t x, std::size_t y) { return values[y * width + x]; }
};

PlaneF to_plane(const GrayRaster& gray);
PlaneF channel_plane(const ColorRaster8& image, int channel);
GrayRaster to_gray(const PlaneF& plane);  // rounds and clamps

// Clamps each channel to [0, 255], then rounds half away from zero.
ColorRaster8 render(const ColorRasterF& image);

}  // namespace pseudocolor

#endif  // PSEUDOCOLOR_RASTER_HPP_
