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

#ifndef PSEUDOCOLOR_METRICS_HPP_
#define PSEUDOCOLOR_METRICS_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pseudocolor/raster.hpp"

namespace pseudocolor {

// Root mean squared difference. Throws DimensionMismatch.
double rmse(const PlaneF& a, const PlaneF& b);
// Over all three channels of each pixel.
double rmse(const ColorRaster8& a, const ColorRaster8& b);

// RMSE between the hexcone HSV saturation planes, already in [0, 1].
double saturation_error(const ColorRaster8& colorized,
                        const ColorRaster8& reference);

struct SsimConfig {
  int window_size = 11;  // odd
  double sigma = 1.5;
  double dynamic_range = 255.0;
  double c1 = 6.5025;   // (0.01 L)^2
  double c2 = 58.5225;  // (0.03 L)^2
  double c3 = 29.26125; // c2 / 2

  // Constants derived from L as above.
  static SsimConfig for_range(double dynamic_range);
};

void validate(const SsimConfig& config);

// Separable Gaussian taps normalized to sum to 1; the 2-D window is their
// outer product.
std::vector<double> ssim_window_taps(const SsimConfig& config);

// Weighted window statistics at every fully interior window position. The
// output planes are (w - n + 1) x (h - n + 1); entry (x, y) describes the
// window whose top-left corner is (x, y).
struct LocalStats {
  PlaneF mean_a;
  PlaneF mean_b;
  PlaneF var_a;
  PlaneF var_b;
  PlaneF cov;
};

LocalStats local_stats(const PlaneF& a, const PlaneF& b,
                       const SsimConfig& config);

struct SsimResult {
  PlaneF map;
  double mean = 0.0;
};

// Luminance * contrast * structure with weighted window statistics. With
// c3 == c2 / 2 this is evaluated in the collapsed two-factor form.
// Throws DimensionMismatch and ImageTooSmall.
SsimResult ssim(const PlaneF& a, const PlaneF& b, const SsimConfig& config);

struct SsimColor {
  std::array<double, 3> bands{};
  double mean = 0.0;
};

SsimColor ssim_color(const ColorRaster8& a, const ColorRaster8& b,
                     const SsimConfig& config);

// One colorized candidate. `lossless` is set for products of the
// reversible color function; `display` is what gets compared.
struct ReportVariant {
  std::string label;
  ColorRaster8 display;
  std::optional<ColorRasterF> lossless;
};

struct MetricReport {
  std::string method_label;
  std::optional<bool> reversible;  // needs the grayscale input
  std::optional<double> rmse;      // the rest need a reference
  std::optional<double> nrmse;     // rmse / 255
  std::optional<double> saturation_error;
  std::optional<SsimColor> ssim;
};

// Whether the grayscale input is recovered exactly by summing the channels
// and dividing by four.
bool recovers_exactly(const GrayRaster& gray, const ReportVariant& variant);

std::vector<MetricReport> build_report(
    const std::optional<GrayRaster>& gray,
    const std::vector<ReportVariant>& variants,
    const std::optional<ColorRaster8>& reference,
    const SsimConfig& config = {});

}  // namespace pseudocolor

#endif  // PSEUDOCOLOR_METRICS_HPP_
