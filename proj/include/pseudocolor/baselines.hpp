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

#ifndef PSEUDOCOLOR_BASELINES_HPP_
#define PSEUDOCOLOR_BASELINES_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "pseudocolor/raster.hpp"

namespace pseudocolor {

using Histogram = std::array<std::uint64_t, 256>;

Histogram histogram(const GrayRaster& gray);

// k - 1 strictly increasing thresholds in [0, 254]. Class c covers
// (t[c-1], t[c]], with the first class starting at 0 and the last ending at
// 255.
struct OtsuThresholds {
  std::vector<int> thresholds;

  int class_count() const { return static_cast<int>(thresholds.size()) + 1; }
  int class_of(int level) const;

  friend bool operator==(const OtsuThresholds&,
                         const OtsuThresholds&) = default;
};

// Between-class variance sum_c w_c (mu_c - mu_T)^2 of the normalized
// histogram for the given thresholds.
double between_class_variance(const Histogram& hist,
                              const std::vector<int>& thresholds);

// Exhaustive multi-level Otsu for k in {2, 3, 4}. Returns the
// lexicographically smallest threshold tuple attaining the maximum.
// Throws InvalidParams for other k and DegenerateHistogram when fewer than k
// levels are populated.
OtsuThresholds otsu(const Histogram& hist, int k);

using Rgb8 = std::array<std::uint8_t, 3>;

struct QuantizePalette {
  std::vector<Rgb8> colors;
};

// blue, green, red for three classes; otherwise a blue-to-red hue ramp.
QuantizePalette default_palette(int class_count);

ColorRaster8 quantize_pseudocolor(const GrayRaster& gray,
                                  const OtsuThresholds& thresholds,
                                  const QuantizePalette& palette);

// Replaces each pixel's hue by the sector-table hue, keeping S and V.
// Achromatic pixels pass through.
ColorRaster8 samanta_enhance(const ColorRaster8& image);

struct DailyConfig {
  int num_bins = 3;
  double hue_start = 240.0;
  double hue_end = 0.0;
};

void validate(const DailyConfig& config);

// Split-spectrum colorizer: hue from the intensity bin, S = 1, V = I / 255.
ColorRaster8 daily_colorize(const GrayRaster& gray, const DailyConfig& config);

}  // namespace pseudocolor

#endif  // PSEUDOCOLOR_BASELINES_HPP_
