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

#include "pseudocolor/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pseudocolor/colorspace.hpp"
#include "pseudocolor/error.hpp"

namespace pseudocolor {

Histogram histogram(const GrayRaster& gray) {
  Histogram h{};
  for (auto v : gray.pixels()) ++h[v];
  return h;
}

int OtsuThresholds::class_of(int level) const {
  return static_cast<int>(
      std::lower_bound(thresholds.begin(), thresholds.end(), level) -
      thresholds.begin());
}

namespace {

// Cumulative mass and first moment of the normalized histogram; entry i
// covers levels [0, i).
struct Moments {
  std::array<double, 257> mass{};
  std::array<double, 257> moment{};
  double mean = 0.0;
};

Moments cumulative_moments(const Histogram& hist) {
  double total = 0.0;
  for (auto c : hist) total += static_cast<double>(c);
  Moments m;
  for (int i = 0; i < 256; ++i) {
    const double p = static_cast<double>(hist[i]) / total;
    m.mass[i + 1] = m.mass[i] + p;
    m.moment[i + 1] = m.moment[i] + p * i;
  }
  m.mean = m.moment[256];
  return m;
}

// Contribution of levels (lo, hi], i.e. [lo + 1, hi].
inline double class_term(const Moments& m, int lo, int hi) {
  const double w = m.mass[hi + 1] - m.mass[lo + 1];
  if (w <= 0.0) return 0.0;
  const double mu = (m.moment[hi + 1] - m.moment[lo + 1]) / w;
  const double d = mu - m.mean;
  return w * d * d;
}

}  // namespace

double between_class_variance(const Histogram& hist,
                              const std::vector<int>& thresholds) {
  const Moments m = cumulative_moments(hist);
  double sum = 0.0;
  int lo = -1;
  for (int t : thresholds) {
    sum += class_term(m, lo, t);
    lo = t;
  }
  return sum + class_term(m, lo, 255);
}

OtsuThresholds otsu(const Histogram& hist, int k) {
  if (k < 2 || k > 4) {
    throw Error(ErrorCode::kInvalidParams,
                "otsu class count must be 2, 3 or 4, got " + std::to_string(k));
  }
  const auto populated = std::count_if(hist.begin(), hist.end(),
                                       [](std::uint64_t c) { return c > 0; });
  if (populated < k) {
    throw Error(ErrorCode::kDegenerateHistogram,
                "histogram has " + std::to_string(populated) +
                    " populated levels, need at least " + std::to_string(k));
  }

  const Moments m = cumulative_moments(hist);
  double best = -1.0;
  std::vector<int> best_t;
  // Lexicographic enumeration; a strict improvement is required to replace
  // the incumbent, so the first maximizer wins.
  switch (k) {
    case 2:
      for (int a = 0; a <= 254; ++a) {
        const double v = class_term(m, -1, a) + class_term(m, a, 255);
        if (v > best) { best = v; best_t = {a}; }
      }
      break;
    case 3:
      for (int a = 0; a <= 253; ++a) {
        const double head = class_term(m, -1, a);
        for (int b = a + 1; b <= 254; ++b) {
          const double v = head + class_term(m, a, b) + class_term(m, b, 255);
          if (v > best) { best = v; best_t = {a, b}; }
        }
      }
      break;
    default:
      for (int a = 0; a <= 252; ++a) {
        const double head = class_term(m, -1, a);
        for (int b = a + 1; b <= 253; ++b) {
          const double head2 = head + class_term(m, a, b);
          for (int c = b + 1; c <= 254; ++c) {
            const double v = head2 + class_term(m, b, c) + class_term(m, c, 255);
            if (v > best) { best = v; best_t = {a, b, c}; }
          }
        }
      }
      break;
  }
  return OtsuThresholds{std::move(best_t)};
}

QuantizePalette default_palette(int class_count) {
  if (class_count == 3) {
    return {{{0, 0, 255}, {0, 255, 0}, {255, 0, 0}}};
  }
  QuantizePalette p;
  for (int c = 0; c < class_count; ++c) {
    const double hue =
        class_count > 1 ? 240.0 * (1.0 - static_cast<double>(c) / (class_count - 1))
                        : 240.0;
    const Rgb rgb = hsv_to_rgb({hue, 1.0, 1.0});
    p.colors.push_back({round_to_u8(rgb.r * 255.0), round_to_u8(rgb.g * 255.0),
                        round_to_u8(rgb.b * 255.0)});
  }
  return p;
}

ColorRaster8 quantize_pseudocolor(const GrayRaster& gray,
                                  const OtsuThresholds& thresholds,
                                  const QuantizePalette& palette) {
  if (static_cast<int>(palette.colors.size()) != thresholds.class_count()) {
    throw Error(ErrorCode::kInvalidParams,
                "palette has " + std::to_string(palette.colors.size()) +
                    " colors for " + std::to_string(thresholds.class_count()) +
                    " classes");
  }
  std::array<std::uint8_t, 256> class_lut{};
  for (int v = 0; v < 256; ++v) {
    class_lut[v] = static_cast<std::uint8_t>(thresholds.class_of(v));
  }
  ColorRaster8 out(gray.width(), gray.height());
  const auto src = gray.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) {
    out.set_pixel(i, palette.colors[class_lut[src[i]]]);
  }
  return out;
}

ColorRaster8 samanta_enhance(const ColorRaster8& image) {
  ColorRaster8 out = image;
  for (std::size_t i = 0; i < image.pixel_count(); ++i) {
    const auto px = image.pixel(i);
    if (px[0] == px[1] && px[1] == px[2]) continue;
    const double r = px[0] / 255.0;
    const double g = px[1] / 255.0;
    const double b = px[2] / 255.0;
    HsvPixel hsv = rgb_to_hsv(r, g, b);
    hsv.h = hue_from_table(r, g, b);
    const Rgb rgb = hsv_to_rgb(hsv);
    out.set_pixel(i, {round_to_u8(rgb.r * 255.0), round_to_u8(rgb.g * 255.0),
                      round_to_u8(rgb.b * 255.0)});
  }
  return out;
}

void validate(const DailyConfig& config) {
  if (config.num_bins < 2) {
    throw Error(ErrorCode::kInvalidParams,
                "daily num_bins must be >= 2, got " +
                    std::to_string(config.num_bins));
  }
  if (!std::isfinite(config.hue_start) || !std::isfinite(config.hue_end)) {
    throw Error(ErrorCode::kInvalidParams, "daily hue range must be finite");
  }
  if (config.hue_start == config.hue_end) {
    throw Error(ErrorCode::kInvalidParams,
                "daily hue_start must differ from hue_end");
  }
}

ColorRaster8 daily_colorize(const GrayRaster& gray, const DailyConfig& config) {
  validate(config);
  std::array<Rgb8, 256> lut{};
  for (int level = 0; level < 256; ++level) {
    const int bin = std::min(level * config.num_bins / 256, config.num_bins - 1);
    const double hue = config.hue_start + (config.hue_end - config.hue_start) *
                                              bin / (config.num_bins - 1);
    const Rgb rgb = hsv_to_rgb({hue, 1.0, level / 255.0});
    lut[level] = {round_to_u8(rgb.r * 255.0), round_to_u8(rgb.g * 255.0),
                  round_to_u8(rgb.b * 255.0)};
  }
  ColorRaster8 out(gray.width(), gray.height());
  const auto src = gray.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) out.set_pixel(i, lut[src[i]]);
  return out;
}

}  // namespace pseudocolor
