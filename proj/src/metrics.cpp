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

#include "pseudocolor/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pseudocolor/colorfn.hpp"
#include "pseudocolor/colorspace.hpp"
#include "pseudocolor/error.hpp"

namespace pseudocolor {

namespace {

std::string dims(std::size_t w, std::size_t h) {
  return std::to_string(w) + "x" + std::to_string(h);
}

void require_same_dims(std::size_t wa, std::size_t ha, std::size_t wb,
                       std::size_t hb) {
  if (wa != wb || ha != hb) {
    throw Error(ErrorCode::kDimensionMismatch,
                "image sizes differ: " + dims(wa, ha) + " vs " + dims(wb, hb));
  }
}

}  // namespace

double rmse(const PlaneF& a, const PlaneF& b) {
  require_same_dims(a.width, a.height, b.width, b.height);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double d = a.values[i] - b.values[i];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(a.values.size()));
}

double rmse(const ColorRaster8& a, const ColorRaster8& b) {
  require_same_dims(a.width(), a.height(), b.width(), b.height());
  const auto pa = a.interleaved();
  const auto pb = b.interleaved();
  double sum = 0.0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const double d = static_cast<double>(pa[i]) - static_cast<double>(pb[i]);
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(pa.size()));
}

double saturation_error(const ColorRaster8& colorized,
                        const ColorRaster8& reference) {
  require_same_dims(colorized.width(), colorized.height(), reference.width(),
                    reference.height());
  auto saturation = [](std::array<std::uint8_t, 3> px) {
    return rgb_to_hsv(px[0] / 255.0, px[1] / 255.0, px[2] / 255.0).s;
  };
  double sum = 0.0;
  const std::size_t n = colorized.pixel_count();
  for (std::size_t i = 0; i < n; ++i) {
    const double d = saturation(colorized.pixel(i)) - saturation(reference.pixel(i));
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(n));
}

SsimConfig SsimConfig::for_range(double dynamic_range) {
  SsimConfig c;
  c.dynamic_range = dynamic_range;
  c.c1 = (0.01 * dynamic_range) * (0.01 * dynamic_range);
  c.c2 = (0.03 * dynamic_range) * (0.03 * dynamic_range);
  c.c3 = c.c2 / 2.0;
  return c;
}

void validate(const SsimConfig& config) {
  if (config.window_size < 1 || config.window_size % 2 == 0) {
    throw Error(ErrorCode::kInvalidParams,
                "SSIM window size must be odd and positive, got " +
                    std::to_string(config.window_size));
  }
  if (!(config.sigma > 0.0)) {
    throw Error(ErrorCode::kInvalidParams, "SSIM window sigma must be > 0");
  }
  if (!(config.c1 > 0.0 && config.c2 > 0.0 && config.c3 > 0.0)) {
    throw Error(ErrorCode::kInvalidParams, "SSIM constants must be > 0");
  }
}

std::vector<double> ssim_window_taps(const SsimConfig& config) {
  validate(config);
  const int n = config.window_size;
  const int half = n / 2;
  std::vector<double> taps(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = i - half;
    taps[i] = std::exp(-(d * d) / (2.0 * config.sigma * config.sigma));
    sum += taps[i];
  }
  for (auto& t : taps) t /= sum;
  return taps;
}

namespace {

// Valid-region separable filtering: rows first, then columns.
PlaneF filter_valid(const PlaneF& in, const std::vector<double>& taps) {
  const std::size_t n = taps.size();
  const std::size_t ow = in.width - n + 1;
  const std::size_t oh = in.height - n + 1;
  PlaneF rows(ow, in.height);
  for (std::size_t y = 0; y < in.height; ++y) {
    for (std::size_t x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += taps[k] * in.at(x + k, y);
      rows.at(x, y) = acc;
    }
  }
  PlaneF out(ow, oh);
  for (std::size_t y = 0; y < oh; ++y) {
    for (std::size_t x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += taps[k] * rows.at(x, y + k);
      out.at(x, y) = acc;
    }
  }
  return out;
}

PlaneF product(const PlaneF& a, const PlaneF& b) {
  PlaneF out(a.width, a.height);
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    out.values[i] = a.values[i] * b.values[i];
  }
  return out;
}

}  // namespace

LocalStats local_stats(const PlaneF& a, const PlaneF& b,
                       const SsimConfig& config) {
  require_same_dims(a.width, a.height, b.width, b.height);
  const auto taps = ssim_window_taps(config);
  const auto n = static_cast<std::size_t>(config.window_size);
  if (a.width < n || a.height < n) {
    throw Error(ErrorCode::kImageTooSmall,
                "image " + dims(a.width, a.height) + " is smaller than the " +
                    dims(n, n) + " SSIM window");
  }
  LocalStats s;
  s.mean_a = filter_valid(a, taps);
  s.mean_b = filter_valid(b, taps);
  s.var_a = filter_valid(product(a, a), taps);
  s.var_b = filter_valid(product(b, b), taps);
  s.cov = filter_valid(product(a, b), taps);
  for (std::size_t i = 0; i < s.cov.values.size(); ++i) {
    const double ma = s.mean_a.values[i];
    const double mb = s.mean_b.values[i];
    s.var_a.values[i] -= ma * ma;
    s.var_b.values[i] -= mb * mb;
    s.cov.values[i] -= ma * mb;
  }
  return s;
}

SsimResult ssim(const PlaneF& a, const PlaneF& b, const SsimConfig& config) {
  const LocalStats s = local_stats(a, b, config);
  const bool collapsed = config.c3 == config.c2 / 2.0;
  SsimResult r;
  r.map = PlaneF(s.cov.width, s.cov.height);
  double sum = 0.0;
  for (std::size_t i = 0; i < r.map.values.size(); ++i) {
    const double ma = s.mean_a.values[i];
    const double mb = s.mean_b.values[i];
    const double va = s.var_a.values[i];
    const double vb = s.var_b.values[i];
    const double cov = s.cov.values[i];
    const double luminance =
        (2.0 * ma * mb + config.c1) / (ma * ma + mb * mb + config.c1);
    double rest;
    if (collapsed) {
      rest = (2.0 * cov + config.c2) / (va + vb + config.c2);
    } else {
      const double sa = std::sqrt(std::max(va, 0.0));
      const double sb = std::sqrt(std::max(vb, 0.0));
      rest = (2.0 * sa * sb + config.c2) / (va + vb + config.c2) *
             (cov + config.c3) / (sa * sb + config.c3);
    }
    r.map.values[i] = luminance * rest;
    sum += r.map.values[i];
  }
  r.mean = sum / static_cast<double>(r.map.values.size());
  return r;
}

SsimColor ssim_color(const ColorRaster8& a, const ColorRaster8& b,
                     const SsimConfig& config) {
  require_same_dims(a.width(), a.height(), b.width(), b.height());
  SsimColor out;
  for (int c = 0; c < 3; ++c) {
    out.bands[c] = ssim(channel_plane(a, c), channel_plane(b, c), config).mean;
  }
  out.mean = (out.bands[0] + out.bands[1] + out.bands[2]) / 3.0;
  return out;
}

bool recovers_exactly(const GrayRaster& gray, const ReportVariant& variant) {
  require_same_dims(gray.width(), gray.height(), variant.display.width(),
                    variant.display.height());
  if (variant.lossless) {
    require_same_dims(gray.width(), gray.height(), variant.lossless->width(),
                      variant.lossless->height());
    return invert(*variant.lossless) == gray;
  }
  const auto px = gray.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) {
    const auto c = variant.display.pixel(i);
    if (invert_value(c[0], c[1], c[2]) != px[i]) return false;
  }
  return true;
}

std::vector<MetricReport> build_report(
    const std::optional<GrayRaster>& gray,
    const std::vector<ReportVariant>& variants,
    const std::optional<ColorRaster8>& reference, const SsimConfig& config) {
  std::vector<MetricReport> out;
  out.reserve(variants.size());
  for (const auto& v : variants) {
    MetricReport r;
    r.method_label = v.label;
    if (gray) r.reversible = recovers_exactly(*gray, v);
    if (reference) {
      r.rmse = rmse(v.display, *reference);
      r.nrmse = *r.rmse / 255.0;
      r.saturation_error = saturation_error(v.display, *reference);
      r.ssim = ssim_color(v.display, *reference, config);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pseudocolor
