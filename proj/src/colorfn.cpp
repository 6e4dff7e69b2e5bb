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

#include "pseudocolor/colorfn.hpp"

#include <cmath>
#include <string>

#include "pseudocolor/error.hpp"

namespace pseudocolor {

ColorParams validate_params(double alpha, double beta) {
  auto fail = [&](const std::string& constraint) {
    throw Error(ErrorCode::kInvalidParams,
                "invalid color parameters (alpha=" + std::to_string(alpha) +
                    ", beta=" + std::to_string(beta) + "): " + constraint);
  };
  if (!std::isfinite(alpha) || !std::isfinite(beta)) fail("must be finite");
  if (alpha <= 0.0) fail("alpha must be > 0");
  if (alpha >= 1.0) fail("alpha must be < 1");
  if (beta <= 0.0) fail("beta must be > 0");
  if (beta >= 1.0) fail("beta must be < 1");
  if (alpha + beta >= 1.0) fail("alpha + beta must be < 1");
  return ColorParams(alpha, beta);
}

std::string_view to_string(ColorRegion region) {
  switch (region) {
    case ColorRegion::kRedYellow: return "red-yellow";
    case ColorRegion::kYellowGreen: return "yellow-green";
    case ColorRegion::kGreenCyan: return "green-cyan";
    case ColorRegion::kCyanBlue: return "cyan-blue";
    case ColorRegion::kBlueMagenta: return "blue-magenta";
    case ColorRegion::kMagentaRed: return "magenta-red";
    case ColorRegion::kBoundary: return "boundary";
  }
  return "unknown";
}

static_assert(static_cast<int>(ColorRegion::kRedYellow) ==
              static_cast<int>(HueSector::kRedYellow));
static_assert(static_cast<int>(ColorRegion::kMagentaRed) ==
              static_cast<int>(HueSector::kMagentaRed));

ColorRegion classify_region(const ColorParams& params) {
  const auto sector =
      strict_sector(params.alpha(), params.beta(), params.blue_weight());
  if (!sector) return ColorRegion::kBoundary;
  return static_cast<ColorRegion>(*sector);
}

Rgb colorize_value(double intensity, const ColorParams& params) {
  return {4.0 * params.alpha() * intensity, 4.0 * params.beta() * intensity,
          4.0 * params.blue_weight() * intensity};
}

std::uint8_t invert_value(double r, double g, double b) {
  return round_to_u8((r + g + b) / 4.0);
}

ColorRasterF colorize(const GrayRaster& gray, const ColorParams& params) {
  const auto src = gray.pixels();
  std::array<std::vector<double>, 3> planes;
  for (auto& p : planes) p.resize(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    const Rgb c = colorize_value(src[i], params);
    planes[0][i] = c.r;
    planes[1][i] = c.g;
    planes[2][i] = c.b;
  }
  return ColorRasterF(gray.width(), gray.height(), std::move(planes),
                      ColorProvenance{params.alpha(), params.beta()});
}

GrayRaster invert(const ColorRasterF& color) {
  GrayRaster out(color.width(), color.height());
  auto dst = out.pixels();
  const auto r = color.plane(0);
  const auto g = color.plane(1);
  const auto b = color.plane(2);
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = invert_value(r[i], g[i], b[i]);
  }
  return out;
}

}  // namespace pseudocolor
