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

#include "pseudocolor/colorspace.hpp"

#include <algorithm>
#include <cmath>

#include "pseudocolor/error.hpp"

namespace pseudocolor {

namespace {

double wrap_degrees(double h) {
  h = std::fmod(h, 360.0);
  if (h < 0.0) h += 360.0;
  if (h >= 360.0) h = 0.0;
  return h;
}

// Channels sorted ascending for a given ordering.
struct Sorted {
  double low;
  double mid;
  double high;
};

Sorted sort_by(ChannelOrdering ordering, double r, double g, double b) {
  switch (ordering) {
    case ChannelOrdering::kBGR: return {b, g, r};
    case ChannelOrdering::kBRG: return {b, r, g};
    case ChannelOrdering::kRBG: return {r, b, g};
    case ChannelOrdering::kRGB: return {r, g, b};
    case ChannelOrdering::kGRB: return {g, r, b};
    case ChannelOrdering::kGBR: return {g, b, r};
  }
  return {r, g, b};
}

}  // namespace

std::string_view to_string(HueSector sector) {
  switch (sector) {
    case HueSector::kRedYellow: return "red-yellow";
    case HueSector::kYellowGreen: return "yellow-green";
    case HueSector::kGreenCyan: return "green-cyan";
    case HueSector::kCyanBlue: return "cyan-blue";
    case HueSector::kBlueMagenta: return "blue-magenta";
    case HueSector::kMagentaRed: return "magenta-red";
  }
  return "unknown";
}

HsvPixel rgb_to_hsv(double r, double g, double b) {
  const double hi = std::max({r, g, b});
  const double lo = std::min({r, g, b});
  const double delta = hi - lo;
  HsvPixel out;
  out.v = hi;
  out.s = hi > 0.0 ? delta / hi : 0.0;
  if (delta <= 0.0) return out;
  double h;
  if (hi == r) {
    h = 60.0 * ((g - b) / delta);
  } else if (hi == g) {
    h = 60.0 * ((b - r) / delta + 2.0);
  } else {
    h = 60.0 * ((r - g) / delta + 4.0);
  }
  out.h = wrap_degrees(h);
  return out;
}

Rgb hsv_to_rgb(const HsvPixel& hsv) {
  const double v = hsv.v;
  if (hsv.s <= 0.0) return {v, v, v};
  const double sector = wrap_degrees(hsv.h) / 60.0;
  const int i = std::min(static_cast<int>(std::floor(sector)), 5);
  const double f = sector - i;
  const double p = v * (1.0 - hsv.s);
  const double q = v * (1.0 - hsv.s * f);
  const double t = v * (1.0 - hsv.s * (1.0 - f));
  switch (i) {
    case 0: return {v, t, p};
    case 1: return {q, v, p};
    case 2: return {p, v, t};
    case 3: return {p, q, v};
    case 4: return {t, p, v};
    default: return {v, p, q};
  }
}

const HueParams& select_hue_params(double r, double g, double b) {
  if (r == g && g == b) {
    throw Error(ErrorCode::kAchromaticPixel,
                "hue is undefined for an achromatic pixel");
  }
  for (const auto& row : kHueTable) {
    const auto s = sort_by(row.ordering, r, g, b);
    if (s.low <= s.mid && s.mid <= s.high) return row;
  }
  // Unreachable: some ordering always holds non-strictly.
  return kHueTable.front();
}

std::optional<HueSector> strict_sector(double r, double g, double b) {
  for (const auto& row : kHueTable) {
    const auto s = sort_by(row.ordering, r, g, b);
    if (s.low < s.mid && s.mid < s.high) return row.sector;
  }
  return std::nullopt;
}

double hue_from_table(double r, double g, double b) {
  const auto& row = select_hue_params(r, g, b);
  const auto s = sort_by(row.ordering, r, g, b);
  const double ratio = (s.mid - s.low) / (s.high - s.low);
  return wrap_degrees(60.0 * (row.m + row.n * ratio));
}

}  // namespace pseudocolor
