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

#ifndef PSEUDOCOLOR_COLORSPACE_HPP_
#define PSEUDOCOLOR_COLORSPACE_HPP_

#include <array>
#include <optional>
#include <string_view>

namespace pseudocolor {

// Hexcone HSV. h in degrees [0, 360), s and v in [0, 1].
struct HsvPixel {
  double h = 0.0;
  double s = 0.0;
  double v = 0.0;
};

struct Rgb {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;
};

HsvPixel rgb_to_hsv(double r, double g, double b);
Rgb hsv_to_rgb(const HsvPixel& hsv);

// The six hue sectors, in the order the hue table lists them.
enum class HueSector {
  kRedYellow,
  kYellowGreen,
  kGreenCyan,
  kCyanBlue,
  kBlueMagenta,
  kMagentaRed,
};

std::string_view to_string(HueSector sector);  // e.g. "blue-magenta"

// Ascending channel ordering, lowest first: kBGR means B < G < R.
enum class ChannelOrdering { kBGR, kBRG, kRBG, kRGB, kGRB, kGBR };

// One row of the sector hue table: Hue = 60 * (m + n * (M - L) / (H - L))
// with L <= M <= H the sorted channels.
struct HueParams {
  HueSector sector;
  int m;
  int n;
  ChannelOrdering ordering;
};

inline constexpr std::array<HueParams, 6> kHueTable{{
    {HueSector::kRedYellow, 0, 1, ChannelOrdering::kBGR},
    {HueSector::kYellowGreen, 2, -1, ChannelOrdering::kBRG},
    {HueSector::kGreenCyan, 2, 1, ChannelOrdering::kRBG},
    {HueSector::kCyanBlue, 4, -1, ChannelOrdering::kRGB},
    {HueSector::kBlueMagenta, 4, 1, ChannelOrdering::kGRB},
    {HueSector::kMagentaRed, 6, -1, ChannelOrdering::kGBR},
}};

// First table row whose ordering holds with non-strict comparisons.
// Throws AchromaticPixel when r == g == b.
const HueParams& select_hue_params(double r, double g, double b);

// Row whose ordering holds strictly, or nullopt if any two channels tie.
std::optional<HueSector> strict_sector(double r, double g, double b);

// Sector-table hue in [0, 360). Throws AchromaticPixel when r == g == b.
double hue_from_table(double r, double g, double b);

}  // namespace pseudocolor

#endif  // PSEUDOCOLOR_COLORSPACE_HPP_
