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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pseudocolor/colorspace.hpp"
#include "pseudocolor/error.hpp"

namespace pseudocolor {
namespace {

double hue_distance(double a, double b) {
  const double d = std::fabs(a - b);
  return std::min(d, 360.0 - d);
}

TEST(RgbToHsvTest, KnownValues) {
  const HsvPixel red = rgb_to_hsv(1, 0, 0);
  EXPECT_EQ(red.h, 0.0);
  EXPECT_EQ(red.s, 1.0);
  EXPECT_EQ(red.v, 1.0);

  const HsvPixel grey = rgb_to_hsv(0.4, 0.4, 0.4);
  EXPECT_EQ(grey.h, 0.0);
  EXPECT_EQ(grey.s, 0.0);
  EXPECT_EQ(grey.v, 0.4);

  // max 200, min 100: h = 60 * 50 / 100.
  const HsvPixel p = rgb_to_hsv(200 / 255.0, 150 / 255.0, 100 / 255.0);
  EXPECT_NEAR(p.h, 30.0, 1e-12);
  EXPECT_NEAR(p.s, 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(p.v, 200 / 255.0);

  EXPECT_EQ(rgb_to_hsv(0, 0, 0).s, 0.0);
}

TEST(HsvToRgbTest, KnownValues) {
  const Rgb red = hsv_to_rgb({0, 1, 1});
  EXPECT_EQ(red.r, 1.0);
  EXPECT_EQ(red.g, 0.0);
  EXPECT_EQ(red.b, 0.0);

  const Rgb grey = hsv_to_rgb({123.0, 0.0, 0.3});
  EXPECT_EQ(grey.r, 0.3);
  EXPECT_EQ(grey.g, 0.3);
  EXPECT_EQ(grey.b, 0.3);

  const Rgb blue = hsv_to_rgb({240, 1, 1});
  EXPECT_NEAR(blue.r, 0.0, 1e-15);
  EXPECT_NEAR(blue.b, 1.0, 1e-15);
}

TEST(HsvProperty, RoundTrip) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> hue(0.0, 360.0);
  std::uniform_real_distribution<double> frac(0.01, 1.0);
  for (int i = 0; i < 20000; ++i) {
    const HsvPixel p{hue(rng), frac(rng), frac(rng)};
    const Rgb rgb = hsv_to_rgb(p);
    const HsvPixel q = rgb_to_hsv(rgb.r, rgb.g, rgb.b);
    if (p.s >= 0.05) ASSERT_LE(hue_distance(p.h, q.h), 1e-12) << p.h;
    ASSERT_NEAR(p.s, q.s, 1e-12);
    ASSERT_NEAR(p.v, q.v, 1e-12);
  }
}

// Channels carry the hue only to about 60 * ulp(v) / (v * s) degrees, so at
// low saturation the bound has to scale with 1 / s.
TEST(HsvProperty, LowSaturationHueWithinRepresentationLimit) {
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> hue(0.0, 360.0);
  std::uniform_real_distribution<double> low(1e-6, 0.05);
  std::uniform_real_distribution<double> frac(0.01, 1.0);
  for (int i = 0; i < 20000; ++i) {
    const HsvPixel p{hue(rng), low(rng), frac(rng)};
    const Rgb rgb = hsv_to_rgb(p);
    const HsvPixel q = rgb_to_hsv(rgb.r, rgb.g, rgb.b);
    ASSERT_LE(hue_distance(p.h, q.h), 60.0 * 8 * 2.220446049250313e-16 / p.s)
        << p.h << " " << p.s;
  }
}

TEST(HsvProperty, OutputRanges) {
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  for (int i = 0; i < 20000; ++i) {
    const HsvPixel p = rgb_to_hsv(frac(rng), frac(rng), frac(rng));
    ASSERT_GE(p.h, 0.0);
    ASSERT_LT(p.h, 360.0);
    ASSERT_GE(p.s, 0.0);
    ASSERT_LE(p.s, 1.0);
  }
}

TEST(HueTableTest, RowsAsPrinted) {
  EXPECT_EQ(kHueTable[0].m, 0);
  EXPECT_EQ(kHueTable[0].n, 1);
  EXPECT_EQ(kHueTable[0].ordering, ChannelOrdering::kBGR);
  EXPECT_EQ(kHueTable[3].sector, HueSector::kCyanBlue);
  EXPECT_EQ(kHueTable[3].m, 4);
  EXPECT_EQ(kHueTable[3].n, -1);
  EXPECT_EQ(kHueTable[5].m, 6);
  EXPECT_EQ(kHueTable[5].ordering, ChannelOrdering::kGBR);
}

TEST(HueTableTest, KnownHues) {
  EXPECT_EQ(select_hue_params(200, 150, 100).sector, HueSector::kRedYellow);
  EXPECT_DOUBLE_EQ(hue_from_table(200, 150, 100), 30.0);
  EXPECT_EQ(select_hue_params(100, 150, 200).sector, HueSector::kCyanBlue);
  EXPECT_DOUBLE_EQ(hue_from_table(100, 150, 200), 210.0);
}

TEST(HueTableTest, AchromaticThrows) {
  try {
    hue_from_table(7, 7, 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAchromaticPixel);
  }
}

TEST(HueTableProperty, MatchesHexconeHue) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  for (int i = 0; i < 50000; ++i) {
    const double r = frac(rng), g = frac(rng), b = frac(rng);
    const double table = hue_from_table(r, g, b);
    ASSERT_GE(table, 0.0);
    ASSERT_LT(table, 360.0);
    ASSERT_LT(hue_distance(table, rgb_to_hsv(r, g, b).h), 1e-9);
  }
}

// With two channels tied, neighbouring rows agree on the boundary hue, so
// the first-match rule is observationally irrelevant.
TEST(HueTableProperty, TiesGiveBoundaryHue) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> level(0, 255);
  for (int i = 0; i < 5000; ++i) {
    const double a = level(rng), b = level(rng);
    if (a == b) continue;
    const double triples[6][3] = {{a, a, b}, {a, b, a}, {b, a, a},
                                  {a, b, b}, {b, a, b}, {b, b, a}};
    for (const auto& t : triples) {
      const double table = hue_from_table(t[0], t[1], t[2]);
      ASSERT_LT(hue_distance(table, rgb_to_hsv(t[0], t[1], t[2]).h), 1e-9);
      ASSERT_FALSE(strict_sector(t[0], t[1], t[2]).has_value());
    }
  }
}

TEST(StrictSectorTest, OrderingsMapToSectors) {
  EXPECT_EQ(strict_sector(3, 2, 1), HueSector::kRedYellow);
  EXPECT_EQ(strict_sector(2, 3, 1), HueSector::kYellowGreen);
  EXPECT_EQ(strict_sector(1, 3, 2), HueSector::kGreenCyan);
  EXPECT_EQ(strict_sector(1, 2, 3), HueSector::kCyanBlue);
  EXPECT_EQ(strict_sector(2, 1, 3), HueSector::kBlueMagenta);
  EXPECT_EQ(strict_sector(3, 1, 2), HueSector::kMagentaRed);
  EXPECT_EQ(to_string(HueSector::kBlueMagenta), "blue-magenta");
}

}  // namespace
}  // namespace pseudocolor
