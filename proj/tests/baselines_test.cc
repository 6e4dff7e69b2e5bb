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

#include <random>
#include <set>

#include "oracles.hpp"
#include "pseudocolor/baselines.hpp"
#include "pseudocolor/colorspace.hpp"
#include "pseudocolor/error.hpp"

namespace pseudocolor {
namespace {

Histogram spikes(std::initializer_list<int> levels, std::uint64_t count = 100) {
  Histogram h{};
  for (int l : levels) h[l] = count;
  return h;
}

TEST(HistogramTest, Counts) {
  const Histogram h = histogram(GrayRaster(2, 1, std::vector<std::uint8_t>{0, 255}));
  EXPECT_EQ(h[0], 1u);
  EXPECT_EQ(h[255], 1u);
  std::uint64_t total = 0;
  for (auto c : h) total += c;
  EXPECT_EQ(total, 2u);

  EXPECT_EQ(histogram(GrayRaster(5, 4, std::uint8_t{7}))[7], 20u);

  std::mt19937 rng(1);
  const auto g = oracle::random_gray(rng, 33, 17);
  total = 0;
  for (auto c : histogram(g)) total += c;
  EXPECT_EQ(total, 33u * 17u);
}

TEST(OtsuTest, TwoSpikes) {
  const Histogram h = spikes({50, 200});
  EXPECT_EQ(otsu(h, 2).thresholds, std::vector<int>{50});
  EXPECT_EQ(oracle::otsu(h, 2), std::vector<int>{50});
}

TEST(OtsuTest, ThreeSpikes) {
  const Histogram h = spikes({30, 128, 220});
  EXPECT_EQ(otsu(h, 3).thresholds, (std::vector<int>{30, 128}));
  EXPECT_EQ(oracle::otsu(h, 3), (std::vector<int>{30, 128}));
}

TEST(OtsuTest, FourClassesMatchOracle) {
  const Histogram h = spikes({10, 90, 91, 170, 240});
  EXPECT_EQ(otsu(h, 4).thresholds, oracle::otsu(h, 4));
}

TEST(OtsuTest, Errors) {
  try {
    otsu(spikes({77}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateHistogram);
  }
  try {
    otsu(spikes({1, 2}), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateHistogram);
  }
  try {
    otsu(spikes({1, 2, 3, 4, 5, 6}), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidParams);
  }
}

TEST(OtsuProperty, MatchesBruteForce) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> count(0, 500);
  std::bernoulli_distribution empty(0.3);
  for (int trial = 0; trial < 200; ++trial) {
    Histogram h{};
    for (auto& c : h) c = empty(rng) ? 0 : count(rng);
    for (int k : {2, 3}) {
      ASSERT_EQ(otsu(h, k).thresholds, oracle::otsu(h, k)) << "k=" << k;
    }
  }
}

TEST(OtsuProperty, ScaleInvariant) {
  std::mt19937 rng(32);
  std::uniform_int_distribution<int> count(0, 300);
  for (int trial = 0; trial < 50; ++trial) {
    Histogram h{};
    for (auto& c : h) c = count(rng);
    Histogram scaled = h;
    for (auto& c : scaled) c *= 7;
    ASSERT_EQ(otsu(h, 3), otsu(scaled, 3));
  }
}

TEST(OtsuProperty, ThresholdsMaximizeCriterion) {
  const Histogram h = spikes({20, 21, 100, 140, 141, 250}, 50);
  const auto best = otsu(h, 3);
  const double top = between_class_variance(h, best.thresholds);
  for (int a = 0; a < 254; a += 3) {
    for (int b = a + 1; b < 255; b += 5) {
      ASSERT_LE(between_class_variance(h, {a, b}), top);
    }
  }
}

TEST(QuantizeTest, ClassMembership) {
  const OtsuThresholds t{{50}};
  const QuantizePalette palette{{{0, 0, 255}, {255, 0, 0}}};
  const GrayRaster g(3, 1, std::vector<std::uint8_t>{10, 200, 50});
  const ColorRaster8 c = quantize_pseudocolor(g, t, palette);
  EXPECT_EQ(c.pixel(0), (Rgb8{0, 0, 255}));
  EXPECT_EQ(c.pixel(1), (Rgb8{255, 0, 0}));
  EXPECT_EQ(c.pixel(2), (Rgb8{0, 0, 255}));  // closed upper bound

  EXPECT_THROW(quantize_pseudocolor(g, OtsuThresholds{{50, 100}}, palette), Error);
}

TEST(QuantizeProperty, ClassMapRecoverable) {
  std::mt19937 rng(33);
  const auto g = oracle::random_gray(rng, 40, 30);
  const OtsuThresholds t = otsu(histogram(g), 3);
  const QuantizePalette palette = default_palette(3);
  const ColorRaster8 c = quantize_pseudocolor(g, t, palette);
  std::set<Rgb8> distinct;
  for (std::size_t i = 0; i < c.pixel_count(); ++i) {
    const auto px = c.pixel(i);
    distinct.insert(px);
    const auto it = std::find(palette.colors.begin(), palette.colors.end(), px);
    ASSERT_NE(it, palette.colors.end());
    ASSERT_EQ(it - palette.colors.begin(), t.class_of(g.pixels()[i]));
  }
  EXPECT_LE(distinct.size(), 3u);
}

TEST(DefaultPaletteTest, ThreeClassesBlueGreenRed) {
  const auto p = default_palette(3);
  ASSERT_EQ(p.colors.size(), 3u);
  EXPECT_EQ(p.colors[0], (Rgb8{0, 0, 255}));
  EXPECT_EQ(p.colors[1], (Rgb8{0, 255, 0}));
  EXPECT_EQ(p.colors[2], (Rgb8{255, 0, 0}));
  EXPECT_EQ(default_palette(4).colors.size(), 4u);
}

TEST(SamantaTest, Pixels) {
  ColorRaster8 c(3, 1);
  c.set_pixel(0, {128, 128, 128});
  c.set_pixel(1, {200, 150, 100});
  c.set_pixel(2, {0, 0, 255});
  const ColorRaster8 e = samanta_enhance(c);
  EXPECT_EQ(e.pixel(0), (Rgb8{128, 128, 128}));
  EXPECT_EQ(e.pixel(1), (Rgb8{200, 150, 100}));
  EXPECT_EQ(e.pixel(2), (Rgb8{0, 0, 255}));
}

TEST(SamantaProperty, Idempotent) {
  std::mt19937 rng(34);
  const auto c = oracle::random_color(rng, 32, 32);
  const auto once = samanta_enhance(c);
  EXPECT_EQ(samanta_enhance(once), once);
  // The table hue equals the hexcone hue, so enhancement keeps every pixel.
  EXPECT_EQ(once, c);
}

TEST(DailyTest, Endpoints) {
  const DailyConfig cfg{3, 240.0, 0.0};
  const GrayRaster g(2, 1, std::vector<std::uint8_t>{0, 255});
  const ColorRaster8 c = daily_colorize(g, cfg);
  EXPECT_EQ(c.pixel(0), (Rgb8{0, 0, 0}));
  const Rgb expected = hsv_to_rgb({0.0, 1.0, 1.0});
  EXPECT_EQ(c.pixel(1), (Rgb8{round_to_u8(expected.r * 255),
                              round_to_u8(expected.g * 255),
                              round_to_u8(expected.b * 255)}));
  EXPECT_EQ(c.pixel(1), (Rgb8{255, 0, 0}));
}

TEST(DailyTest, RejectsBadConfig) {
  const GrayRaster g(1, 1);
  EXPECT_THROW(daily_colorize(g, {1, 240, 0}), Error);
  EXPECT_THROW(daily_colorize(g, {3, 90, 90}), Error);
}

TEST(DailyProperty, BinnedHuesAndMonotoneValue) {
  std::vector<std::uint8_t> ramp(256);
  for (int i = 0; i < 256; ++i) ramp[i] = static_cast<std::uint8_t>(i);
  const GrayRaster g(256, 1, ramp);
  for (int bins : {2, 3, 5, 8}) {
    const ColorRaster8 c = daily_colorize(g, {bins, 240.0, 0.0});
    std::set<long> hues;
    double prev_v = -1.0;
    int prev_bin = -1;
    for (int i = 0; i < 256; ++i) {
      const auto px = c.pixel(i);
      const HsvPixel hsv = rgb_to_hsv(px[0] / 255.0, px[1] / 255.0, px[2] / 255.0);
      const int bin = i * bins / 256;
      if (bin != prev_bin) prev_v = -1.0;
      ASSERT_GE(hsv.v, prev_v);
      prev_v = hsv.v;
      prev_bin = bin;
      if (hsv.s > 0 && i >= 32) hues.insert(std::lround(hsv.h / 10.0));
    }
    EXPECT_LE(static_cast<int>(hues.size()), bins);
  }
}

}  // namespace
}  // namespace pseudocolor
