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

#ifndef PSEUDOCOLOR_COLORFN_HPP_
#define PSEUDOCOLOR_COLORFN_HPP_

#include <string_view>

#include "pseudocolor/colorspace.hpp"
#include "pseudocolor/raster.hpp"

namespace pseudocolor {

// Channel weights of the reversible color function. Construct through
// validate_params(); a ColorParams value always satisfies
// 0 < alpha < 1, 0 < beta < 1 and alpha + beta < 1.
class ColorParams {
 public:
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double blue_weight() const { return 1.0 - alpha_ - beta_; }

 private:
  friend ColorParams validate_params(double alpha, double beta);
  ColorParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {}

  double alpha_;
  double beta_;
};

// Throws InvalidParams naming the violated constraint.
ColorParams validate_params(double alpha, double beta);

enum class ColorRegion {
  kRedYellow,
  kYellowGreen,
  kGreenCyan,
  kCyanBlue,
  kBlueMagenta,
  kMagentaRed,
  kBoundary,
};

std::string_view to_string(ColorRegion region);

// Region from the strict ordering of (alpha, beta, 1 - alpha - beta) read as
// (R, G, B) weights; kBoundary when any two weights are equal.
ColorRegion classify_region(const ColorParams& params);

// R' = 4*alpha*I, G' = 4*beta*I, B' = 4*(1-alpha-beta)*I, unclipped.
ColorRasterF colorize(const GrayRaster& gray, const ColorParams& params);

// I = (R' + G' + B') / 4, rounded half away from zero and clamped.
GrayRaster invert(const ColorRasterF& color);

// Pixel-level forms of the two maps above.
Rgb colorize_value(double intensity, const ColorParams& params);
std::uint8_t invert_value(double r, double g, double b);

}  // namespace pseudocolor

#endif  // PSEUDOCOLOR_COLORFN_HPP_
