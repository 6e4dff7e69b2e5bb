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

#ifndef PSEUDOCOLOR_POSTPROC_HPP_
#define PSEUDOCOLOR_POSTPROC_HPP_

#include <array>

#include "pseudocolor/raster.hpp"

namespace pseudocolor {

// Per-channel CDF matching: source level v maps to the smallest reference
// level w with CDF_ref(w) >= CDF_src(v). Dimensions may differ.
ColorRaster8 histogram_match(const ColorRaster8& source,
                             const ColorRaster8& reference);

// 3x3 low-pass mask, used verbatim (coefficients sum to 1.000034).
inline constexpr std::array<std::array<double, 3>, 3> kGaussianMask{{
    {0.0007, 0.0256, 0.0007},
    {0.0256, 0.894834, 0.0256},
    {0.0007, 0.0256, 0.0007},
}};

// Convolution with kGaussianMask, edge-replicated borders, rounded and
// clamped per channel.
GrayRaster gaussian_spatial(const GrayRaster& image);
ColorRaster8 gaussian_spatial(const ColorRaster8& image);

enum class FilterMode { kLowpass, kHighpass };

struct GaussianFreqConfig {
  double d0 = 1.0;
  FilterMode mode = FilterMode::kLowpass;
};

void validate(const GaussianFreqConfig& config);

// Transfer function over the centred spectrum: index (x, y) sits at distance
// D from (floor(w/2), floor(h/2)) and holds exp(-D^2 / (2 d0)) for lowpass,
// one minus that for highpass. Note the exponent divides by 2*d0, not
// 2*d0^2.
PlaneF gaussian_transfer(std::size_t width, std::size_t height,
                         const GaussianFreqConfig& config);

// Forward DFT, multiply by the transfer function, inverse DFT, real part.
// The PlaneF overload returns unrounded values.
PlaneF gaussian_frequency(const PlaneF& plane, const GaussianFreqConfig& config);
GrayRaster gaussian_frequency(const GrayRaster& image,
                              const GaussianFreqConfig& config);
ColorRaster8 gaussian_frequency(const ColorRaster8& image,
                                const GaussianFreqConfig& config);

}  // namespace pseudocolor

#endif  // PSEUDOCOLOR_POSTPROC_HPP_
