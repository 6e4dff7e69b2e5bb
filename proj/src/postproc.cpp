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

#include "pseudocolor/postproc.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <string>

#include "pseudocolor/error.hpp"

namespace pseudocolor {

namespace {

using Histogram64 = std::array<std::uint64_t, 256>;

std::array<std::uint64_t, 256> cumulative(const Histogram64& h) {
  std::array<std::uint64_t, 256> c{};
  std::uint64_t run = 0;
  for (int i = 0; i < 256; ++i) {
    run += h[i];
    c[i] = run;
  }
  return c;
}

}  // namespace

ColorRaster8 histogram_match(const ColorRaster8& source,
                             const ColorRaster8& reference) {
  const std::uint64_t n_src = source.pixel_count();
  const std::uint64_t n_ref = reference.pixel_count();
  ColorRaster8 out = source;
  for (int c = 0; c < 3; ++c) {
    Histogram64 hs{}, hr{};
    for (std::size_t i = 0; i < n_src; ++i) ++hs[source.pixel(i)[c]];
    for (std::size_t i = 0; i < n_ref; ++i) ++hr[reference.pixel(i)[c]];
    const auto cs = cumulative(hs);
    const auto cr = cumulative(hr);

    // CDF_ref(w) >= CDF_src(v)  <=>  cr[w] * n_src >= cs[v] * n_ref, exact in
    // integers. Both sides are monotone, so one forward sweep suffices.
    __extension__ typedef unsigned __int128 Wide;
    std::array<std::uint8_t, 256> lut{};
    int w = 0;
    for (int v = 0; v < 256; ++v) {
      while (w < 255 && Wide{cr[w]} * n_src < Wide{cs[v]} * n_ref) ++w;
      lut[v] = static_cast<std::uint8_t>(w);
    }
    for (std::size_t i = 0; i < n_src; ++i) {
      auto px = out.pixel(i);
      px[c] = lut[px[c]];
      out.set_pixel(i, px);
    }
  }
  return out;
}

namespace {

PlaneF convolve_mask(const PlaneF& in) {
  const auto w = static_cast<std::ptrdiff_t>(in.width);
  const auto h = static_cast<std::ptrdiff_t>(in.height);
  PlaneF out(in.width, in.height);
  for (std::ptrdiff_t y = 0; y < h; ++y) {
    for (std::ptrdiff_t x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int dy = -1; dy <= 1; ++dy) {
        const auto sy = std::clamp<std::ptrdiff_t>(y + dy, 0, h - 1);
        for (int dx = -1; dx <= 1; ++dx) {
          const auto sx = std::clamp<std::ptrdiff_t>(x + dx, 0, w - 1);
          acc += kGaussianMask[dy + 1][dx + 1] * in.values[sy * w + sx];
        }
      }
      out.values[y * w + x] = acc;
    }
  }
  return out;
}

ColorRaster8 per_channel(const ColorRaster8& image,
                         const auto& filter /* PlaneF -> GrayRaster */) {
  ColorRaster8 out(image.width(), image.height());
  for (int c = 0; c < 3; ++c) {
    const GrayRaster filtered = filter(channel_plane(image, c));
    const auto px = filtered.pixels();
    for (std::size_t i = 0; i < px.size(); ++i) {
      out.at(i % image.width(), i / image.width(), c) = px[i];
    }
  }
  return out;
}

}  // namespace

GrayRaster gaussian_spatial(const GrayRaster& image) {
  return to_gray(convolve_mask(to_plane(image)));
}

ColorRaster8 gaussian_spatial(const ColorRaster8& image) {
  return per_channel(image, [](const PlaneF& p) {
    return to_gray(convolve_mask(p));
  });
}

void validate(const GaussianFreqConfig& config) {
  if (!(config.d0 > 0.0) || !std::isfinite(config.d0)) {
    throw Error(ErrorCode::kInvalidParams,
                "d0 must be a finite value > 0, got " + std::to_string(config.d0));
  }
}

PlaneF gaussian_transfer(std::size_t width, std::size_t height,
                         const GaussianFreqConfig& config) {
  validate(config);
  PlaneF out(width, height);
  const double cx = static_cast<double>(width / 2);
  const double cy = static_cast<double>(height / 2);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double dx = static_cast<double>(x) - cx;
      const double dy = static_cast<double>(y) - cy;
      const double lp = std::exp(-(dx * dx + dy * dy) / (2.0 * config.d0));
      out.at(x, y) = config.mode == FilterMode::kLowpass ? lp : 1.0 - lp;
    }
  }
  return out;
}

namespace {

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
using ComplexBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

struct PlanDestroy {
  void operator()(fftw_plan_s* p) const { fftw_destroy_plan(p); }
};
using Plan = std::unique_ptr<fftw_plan_s, PlanDestroy>;

// The FFTW planner is not re-entrant; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

Plan make_plan(std::size_t width, std::size_t height, fftw_complex* in,
               fftw_complex* out, int sign) {
  std::lock_guard lock(planner_mutex());
  return Plan(fftw_plan_dft_2d(static_cast<int>(height), static_cast<int>(width),
                               in, out, sign, FFTW_ESTIMATE));
}

}  // namespace

PlaneF gaussian_frequency(const PlaneF& plane,
                          const GaussianFreqConfig& config) {
  validate(config);
  const std::size_t w = plane.width;
  const std::size_t h = plane.height;
  const std::size_t n = w * h;
  ComplexBuffer spatial(fftw_alloc_complex(n));
  ComplexBuffer spectrum(fftw_alloc_complex(n));
  const Plan forward = make_plan(w, h, spatial.get(), spectrum.get(), FFTW_FORWARD);
  const Plan backward =
      make_plan(w, h, spectrum.get(), spatial.get(), FFTW_BACKWARD);

  for (std::size_t i = 0; i < n; ++i) {
    spatial[i][0] = plane.values[i];
    spatial[i][1] = 0.0;
  }
  fftw_execute(forward.get());

  // Unshifted bin u lands at (u + floor(w/2)) mod w once the spectrum is
  // centred, so look the gain up there instead of shifting the data.
  const PlaneF gain = gaussian_transfer(w, h, config);
  for (std::size_t v = 0; v < h; ++v) {
    const std::size_t cy = (v + h / 2) % h;
    for (std::size_t u = 0; u < w; ++u) {
      const double g = gain.at((u + w / 2) % w, cy);
      spectrum[v * w + u][0] *= g;
      spectrum[v * w + u][1] *= g;
    }
  }
  fftw_execute(backward.get());

  PlaneF out(w, h);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = spatial[i][0] * scale;
  return out;
}

GrayRaster gaussian_frequency(const GrayRaster& image,
                              const GaussianFreqConfig& config) {
  return to_gray(gaussian_frequency(to_plane(image), config));
}

ColorRaster8 gaussian_frequency(const ColorRaster8& image,
                                const GaussianFreqConfig& config) {
  validate(config);
  return per_channel(image, [&](const PlaneF& p) {
    return to_gray(gaussian_frequency(p, config));
  });
}

}  // namespace pseudocolor
