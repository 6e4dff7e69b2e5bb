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

#include "pseudocolor/raster.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pseudocolor/error.hpp"

namespace pseudocolor {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedHeader: return "MalformedHeader";
    case ErrorCode::kUnsupportedMaxval: return "UnsupportedMaxval";
    case ErrorCode::kTruncatedPayload: return "TruncatedPayload";
    case ErrorCode::kBadMagic: return "BadMagic";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidValue: return "InvalidValue";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kAchromaticPixel: return "AchromaticPixel";
    case ErrorCode::kDegenerateHistogram: return "DegenerateHistogram";
    case ErrorCode::kImageTooSmall: return "ImageTooSmall";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

namespace {

void check_dims(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                "raster dimensions must be at least 1x1, got " +
                    std::to_string(width) + "x" + std::to_string(height));
  }
}

}  // namespace

std::uint8_t round_to_u8(double v) {
  if (!(v > 0.0)) return 0;  // also maps NaN to 0
  if (v >= 255.0) return 255;
  return static_cast<std::uint8_t>(std::round(v));
}

GrayRaster::GrayRaster(std::size_t width, std::size_t height,
                       std::uint8_t fill)
    : width_(width), height_(height) {
  check_dims(width, height);
  data_.assign(width * height, fill);
}

GrayRaster::GrayRaster(std::size_t width, std::size_t height,
                       std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
  check_dims(width, height);
  if (data_.size() != width * height) {
    throw Error(ErrorCode::kDimensionMismatch,
                "gray raster data length " + std::to_string(data_.size()) +
                    " does not match " + std::to_string(width) + "x" +
                    std::to_string(height));
  }
}

ColorRaster8::ColorRaster8(std::size_t width, std::size_t height)
    : width_(width), height_(height) {
  check_dims(width, height);
  data_.assign(width * height * 3, 0);
}

ColorRaster8::ColorRaster8(std::size_t width, std::size_t height,
                           std::vector<std::uint8_t> interleaved)
    : width_(width), height_(height), data_(std::move(interleaved)) {
  check_dims(width, height);
  if (data_.size() != width * height * 3) {
    throw Error(ErrorCode::kDimensionMismatch,
                "color raster data length " + std::to_string(data_.size()) +
                    " does not match 3x" + std::to_string(width) + "x" +
                    std::to_string(height));
  }
}

ColorRasterF::ColorRasterF(std::size_t width, std::size_t height)
    : width_(width), height_(height) {
  check_dims(width, height);
  for (auto& p : planes_) p.assign(width * height, 0.0);
}

ColorRasterF::ColorRasterF(std::size_t width, std::size_t height,
                           std::array<std::vector<double>, 3> planes,
                           std::optional<ColorProvenance> meta)
    : width_(width),
      height_(height),
      planes_(std::move(planes)),
      meta_(meta) {
  check_dims(width, height);
  for (const auto& p : planes_) {
    if (p.size() != width * height) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "color plane length " + std::to_string(p.size()) +
                      " does not match " + std::to_string(width) + "x" +
                      std::to_string(height));
    }
    for (double v : p) {
      if (!std::isfinite(v) || v < 0.0) {
        throw Error(ErrorCode::kInvalidValue,
                    "color channel values must be finite and >= 0");
      }
    }
  }
}

PlaneF to_plane(const GrayRaster& gray) {
  PlaneF out(gray.width(), gray.height());
  std::copy(gray.pixels().begin(), gray.pixels().end(), out.values.begin());
  return out;
}

PlaneF channel_plane(const ColorRaster8& image, int channel) {
  PlaneF out(image.width(), image.height());
  const auto src = image.interleaved();
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = src[i * 3 + channel];
  }
  return out;
}

GrayRaster to_gray(const PlaneF& plane) {
  GrayRaster out(plane.width, plane.height);
  auto dst = out.pixels();
  for (std::size_t i = 0; i < plane.values.size(); ++i) {
    dst[i] = round_to_u8(plane.values[i]);
  }
  return out;
}

ColorRaster8 render(const ColorRasterF& image) {
  ColorRaster8 out(image.width(), image.height());
  for (int c = 0; c < 3; ++c) {
    const auto src = image.plane(c);
    for (std::size_t i = 0; i < src.size(); ++i) {
      out.at(i % image.width(), i / image.width(), c) = round_to_u8(src[i]);
    }
  }
  return out;
}

}  // namespace pseudocolor
