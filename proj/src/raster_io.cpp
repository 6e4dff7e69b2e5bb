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

#include "pseudocolor/raster_io.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>
#include <string_view>
#include <system_error>

#include "pseudocolor/error.hpp"

namespace pseudocolor {

namespace {

class HeaderCursor {
 public:
  explicit HeaderCursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments running to end of line.
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const char c = static_cast<char>(bytes_[pos_]);
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::uint64_t read_uint(const char* what) {
    skip_separators();
    std::uint64_t value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (++digits > 12) {
        throw Error(ErrorCode::kMalformedHeader,
                    std::string("header field too large: ") + what);
      }
      ++pos_;
    }
    if (digits == 0) {
      throw Error(ErrorCode::kMalformedHeader,
                  std::string("expected a number for ") + what);
    }
    return value;
  }

  // Reads a whitespace-delimited token without comment handling.
  std::string read_token() {
    while (pos_ < bytes_.size() && (bytes_[pos_] == ' ' || bytes_[pos_] == '\t'))
      ++pos_;
    std::string token;
    while (pos_ < bytes_.size() &&
           !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      token.push_back(static_cast<char>(bytes_[pos_++]));
    }
    return token;
  }

  bool consume(char c) {
    if (pos_ < bytes_.size() && bytes_[pos_] == static_cast<std::uint8_t>(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  // The single whitespace byte that terminates a netpbm header.
  void consume_header_terminator() {
    if (pos_ >= bytes_.size() ||
        !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      throw Error(ErrorCode::kMalformedHeader,
                  "missing whitespace after maxval");
    }
    ++pos_;
  }

  std::size_t pos() const { return pos_; }
  std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

constexpr std::uint64_t kMaxDimension = std::uint64_t{1} << 24;

void check_header_dims(std::uint64_t width, std::uint64_t height) {
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::kMalformedHeader,
                "width and height must be at least 1");
  }
  if (width > kMaxDimension || height > kMaxDimension) {
    throw Error(ErrorCode::kMalformedHeader, "declared dimensions too large");
  }
}

struct PnmHeader {
  std::size_t width;
  std::size_t height;
  std::span<const std::uint8_t> payload;
};

PnmHeader parse_pnm(std::span<const std::uint8_t> bytes, char kind,
                    std::size_t channels) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != kind) {
    throw Error(ErrorCode::kMalformedHeader,
                std::string("bad magic, expected P") + kind);
  }
  HeaderCursor cur(bytes.subspan(2));
  const auto width = cur.read_uint("width");
  const auto height = cur.read_uint("height");
  const auto maxval = cur.read_uint("maxval");
  check_header_dims(width, height);
  if (maxval != 255) {
    throw Error(ErrorCode::kUnsupportedMaxval,
                "maxval " + std::to_string(maxval) + " unsupported, need 255");
  }
  cur.consume_header_terminator();
  const std::size_t need = width * height * channels;
  auto payload = cur.rest();
  if (payload.size() < need) {
    throw Error(ErrorCode::kTruncatedPayload,
                "payload has " + std::to_string(payload.size()) +
                    " bytes, expected " + std::to_string(need));
  }
  return {static_cast<std::size_t>(width), static_cast<std::size_t>(height),
          payload.first(need)};
}

Bytes pnm_header(char kind, std::size_t width, std::size_t height) {
  const std::string header = std::string("P") + kind + "\n" +
                             std::to_string(width) + " " +
                             std::to_string(height) + "\n255\n";
  return Bytes(header.begin(), header.end());
}

constexpr std::string_view kRpcMagic = "RPC1";

std::string format_param(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_param(const std::string& token) {
  if (token.empty()) {
    throw Error(ErrorCode::kMalformedHeader, "missing alpha/beta field");
  }
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size()) {
    throw Error(ErrorCode::kMalformedHeader,
                "alpha/beta field is not a number: " + token);
  }
  return v;
}

void put_f32_le(Bytes& out, float v) {
  const auto bits = std::bit_cast<std::uint32_t>(v);
  for (int shift = 0; shift < 32; shift += 8) {
    out.push_back(static_cast<std::uint8_t>((bits >> shift) & 0xFFu));
  }
}

float get_f32_le(const std::uint8_t* p) {
  const std::uint32_t bits = static_cast<std::uint32_t>(p[0]) |
                             (static_cast<std::uint32_t>(p[1]) << 8) |
                             (static_cast<std::uint32_t>(p[2]) << 16) |
                             (static_cast<std::uint32_t>(p[3]) << 24);
  return std::bit_cast<float>(bits);
}

}  // namespace

GrayRaster read_pgm(std::span<const std::uint8_t> bytes) {
  const auto h = parse_pnm(bytes, '5', 1);
  return GrayRaster(h.width, h.height, Bytes(h.payload.begin(), h.payload.end()));
}

Bytes write_pgm(const GrayRaster& image) {
  Bytes out = pnm_header('5', image.width(), image.height());
  out.insert(out.end(), image.pixels().begin(), image.pixels().end());
  return out;
}

ColorRaster8 read_ppm(std::span<const std::uint8_t> bytes) {
  const auto h = parse_pnm(bytes, '6', 3);
  return ColorRaster8(h.width, h.height,
                      Bytes(h.payload.begin(), h.payload.end()));
}

Bytes write_ppm(const ColorRaster8& image) {
  Bytes out = pnm_header('6', image.width(), image.height());
  out.insert(out.end(), image.interleaved().begin(), image.interleaved().end());
  return out;
}

ColorRasterF quantize_for_storage(const ColorRasterF& image) {
  std::array<std::vector<double>, 3> planes;
  for (int c = 0; c < 3; ++c) {
    const auto src = image.plane(c);
    planes[c].reserve(src.size());
    for (double v : src) {
      planes[c].push_back(static_cast<double>(static_cast<float>(v)));
    }
  }
  return ColorRasterF(image.width(), image.height(), std::move(planes),
                      image.meta());
}

ColorRasterF read_rpc(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kRpcMagic.size() + 1 ||
      std::string_view(reinterpret_cast<const char*>(bytes.data()),
                       kRpcMagic.size()) != kRpcMagic ||
      bytes[kRpcMagic.size()] != '\n') {
    throw Error(ErrorCode::kBadMagic, "not an RPC1 container");
  }
  HeaderCursor cur(bytes.subspan(kRpcMagic.size() + 1));
  const auto width = cur.read_uint("width");
  const auto height = cur.read_uint("height");
  check_header_dims(width, height);
  if (!cur.consume('\n')) {
    throw Error(ErrorCode::kMalformedHeader, "expected newline after dimensions");
  }
  const double alpha = parse_param(cur.read_token());
  const double beta = parse_param(cur.read_token());
  if (!cur.consume('\n')) {
    throw Error(ErrorCode::kMalformedHeader, "expected newline after alpha/beta");
  }

  const std::size_t count = width * height;
  const std::size_t need = count * 3 * sizeof(float);
  const auto payload = cur.rest();
  if (payload.size() < need) {
    throw Error(ErrorCode::kTruncatedPayload,
                "RPC payload has " + std::to_string(payload.size()) +
                    " bytes, expected " + std::to_string(need));
  }
  if (payload.size() > need) {
    throw Error(ErrorCode::kDimensionMismatch,
                "RPC payload has " + std::to_string(payload.size() - need) +
                    " bytes beyond the declared " + std::to_string(width) +
                    "x" + std::to_string(height) + " planes");
  }

  std::array<std::vector<double>, 3> planes;
  const std::uint8_t* p = payload.data();
  for (auto& plane : planes) {
    plane.resize(count);
    for (auto& v : plane) {
      v = get_f32_le(p);
      p += sizeof(float);
    }
  }
  std::optional<ColorProvenance> meta;
  if (!std::isnan(alpha) && !std::isnan(beta)) meta = ColorProvenance{alpha, beta};
  return ColorRasterF(width, height, std::move(planes), meta);
}

Bytes write_rpc(const ColorRasterF& image) {
  std::string header = std::string(kRpcMagic) + "\n" +
                       std::to_string(image.width()) + " " +
                       std::to_string(image.height()) + "\n";
  if (image.meta()) {
    header += format_param(image.meta()->alpha) + " " +
              format_param(image.meta()->beta) + "\n";
  } else {
    header += "nan nan\n";
  }
  Bytes out(header.begin(), header.end());
  out.reserve(out.size() + image.pixel_count() * 3 * sizeof(float));
  for (int c = 0; c < 3; ++c) {
    for (double v : image.plane(c)) {
      const auto f = static_cast<float>(v);
      if (!std::isfinite(f)) {
        throw Error(ErrorCode::kInvalidValue,
                    "channel value overflows binary32 storage");
      }
      put_f32_le(out, f);
    }
  }
  return out;
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string());
  }
  Bytes data((std::istreambuf_iterator<char>(in)),
             std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw Error(ErrorCode::kIo, "read failed for " + path.string());
  }
  return data;
}

void write_file_atomic(const std::filesystem::path& path,
                       std::span<const std::uint8_t> bytes) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::kIo, "cannot create " + tmp.string());
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
      throw Error(ErrorCode::kIo, "write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot move output into place at " +
                                    path.string());
  }
}

}  // namespace pseudocolor
