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

#ifndef PSEUDOCOLOR_RASTER_IO_HPP_
#define PSEUDOCOLOR_RASTER_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "pseudocolor/raster.hpp"

namespace pseudocolor {

using Bytes = std::vector<std::uint8_t>;

// Binary netpbm, maxval 255 only. Readers accept arbitrary whitespace and
// '#' comments in the header; writers emit "P5\n<w> <h>\n255\n".
GrayRaster read_pgm(std::span<const std::uint8_t> bytes);
Bytes write_pgm(const GrayRaster& image);
ColorRaster8 read_ppm(std::span<const std::uint8_t> bytes);
Bytes write_ppm(const ColorRaster8& image);

// RPC container:
//   "RPC1\n<width> <height>\n<alpha> <beta>\n"
// followed by the R, G and B planes, each width*height little-endian
// binary32 values in row-major order. alpha/beta are printed with 17
// significant digits, or "nan nan" when the raster carries no provenance.
ColorRasterF read_rpc(std::span<const std::uint8_t> bytes);
Bytes write_rpc(const ColorRasterF& image);

// What write_rpc actually stores: every channel rounded to binary32.
// read_rpc(write_rpc(x)) == quantize_for_storage(x).
ColorRasterF quantize_for_storage(const ColorRasterF& image);

Bytes read_file(const std::filesystem::path& path);
// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       std::span<const std::uint8_t> bytes);

}  // namespace pseudocolor

#endif  // PSEUDOCOLOR_RASTER_IO_HPP_
