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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pseudocolor/baselines.hpp"
#include "pseudocolor/colorfn.hpp"
#include "pseudocolor/metrics.hpp"
#include "pseudocolor/postproc.hpp"
#include "pseudocolor/raster.hpp"
#include "pseudocolor/raster_io.hpp"

namespace pcolor {

namespace pc = pseudocolor;
namespace fs = std::filesystem;
using pc::Error;
using pc::ErrorCode;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParams: return kExitParams;
    case ErrorCode::kDegenerateHistogram: return kExitDegenerate;
    default: return kExitIo;
  }
}

namespace {

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_output(const std::string& path, const pc::Bytes& bytes) {
  pc::write_file_atomic(path, bytes);
}

bool starts_with(const pc::Bytes& bytes, std::string_view prefix) {
  return bytes.size() >= prefix.size() &&
         std::equal(prefix.begin(), prefix.end(), bytes.begin());
}

// A color image read from PPM, or from RPC together with its lossless
// planes.
struct LoadedColor {
  pc::ColorRaster8 display;
  std::optional<pc::ColorRasterF> lossless;
};

LoadedColor load_color(const std::string& path) {
  const auto bytes = pc::read_file(path);
  if (starts_with(bytes, "RPC1")) {
    auto f = pc::read_rpc(bytes);
    auto display = pc::render(f);
    return {std::move(display), std::move(f)};
  }
  if (starts_with(bytes, "P6")) return {pc::read_ppm(bytes), std::nullopt};
  throw Error(ErrorCode::kBadMagic,
              path + ": expected a binary PPM (P6) or RPC1 file");
}

pc::QuantizePalette parse_palette(const std::string& text) {
  pc::QuantizePalette palette;
  std::stringstream entries(text);
  std::string entry;
  while (std::getline(entries, entry, ';')) {
    std::stringstream parts(entry);
    std::string part;
    std::vector<int> rgb;
    while (std::getline(parts, part, ',')) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(part, &used);
        if (used != part.size() || v < 0 || v > 255) throw std::out_of_range("");
        rgb.push_back(v);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kInvalidParams,
                    "palette channel '" + part + "' is not an integer in [0, 255]");
      }
    }
    if (rgb.size() != 3) {
      throw Error(ErrorCode::kInvalidParams,
                  "palette entry '" + entry + "' must be r,g,b");
    }
    palette.colors.push_back({static_cast<std::uint8_t>(rgb[0]),
                              static_cast<std::uint8_t>(rgb[1]),
                              static_cast<std::uint8_t>(rgb[2])});
  }
  return palette;
}

struct ColorizeOptions {
  std::string input;
  double alpha = 0.0;
  double beta = 0.0;
  std::string output;
  std::string render_path;
};

int cmd_colorize(const ColorizeOptions& o, std::ostream& out, std::ostream& err) {
  const auto params = pc::validate_params(o.alpha, o.beta);
  const auto gray = pc::read_pgm(pc::read_file(o.input));
  const auto color = pc::colorize(gray, params);
  write_output(o.output, pc::write_rpc(color));
  if (!o.render_path.empty()) {
    write_output(o.render_path, pc::write_ppm(pc::render(color)));
  }
  err << "region: " << pc::to_string(pc::classify_region(params)) << "\n";
  out << "alpha " << format17(params.alpha()) << " beta "
      << format17(params.beta()) << "\n";
  return kExitOk;
}

struct InvertOptions {
  std::string input;
  std::string output;
};

int cmd_invert(const InvertOptions& o) {
  const auto color = pc::read_rpc(pc::read_file(o.input));
  write_output(o.output, pc::write_pgm(pc::invert(color)));
  return kExitOk;
}

struct BaselineOptions {
  std::string method;
  std::string input;
  std::string output;
  int classes = 3;
  std::string palette;
  bool enhance = true;
  pc::DailyConfig daily;
};

int cmd_baseline(const BaselineOptions& o, std::ostream& out) {
  if (o.method == "daily") {
    pc::validate(o.daily);
    const auto gray = pc::read_pgm(pc::read_file(o.input));
    write_output(o.output, pc::write_ppm(pc::daily_colorize(gray, o.daily)));
    return kExitOk;
  }
  if (o.classes < 2 || o.classes > 4) {
    throw Error(ErrorCode::kInvalidParams, "--classes must be 2, 3 or 4");
  }
  const auto palette =
      o.palette.empty() ? pc::default_palette(o.classes) : parse_palette(o.palette);
  if (static_cast<int>(palette.colors.size()) != o.classes) {
    throw Error(ErrorCode::kInvalidParams,
                "--palette has " + std::to_string(palette.colors.size()) +
                    " colors, --classes is " + std::to_string(o.classes));
  }
  const auto gray = pc::read_pgm(pc::read_file(o.input));
  const auto thresholds = pc::otsu(pc::histogram(gray), o.classes);
  auto color = pc::quantize_pseudocolor(gray, thresholds, palette);
  if (o.enhance) color = pc::samanta_enhance(color);
  write_output(o.output, pc::write_ppm(color));
  out << "thresholds:";
  for (int t : thresholds.thresholds) out << " " << t;
  out << "\n";
  return kExitOk;
}

struct PostprocessOptions {
  std::string op;
  std::string input;
  std::string output;
  std::string reference;
  std::optional<double> d0;
  std::string mode = "lowpass";
};

int cmd_postprocess(const PostprocessOptions& o) {
  pc::GaussianFreqConfig freq;
  if (o.op == "glpf-freq") {
    if (!o.d0) throw Error(ErrorCode::kInvalidParams, "glpf-freq needs --d0");
    freq.d0 = *o.d0;
    freq.mode = o.mode == "highpass" ? pc::FilterMode::kHighpass
                                     : pc::FilterMode::kLowpass;
    pc::validate(freq);
  }
  if (o.op == "hm" && o.reference.empty()) {
    throw Error(ErrorCode::kInvalidParams, "hm needs --reference");
  }

  const auto bytes = pc::read_file(o.input);
  if (starts_with(bytes, "P5")) {
    if (o.op == "hm") {
      throw Error(ErrorCode::kInvalidParams,
                  "hm matches color channels; input must be PPM or RPC");
    }
    const auto gray = pc::read_pgm(bytes);
    const auto result = o.op == "glpf-spatial" ? pc::gaussian_spatial(gray)
                                               : pc::gaussian_frequency(gray, freq);
    write_output(o.output, pc::write_pgm(result));
    return kExitOk;
  }

  const auto image = load_color(o.input).display;
  pc::ColorRaster8 result = image;
  if (o.op == "hm") {
    result = pc::histogram_match(image, load_color(o.reference).display);
  } else if (o.op == "glpf-spatial") {
    result = pc::gaussian_spatial(image);
  } else {
    result = pc::gaussian_frequency(image, freq);
  }
  write_output(o.output, pc::write_ppm(result));
  return kExitOk;
}

struct MetricsOptions {
  std::vector<std::string> candidates;
  std::vector<std::string> labels;
  std::string reference;
  std::string gray;
  std::string report;
  int window = 11;
  double sigma = 1.5;
};

nlohmann::ordered_json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

int cmd_metrics(const MetricsOptions& o, std::ostream& out) {
  if (!o.labels.empty() && o.labels.size() != o.candidates.size()) {
    throw Error(ErrorCode::kInvalidParams,
                "--label given " + std::to_string(o.labels.size()) +
                    " times for " + std::to_string(o.candidates.size()) +
                    " candidates");
  }
  auto ssim_config = pc::SsimConfig::for_range(255.0);
  ssim_config.window_size = o.window;
  ssim_config.sigma = o.sigma;
  pc::validate(ssim_config);

  std::vector<pc::ReportVariant> variants;
  for (std::size_t i = 0; i < o.candidates.size(); ++i) {
    auto loaded = load_color(o.candidates[i]);
    const std::string label =
        o.labels.empty() ? fs::path(o.candidates[i]).stem().string() : o.labels[i];
    variants.push_back({label, std::move(loaded.display), std::move(loaded.lossless)});
  }
  std::optional<pc::ColorRaster8> reference;
  if (!o.reference.empty()) reference = load_color(o.reference).display;
  std::optional<pc::GrayRaster> gray;
  if (!o.gray.empty()) gray = pc::read_pgm(pc::read_file(o.gray));

  const auto reports = pc::build_report(gray, variants, reference, ssim_config);

  nlohmann::ordered_json doc;
  doc["reference"] = o.reference.empty() ? nlohmann::ordered_json(nullptr)
                                         : nlohmann::ordered_json(o.reference);
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json e;
    e["label"] = r.method_label;
    e["rmse"] = optional_number(r.rmse);
    e["nrmse"] = optional_number(r.nrmse);
    e["saturation_error"] = optional_number(r.saturation_error);
    if (r.ssim) {
      e["ssim"] = {{"r", r.ssim->bands[0]},
                   {"g", r.ssim->bands[1]},
                   {"b", r.ssim->bands[2]},
                   {"mean", r.ssim->mean}};
    } else {
      e["ssim"] = nullptr;
    }
    e["reversible"] = r.reversible ? nlohmann::ordered_json(*r.reversible)
                                   : nlohmann::ordered_json(nullptr);
    doc["entries"].push_back(std::move(e));
  }
  const std::string text = doc.dump(2) + "\n";
  write_output(o.report, pc::Bytes(text.begin(), text.end()));
  for (const auto& r : reports) {
    out << r.method_label;
    if (r.reversible) out << " reversible=" << (*r.reversible ? "yes" : "no");
    if (r.saturation_error) out << " saturation_error=" << *r.saturation_error;
    if (r.ssim) out << " ssim=" << r.ssim->mean;
    out << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Reversible pseudo-coloring of single-band rasters"};
  app.require_subcommand(1);

  ColorizeOptions colorize;
  auto* c = app.add_subcommand("colorize", "Colorize a PGM into a lossless RPC");
  c->add_option("-i,--input", colorize.input, "Input PGM")->required();
  c->add_option("-a,--alpha", colorize.alpha, "Red weight")->required();
  c->add_option("-b,--beta", colorize.beta, "Green weight")->required();
  c->add_option("-o,--output", colorize.output, "Output RPC")->required();
  c->add_option("--render", colorize.render_path, "Also write a clipped PPM");

  InvertOptions invert;
  auto* inv = app.add_subcommand("invert", "Recover the grayscale band from an RPC");
  inv->add_option("-i,--input", invert.input, "Input RPC")->required();
  inv->add_option("-o,--output", invert.output, "Output PGM")->required();

  BaselineOptions baseline;
  auto* b = app.add_subcommand("baseline", "Run a comparison colorizer");
  b->add_option("-m,--method", baseline.method, "otsu-samanta | daily")
      ->required()
      ->check(CLI::IsMember({"otsu-samanta", "daily"}));
  b->add_option("-i,--input", baseline.input, "Input PGM")->required();
  b->add_option("-o,--output", baseline.output, "Output PPM")->required();
  b->add_option("-k,--classes", baseline.classes, "Otsu class count (2-4)")
      ->capture_default_str();
  b->add_option("--palette", baseline.palette,
                "Class colors, low to high: r,g,b;r,g,b;...");
  b->add_flag("!--no-enhance", baseline.enhance, "Skip the hue enhancement pass");
  b->add_option("--bins", baseline.daily.num_bins, "Daily bin count")
      ->capture_default_str();
  b->add_option("--hue-start", baseline.daily.hue_start, "Hue of the lowest bin")
      ->capture_default_str();
  b->add_option("--hue-end", baseline.daily.hue_end, "Hue of the highest bin")
      ->capture_default_str();

  PostprocessOptions post;
  auto* p = app.add_subcommand("postprocess", "Histogram matching or Gaussian LPF");
  p->add_option("--op", post.op, "hm | glpf-spatial | glpf-freq")
      ->required()
      ->check(CLI::IsMember({"hm", "glpf-spatial", "glpf-freq"}));
  p->add_option("-i,--input", post.input, "Input PGM, PPM or RPC")->required();
  p->add_option("-o,--output", post.output, "Output image")->required();
  p->add_option("-r,--reference", post.reference, "Reference PPM for hm");
  p->add_option("--d0", post.d0, "Gaussian spread for glpf-freq");
  p->add_option("--mode", post.mode, "lowpass | highpass")
      ->check(CLI::IsMember({"lowpass", "highpass"}))
      ->capture_default_str();

  MetricsOptions metrics;
  auto* m = app.add_subcommand("metrics", "Compare colorized candidates");
  m->add_option("-c,--candidate", metrics.candidates, "Candidate PPM or RPC")
      ->required();
  m->add_option("-l,--label", metrics.labels, "Label per candidate");
  m->add_option("-r,--reference", metrics.reference, "Natural-color reference PPM");
  m->add_option("-g,--gray", metrics.gray, "Grayscale input for the reversibility check");
  m->add_option("--report", metrics.report, "Output JSON report")->required();
  m->add_option("--ssim-window", metrics.window, "SSIM window side (odd)")
      ->capture_default_str();
  m->add_option("--ssim-sigma", metrics.sigma, "SSIM window sigma")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParams;
  }

  try {
    if (c->parsed()) return cmd_colorize(colorize, out, err);
    if (inv->parsed()) return cmd_invert(invert);
    if (b->parsed()) return cmd_baseline(baseline, out);
    if (p->parsed()) return cmd_postprocess(post);
    if (m->parsed()) return cmd_metrics(metrics, out);
  } catch (const Error& e) {
    err << "error (" << pc::to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitParams;
}

}  // namespace pcolor
