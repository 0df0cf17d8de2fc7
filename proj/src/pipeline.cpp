// Copyright 2026 The logcount Authors
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

#include "logcount/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <sstream>

#include "logcount/random.hpp"

namespace fs = std::filesystem;

namespace logcount {

std::string version_info() {
  return std::string("logcount ") + kToolVersion +
         " schema=" + std::to_string(kReportSchemaVersion) +
         " prng=" + kPrngName;
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::json;
  if (text == "csv") return ReportFormat::csv;
  throw std::invalid_argument("report format must be json or csv, got '" +
                              std::string(text) + "'");
}

std::string_view to_string(ReportFormat f) {
  return f == ReportFormat::json ? "json" : "csv";
}

namespace {

std::string_view to_string(DegeneratePolicy p) {
  return p == DegeneratePolicy::convention ? "convention" : "nan";
}

DegeneratePolicy parse_degenerate(std::string_view text) {
  if (text == "convention") return DegeneratePolicy::convention;
  if (text == "nan") return DegeneratePolicy::propagate_nan;
  throw std::invalid_argument("degenerate must be convention or nan, got '" +
                              std::string(text) + "'");
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw std::invalid_argument(std::string(key) + " must be true or false");
}

std::int64_t parse_int(std::string_view key, std::string_view v) {
  std::int64_t out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc{} || p != v.data() + v.size()) {
    throw std::invalid_argument(std::string(key) + ": not an integer: '" +
                                std::string(v) + "'");
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool is_image_file(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".png" || ext == ".pgm";
}

}  // namespace

void PipelineConfig::validate() const {
  auto fail = [](const std::string& m) { throw std::invalid_argument(m); };
  if (cutoff < 0 || cutoff > 255) fail("cutoff must lie in [0, 255]");
  if (se_size < 1 || se_size % 2 == 0) fail("se_size must be odd and >= 1");
  if (iterations < 0) fail("iterations must be >= 0");
  if (min_area && *min_area < 0) fail("min_area must be >= 0");
}

std::string PipelineConfig::canonical() const {
  std::ostringstream os;
  os << "cutoff=" << cutoff << '\n'
     << "connectivity=" << to_string(connectivity) << '\n'
     << "erode_first=" << (erode_first ? "true" : "false") << '\n'
     << "se_shape=" << to_string(se_shape) << '\n'
     << "se_size=" << se_size << '\n'
     << "iterations=" << iterations << '\n'
     << "min_area=" << (min_area ? std::to_string(*min_area) : "auto") << '\n'
     << "accuracy_mode=" << to_string(accuracy_mode) << '\n'
     << "degenerate=" << to_string(degenerate) << '\n'
     << "report=" << to_string(report) << '\n'
     << "fail_fast=" << (fail_fast ? "true" : "false") << '\n';
  for (const auto& in : inputs) os << "input=" << in.string() << '\n';
  os << "truth_dir=" << truth_dir.string() << '\n'
     << "observed=" << observed.string() << '\n'
     << "annotate_dir=" << annotate_dir.string() << '\n'
     << "report_out=" << report_out.string() << '\n';
  return os.str();
}

PipelineConfig PipelineConfig::parse_canonical(std::string_view text) {
  PipelineConfig c;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key=value");
    }
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string val = trim(std::string_view(t).substr(eq + 1));
    if (key == "cutoff") c.cutoff = static_cast<int>(parse_int(key, val));
    else if (key == "connectivity") c.connectivity = parse_connectivity(val);
    else if (key == "erode_first") c.erode_first = parse_bool(key, val);
    else if (key == "se_shape") c.se_shape = parse_se_shape(val);
    else if (key == "se_size") c.se_size = static_cast<int>(parse_int(key, val));
    else if (key == "iterations") c.iterations = static_cast<int>(parse_int(key, val));
    else if (key == "min_area") {
      if (val == "auto") c.min_area.reset();
      else c.min_area = parse_int(key, val);
    } else if (key == "accuracy_mode") c.accuracy_mode = parse_accuracy_mode(val);
    else if (key == "degenerate") c.degenerate = parse_degenerate(val);
    else if (key == "report") c.report = parse_report_format(val);
    else if (key == "fail_fast") c.fail_fast = parse_bool(key, val);
    else if (key == "input") c.inputs.emplace_back(val);
    else if (key == "truth_dir") c.truth_dir = val;
    else if (key == "observed") c.observed = val;
    else if (key == "annotate_dir") c.annotate_dir = val;
    else if (key == "report_out") c.report_out = val;
    else {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": unknown key '" + key + "'");
    }
  }
  c.validate();
  return c;
}

std::vector<fs::path> collect_images(const std::vector<fs::path>& inputs) {
  std::vector<fs::path> out;
  for (const auto& in : inputs) {
    if (fs::is_directory(in)) {
      for (const auto& entry : fs::directory_iterator(in)) {
        if (entry.is_regular_file() && is_image_file(entry.path())) {
          out.push_back(entry.path());
        }
      }
    } else {
      out.push_back(in);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::map<std::string, int> parse_observed_csv(std::string_view text) {
  std::map<std::string, int> out;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto comma = t.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("observed csv line " + std::to_string(lineno) +
                                  ": expected image_id,observed");
    }
    const std::string id = trim(std::string_view(t).substr(0, comma));
    const std::string num = trim(std::string_view(t).substr(comma + 1));
    int v = 0;
    auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
    if (num.empty() || ec != std::errc{} || p != num.data() + num.size()) {
      if (lineno == 1 && out.empty()) continue;  // header
      throw std::invalid_argument("observed csv line " + std::to_string(lineno) +
                                  ": observed count is not an integer");
    }
    if (v < 1) {
      throw std::invalid_argument("observed csv line " + std::to_string(lineno) +
                                  ": observed count must be >= 1");
    }
    if (!out.emplace(id, v).second) {
      throw std::invalid_argument("observed csv line " + std::to_string(lineno) +
                                  ": duplicate image_id '" + id + "'");
    }
  }
  return out;
}

std::map<std::string, int> read_observed_csv(const fs::path& path) {
  const auto bytes = read_bytes(path);
  return parse_observed_csv(
      std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

namespace {

ImageResult process_image(const fs::path& path, const PipelineConfig& cfg,
                          const StructuringElement& se,
                          const std::map<std::string, int>& observed) {
  ImageResult r;
  r.name = path.filename().string();
  r.image_id = path.stem().string();

  const BinaryMask mask = threshold(read_image(path), cfg.cutoff);

  if (!cfg.truth_dir.empty()) {
    const fs::path truth_path = cfg.truth_dir / r.name;
    if (!fs::exists(truth_path)) {
      throw std::runtime_error("no ground truth named " + r.name + " in " +
                               cfg.truth_dir.string());
    }
    const BinaryMask truth = threshold(read_image(truth_path), cfg.cutoff);
    ImageEvaluation e;
    e.name = r.name;
    e.counts = serial::confusion(mask, truth);
    e.report = indices(e.counts, cfg.degenerate);
    r.evaluation = e;
  }

  const BinaryMask counted =
      cfg.erode_first ? erode_iterated(mask, se, cfg.iterations) : mask;
  const std::int64_t min_area =
      cfg.min_area ? *cfg.min_area : default_min_area(mask.resolution());
  r.count = count(counted, cfg.connectivity, min_area, r.image_id);

  if (!cfg.observed.empty()) {
    auto it = observed.find(r.image_id);
    if (it == observed.end()) it = observed.find(r.name);
    if (it == observed.end()) {
      throw std::runtime_error("no observed count for image_id " + r.image_id);
    }
    attach_observed(r.count, it->second, cfg.accuracy_mode);
  }

  if (!cfg.annotate_dir.empty()) {
    const auto png = encode_rgb_png(annotate(counted, r.count));
    write_bytes(cfg.annotate_dir / (r.image_id + ".png"), png);
  }
  return r;
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& config) {
  config.validate();
  PipelineResult result;
  result.has_truth = !config.truth_dir.empty();

  const auto files = collect_images(config.inputs);
  const StructuringElement se =
      make_structuring_element(config.se_shape, config.se_size);
  std::map<std::string, int> observed;
  if (!config.observed.empty()) observed = read_observed_csv(config.observed);
  if (!config.annotate_dir.empty()) fs::create_directories(config.annotate_dir);

  std::vector<std::optional<ImageResult>> slots(files.size());
  std::vector<std::string> failures(files.size());
  const auto n = static_cast<std::int64_t>(files.size());

  auto run_one = [&](std::int64_t i) {
    try {
      slots[i] = process_image(files[i], config, se, observed);
    } catch (const std::exception& e) {
      failures[i] = e.what();
      if (failures[i].empty()) failures[i] = "unknown error";
    }
  };

  if (config.fail_fast) {
    for (std::int64_t i = 0; i < n; ++i) {
      run_one(i);
      if (!failures[i].empty()) break;
    }
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) run_one(i);
  }

  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!failures[i].empty()) {
      result.errors.push_back({files[i].string(), failures[i]});
    } else if (slots[i]) {
      result.images.push_back(std::move(*slots[i]));
    }
  }

  std::vector<ImageEvaluation> evaluated;
  double accuracy_sum = 0.0;
  int accuracy_n = 0;
  for (const auto& img : result.images) {
    if (img.evaluation) evaluated.push_back(*img.evaluation);
    if (img.count.count_accuracy) {
      accuracy_sum += *img.count.count_accuracy;
      ++accuracy_n;
    }
  }
  if (!evaluated.empty()) result.index_means = mean_indices(evaluated);
  if (accuracy_n > 0) result.mean_count_accuracy = accuracy_sum / accuracy_n;
  return result;
}

std::vector<EvalPair> load_eval_pairs(const fs::path& pred_dir,
                                      const fs::path& truth_dir, int cutoff) {
  const auto preds = collect_images({pred_dir});
  const auto truths = collect_images({truth_dir});
  std::vector<std::string> pred_names, truth_names;
  for (const auto& p : preds) pred_names.push_back(p.filename().string());
  for (const auto& t : truths) truth_names.push_back(t.filename().string());
  for (const auto& name : pred_names) {
    if (std::find(truth_names.begin(), truth_names.end(), name) == truth_names.end()) {
      throw std::runtime_error("prediction " + name + " has no ground truth in " +
                               truth_dir.string());
    }
  }
  for (const auto& name : truth_names) {
    if (std::find(pred_names.begin(), pred_names.end(), name) == pred_names.end()) {
      throw std::runtime_error("ground truth " + name + " has no prediction in " +
                               pred_dir.string());
    }
  }
  std::vector<EvalPair> pairs;
  for (const auto& p : preds) {
    const std::string name = p.filename().string();
    pairs.push_back({name, threshold(read_image(p), cutoff),
                     threshold(read_image(truth_dir / name), cutoff)});
  }
  return pairs;
}

RgbImage colorize(const LabelMap& lm) {
  RgbImage img(lm.width(), lm.height());
  for (int y = 0; y < lm.height(); ++y) {
    for (int x = 0; x < lm.width(); ++x) {
      const Label l = lm.at(x, y);
      if (l == 0) continue;
      // Fixed per-label hash; never maps to pure black.
      std::uint64_t h = static_cast<std::uint64_t>(l) * 0x9E3779B97F4A7C15ull;
      h ^= h >> 29;
      img.set(x, y, {static_cast<std::uint8_t>(64 + (h & 0xBF)),
                     static_cast<std::uint8_t>(64 + ((h >> 8) & 0xBF)),
                     static_cast<std::uint8_t>(64 + ((h >> 16) & 0xBF))});
    }
  }
  return img;
}

}  // namespace logcount
