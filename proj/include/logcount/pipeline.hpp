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

#pragma once

// Batch driver wiring the modules into the counting and evaluation flows,
// plus the report renderers shared by the CLI.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logcount/counting.hpp"
#include "logcount/labeling.hpp"
#include "logcount/metrics.hpp"
#include "logcount/morphology.hpp"
#include "logcount/synth.hpp"

namespace logcount {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

/// "logcount 1.0.0 schema=1 prng=mt19937_64"
[[nodiscard]] std::string version_info();

enum class ReportFormat { json, csv };
[[nodiscard]] ReportFormat parse_report_format(std::string_view text);
[[nodiscard]] std::string_view to_string(ReportFormat f);

struct PipelineConfig {
  int cutoff = 127;
  Connectivity connectivity = Connectivity::eight;
  bool erode_first = false;
  SeShape se_shape = SeShape::box;
  int se_size = 3;
  int iterations = 1;
  /// Unset: default_min_area() of each image.
  std::optional<std::int64_t> min_area;
  AccuracyMode accuracy_mode = AccuracyMode::symmetric;
  DegeneratePolicy degenerate = DegeneratePolicy::convention;
  ReportFormat report = ReportFormat::json;
  bool fail_fast = false;

  std::vector<std::filesystem::path> inputs;
  std::filesystem::path truth_dir;
  std::filesystem::path observed;
  std::filesystem::path annotate_dir;
  std::filesystem::path report_out;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  /// One `key=value` per line in a fixed key order; inputs repeat `input=`.
  [[nodiscard]] std::string canonical() const;
  /// Inverse of canonical(). Blank lines and `#` comments are ignored.
  [[nodiscard]] static PipelineConfig parse_canonical(std::string_view text);

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

struct FileError {
  std::string file;
  std::string message;
};

struct ImageResult {
  std::string name;      // file name
  std::string image_id;  // file stem
  CountReport count;
  std::optional<ImageEvaluation> evaluation;
};

struct PipelineResult {
  std::vector<ImageResult> images;
  std::vector<FileError> errors;
  bool has_truth = false;
  /// Present when at least one image was evaluated.
  std::optional<IndexReport> index_means;
  /// Present when at least one image had an observed count.
  std::optional<double> mean_count_accuracy;

  [[nodiscard]] int exit_code() const { return errors.empty() ? 0 : 1; }
};

/// Expands directories (non-recursively, .png/.pgm only) and sorts by path.
[[nodiscard]] std::vector<std::filesystem::path> collect_images(
    const std::vector<std::filesystem::path>& inputs);

/// `image_id,observed` rows; an optional header line is skipped.
[[nodiscard]] std::map<std::string, int> read_observed_csv(
    const std::filesystem::path& path);
[[nodiscard]] std::map<std::string, int> parse_observed_csv(std::string_view text);

/// Per image: decode, binarize, evaluate against the same-named truth file
/// (when truth_dir is set), optionally erode, count, score against observed,
/// and annotate. Failures are recorded per file; with fail_fast the run stops
/// at the first failure in path order.
[[nodiscard]] PipelineResult run_pipeline(const PipelineConfig& config);

[[nodiscard]] std::string render_pipeline_json(const PipelineResult& result,
                                               const PipelineConfig& config);
/// Columns: image_id,raw,filtered,observed,count_accuracy and, with truths,
/// tp,fp,tn,fn,accuracy,f1,kappa,iou.
[[nodiscard]] std::string render_pipeline_csv(const PipelineResult& result);

/// Pairs `pred_dir/<name>` with `truth_dir/<name>`. Unmatched files on either
/// side are errors.
[[nodiscard]] std::vector<EvalPair> load_eval_pairs(
    const std::filesystem::path& pred_dir,
    const std::filesystem::path& truth_dir, int cutoff);

[[nodiscard]] std::string render_eval_json(const BatchEvaluation& batch);
[[nodiscard]] std::string render_eval_csv(const BatchEvaluation& batch);

[[nodiscard]] std::string render_stats_json(const LabelMap& lm,
                                            const std::vector<ComponentStats>& stats,
                                            Connectivity conn,
                                            std::string_view algo);

[[nodiscard]] std::string render_truth_json(const SynthTruth& truth,
                                            std::uint64_t seed);

/// Distinct color per label for visual inspection; background is black.
[[nodiscard]] RgbImage colorize(const LabelMap& lm);

}  // namespace logcount
