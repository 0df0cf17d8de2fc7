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

#include <cstdint>
#include <string>
#include <vector>

#include "logcount/raster.hpp"

namespace logcount {

/// Pixel tallies with foreground as the positive class.
struct ConfusionCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t tn = 0;
  std::int64_t fn = 0;

  [[nodiscard]] std::int64_t total() const { return tp + fp + tn + fn; }
  friend bool operator==(const ConfusionCounts&,
                         const ConfusionCounts&) = default;
};

struct IndexReport {
  double accuracy = 0.0;
  double f1 = 0.0;
  double kappa = 0.0;
  double iou = 0.0;
};

/// How zero denominators are resolved.
enum class DegeneratePolicy {
  /// f1/iou with tp = fp = fn = 0 score 1; kappa with p_e = 1 scores 1 when
  /// p_o = 1 and 0 otherwise.
  convention,
  /// Undefined indices are NaN.
  propagate_nan,
};

/// Throws DimensionMismatch when the shapes differ.
[[nodiscard]] ConfusionCounts confusion(const BinaryMask& pred,
                                        const BinaryMask& truth);

/// Accuracy, F1, Cohen's kappa and IoU. Throws on all-zero counts.
[[nodiscard]] IndexReport indices(
    const ConfusionCounts& c,
    DegeneratePolicy policy = DegeneratePolicy::convention);

struct EvalPair {
  std::string name;
  BinaryMask pred;
  BinaryMask truth;
};

struct ImageEvaluation {
  std::string name;
  ConfusionCounts counts;
  IndexReport report;
};

struct BatchEvaluation {
  std::vector<ImageEvaluation> images;
  /// Unweighted mean of the per-image indices.
  IndexReport means;
};

/// Per-image indices in input order plus their arithmetic means. Images are
/// evaluated in parallel. A failing pair aborts with its name in the message.
[[nodiscard]] BatchEvaluation evaluate_batch(
    const std::vector<EvalPair>& pairs,
    DegeneratePolicy policy = DegeneratePolicy::convention);

[[nodiscard]] IndexReport mean_indices(const std::vector<ImageEvaluation>& images);

namespace serial {
[[nodiscard]] ConfusionCounts confusion(const BinaryMask& pred,
                                        const BinaryMask& truth);
}  // namespace serial

}  // namespace logcount
