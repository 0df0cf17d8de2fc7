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

#include "logcount/counting.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace logcount {

FilteredComponents filter_components(const LabelMap& lm,
                                     std::span<const ComponentStats> stats,
                                     std::int64_t min_area) {
  if (stats.size() != static_cast<std::size_t>(lm.component_count())) {
    throw std::invalid_argument("stats do not match label map: " +
                                std::to_string(stats.size()) + " entries for " +
                                std::to_string(lm.component_count()) +
                                " components");
  }
  std::vector<Label> remap(stats.size() + 1, 0);
  std::vector<ComponentStats> kept;
  Label next = 0;
  for (const auto& s : stats) {
    if (s.area < min_area) continue;
    remap[s.label] = ++next;
    ComponentStats renamed = s;
    renamed.label = next;
    kept.push_back(renamed);
  }
  std::vector<Label> labels(lm.labels().begin(), lm.labels().end());
  for (auto& l : labels) l = remap[l];
  return {LabelMap(lm.width(), lm.height(), std::move(labels), next),
          std::move(kept)};
}

CountReport count(const BinaryMask& mask, Connectivity conn,
                  std::int64_t min_area, std::string image_id) {
  const LabelMap lm = label_union_find(mask, conn);
  const auto stats = component_stats(lm);
  const auto filtered = filter_components(lm, stats, min_area);

  CountReport r;
  r.image_id = std::move(image_id);
  r.raw_components = lm.component_count();
  r.filtered_components = filtered.map.component_count();
  r.min_area = min_area;
  for (const auto& s : filtered.stats) r.boxes.push_back(s.bbox);
  return r;
}

AccuracyMode parse_accuracy_mode(std::string_view text) {
  if (text == "symmetric") return AccuracyMode::symmetric;
  if (text == "ratio") return AccuracyMode::ratio;
  throw std::invalid_argument("accuracy mode must be symmetric or ratio, got '" +
                              std::string(text) + "'");
}

std::string_view to_string(AccuracyMode mode) {
  return mode == AccuracyMode::symmetric ? "symmetric" : "ratio";
}

double count_accuracy(int counted, int observed, AccuracyMode mode) {
  if (observed < 1) {
    throw std::invalid_argument("observed count must be >= 1, got " +
                                std::to_string(observed));
  }
  if (counted < 0) throw std::invalid_argument("counted must be >= 0");
  const double obs = observed;
  if (mode == AccuracyMode::ratio) return 100.0 * counted / obs;
  const double err = std::abs(static_cast<double>(counted) - obs);
  const double score = 100.0 * (1.0 - err / obs);
  return score < 0.0 ? 0.0 : score;
}

void attach_observed(CountReport& report, int observed, AccuracyMode mode) {
  report.count_accuracy =
      count_accuracy(report.filtered_components, observed, mode);
  report.observed = observed;
}

std::int64_t default_min_area(Resolution r) {
  // area * 0.0005 == area / 2000
  const std::int64_t v = r.area() / 2000;
  return v < 1 ? 1 : v;
}

}  // namespace logcount
