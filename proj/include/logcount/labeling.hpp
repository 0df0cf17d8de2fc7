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
#include <string_view>
#include <vector>

#include "logcount/raster.hpp"

namespace logcount {

enum class Connectivity { four = 4, eight = 8 };

[[nodiscard]] Connectivity parse_connectivity(std::string_view text);
[[nodiscard]] std::string_view to_string(Connectivity c);

using Label = std::int32_t;

/// Component ids per pixel: 0 is background, components are 1..K with ids
/// assigned in first-encounter raster order.
class LabelMap {
 public:
  LabelMap(int width, int height, std::vector<Label> labels,
           int component_count);

  [[nodiscard]] int width() const { return width_; }
  [[nodiscard]] int height() const { return height_; }
  [[nodiscard]] int component_count() const { return component_count_; }
  [[nodiscard]] Label at(int x, int y) const {
    return labels_[static_cast<std::size_t>(y) * width_ + x];
  }
  [[nodiscard]] std::span<const Label> labels() const { return labels_; }

  friend bool operator==(const LabelMap&, const LabelMap&) = default;

 private:
  int width_;
  int height_;
  std::vector<Label> labels_;
  int component_count_;
};

struct BoundingBox {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;

  [[nodiscard]] bool contains(int px, int py) const {
    return px >= x && py >= y && px < x + width && py < y + height;
  }
  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

struct ComponentStats {
  Label label = 0;
  std::int64_t area = 0;
  BoundingBox bbox;
  double centroid_x = 0.0;
  double centroid_y = 0.0;
};

/// Two-pass raster scan with an explicit equivalence table. Pass one follows
/// the classic decision sequence: background pixels are skipped; a labeled
/// neighbor donates its label (the diagonal first under 8-connectivity); a
/// pixel with no labeled neighbor opens a new provisional label; every other
/// labeled neighbor with a different label records an equivalence. The table
/// is then resolved and labels are renumbered densely.
[[nodiscard]] LabelMap label_scan(const BinaryMask& mask,
                                  Connectivity conn = Connectivity::eight);

/// Two-pass labeling that merges provisional labels on the fly through a
/// disjoint-set forest with path compression.
[[nodiscard]] LabelMap label_union_find(const BinaryMask& mask,
                                        Connectivity conn = Connectivity::eight);

/// Renumbers any label assignment into first-encounter raster order.
[[nodiscard]] LabelMap canonicalize(const LabelMap& lm);

/// One entry per component, ordered by label.
[[nodiscard]] std::vector<ComponentStats> component_stats(const LabelMap& lm);

}  // namespace logcount
