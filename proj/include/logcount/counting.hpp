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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logcount/labeling.hpp"
#include "logcount/raster.hpp"

namespace logcount {

struct CountReport {
  std::string image_id;
  int raw_components = 0;
  int filtered_components = 0;
  std::int64_t min_area = 1;
  std::vector<BoundingBox> boxes;
  std::optional<int> observed;
  std::optional<double> count_accuracy;
};

struct FilteredComponents {
  LabelMap map;
  std::vector<ComponentStats> stats;
};

/// Drops components smaller than min_area and renumbers the survivors in their
/// original order.
[[nodiscard]] FilteredComponents filter_components(
    const LabelMap& lm, std::span<const ComponentStats> stats,
    std::int64_t min_area);

/// Label, measure, and filter. Boxes come from the surviving components.
[[nodiscard]] CountReport count(const BinaryMask& mask, Connectivity conn,
                                std::int64_t min_area,
                                std::string image_id = {});

enum class AccuracyMode {
  /// 100 (1 - |counted - observed| / observed), floored at 0.
  symmetric,
  /// 100 counted / observed, unclamped.
  ratio,
};

[[nodiscard]] AccuracyMode parse_accuracy_mode(std::string_view text);
[[nodiscard]] std::string_view to_string(AccuracyMode mode);

/// Throws std::invalid_argument when observed < 1.
[[nodiscard]] double count_accuracy(int counted, int observed,
                                    AccuracyMode mode = AccuracyMode::symmetric);

/// Sets `observed` and `count_accuracy` on the report.
void attach_observed(CountReport& report, int observed,
                     AccuracyMode mode = AccuracyMode::symmetric);

/// 0.05% of the image area, rounded down, never below 1.
[[nodiscard]] std::int64_t default_min_area(Resolution r);

// Overlay palette.
inline constexpr RgbImage::Pixel kBoxColor{0, 255, 0};
inline constexpr RgbImage::Pixel kCaptionColor{255, 0, 0};
inline constexpr RgbImage::Pixel kCaptionBackground{0, 0, 0};

/// Mask rendered white on black, one rectangle outline per box, and the
/// filtered count as a caption in the top-left corner.
[[nodiscard]] RgbImage annotate(const BinaryMask& mask,
                                const CountReport& report);

/// Pixel extent of the caption block for a given count.
[[nodiscard]] BoundingBox caption_extent(int count, Resolution image);

}  // namespace logcount
