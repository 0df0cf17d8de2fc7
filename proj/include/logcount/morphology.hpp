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

#include <string_view>
#include <vector>

#include "logcount/raster.hpp"

namespace logcount {

struct Offset {
  int dx = 0;
  int dy = 0;
  friend bool operator==(const Offset&, const Offset&) = default;
};

/// Binary kernel with odd extents. The anchor is always the center cell and
/// must be a member.
class StructuringElement {
 public:
  StructuringElement(int width, int height, std::vector<bool> pattern);

  /// size x size, all cells set.
  static StructuringElement box(int size);
  /// Center row and center column set.
  static StructuringElement cross(int size);

  [[nodiscard]] int width() const { return width_; }
  [[nodiscard]] int height() const { return height_; }
  [[nodiscard]] bool contains(int col, int row) const {
    return pattern_[static_cast<std::size_t>(row) * width_ + col];
  }
  /// Member cells as offsets from the anchor, in row-major cell order.
  [[nodiscard]] const std::vector<Offset>& offsets() const { return offsets_; }
  /// Point reflection through the anchor.
  [[nodiscard]] StructuringElement reflect() const;

  friend bool operator==(const StructuringElement& a,
                         const StructuringElement& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ &&
           a.pattern_ == b.pattern_;
  }

 private:
  int width_;
  int height_;
  std::vector<bool> pattern_;
  std::vector<Offset> offsets_;
};

enum class SeShape { box, cross };

[[nodiscard]] StructuringElement make_structuring_element(SeShape shape,
                                                          int size);
[[nodiscard]] SeShape parse_se_shape(std::string_view name);
[[nodiscard]] std::string_view to_string(SeShape shape);

// Row-parallel (OpenMP) kernels. Pixels outside the mask are background for
// both operators.

/// p is foreground iff p + o is foreground for every member offset o.
[[nodiscard]] BinaryMask erode(const BinaryMask& mask,
                               const StructuringElement& se);
/// p is foreground iff p - o is foreground for some member offset o.
[[nodiscard]] BinaryMask dilate(const BinaryMask& mask,
                                const StructuringElement& se);
/// erode applied `iterations` times; zero returns the input.
[[nodiscard]] BinaryMask erode_iterated(const BinaryMask& mask,
                                        const StructuringElement& se,
                                        int iterations);
[[nodiscard]] BinaryMask dilate_iterated(const BinaryMask& mask,
                                         const StructuringElement& se,
                                         int iterations);

/// Single-threaded per-pixel reference. Kept for tests and benchmarks.
namespace serial {
[[nodiscard]] BinaryMask erode(const BinaryMask& mask,
                               const StructuringElement& se);
[[nodiscard]] BinaryMask dilate(const BinaryMask& mask,
                                const StructuringElement& se);
}  // namespace serial

}  // namespace logcount
