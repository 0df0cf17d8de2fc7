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

#include "logcount/morphology.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace logcount {

StructuringElement::StructuringElement(int width, int height,
                                       std::vector<bool> pattern)
    : width_(width), height_(height), pattern_(std::move(pattern)) {
  if (width < 1 || height < 1 || width % 2 == 0 || height % 2 == 0) {
    throw std::invalid_argument("structuring element extents must be odd and "
                                "positive, got " +
                                std::to_string(width) + "x" +
                                std::to_string(height));
  }
  if (pattern_.size() != static_cast<std::size_t>(width) * height) {
    throw std::invalid_argument("structuring element pattern length mismatch");
  }
  if (!contains(width / 2, height / 2)) {
    throw std::invalid_argument("structuring element anchor must be set");
  }
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      if (contains(c, r)) offsets_.push_back({c - width / 2, r - height / 2});
    }
  }
}

StructuringElement StructuringElement::box(int size) {
  return StructuringElement(
      size, size,
      std::vector<bool>(static_cast<std::size_t>(std::max(size, 0)) *
                            std::max(size, 0),
                        true));
}

StructuringElement StructuringElement::cross(int size) {
  std::vector<bool> p(static_cast<std::size_t>(std::max(size, 0)) *
                      std::max(size, 0));
  for (int i = 0; i < size; ++i) {
    p[static_cast<std::size_t>(size / 2) * size + i] = true;
    p[static_cast<std::size_t>(i) * size + size / 2] = true;
  }
  return StructuringElement(size, size, std::move(p));
}

StructuringElement StructuringElement::reflect() const {
  std::vector<bool> p(pattern_.size());
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) {
      p[static_cast<std::size_t>(height_ - 1 - r) * width_ + (width_ - 1 - c)] =
          contains(c, r);
    }
  }
  return StructuringElement(width_, height_, std::move(p));
}

StructuringElement make_structuring_element(SeShape shape, int size) {
  return shape == SeShape::box ? StructuringElement::box(size)
                               : StructuringElement::cross(size);
}

SeShape parse_se_shape(std::string_view name) {
  if (name == "box") return SeShape::box;
  if (name == "cross") return SeShape::cross;
  throw std::invalid_argument("unknown structuring element shape '" +
                              std::string(name) + "' (expected box|cross)");
}

std::string_view to_string(SeShape shape) {
  return shape == SeShape::box ? "box" : "cross";
}

namespace {

// Each output row is the AND (erosion) or OR (dilation) of shifted input rows,
// one per member offset. Rows are independent.
template <bool Erode>
BinaryMask row_kernel(const BinaryMask& mask, const StructuringElement& se) {
  const int w = mask.width();
  const int h = mask.height();
  BinaryMask out(w, h, false);
  auto src = mask.data();
  auto dst = out.mutable_data();
  const auto& offsets = se.offsets();

#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    std::uint8_t* row_out = dst.data() + static_cast<std::size_t>(y) * w;
    std::fill(row_out, row_out + w, Erode ? 1 : 0);
    for (const Offset& o : offsets) {
      // Erosion samples p + o, dilation samples p - o.
      const int dx = Erode ? o.dx : -o.dx;
      const int sy = y + (Erode ? o.dy : -o.dy);
      if (sy < 0 || sy >= h) {
        if constexpr (Erode) {
          std::fill(row_out, row_out + w, 0);
          break;
        } else {
          continue;
        }
      }
      const std::uint8_t* row_in = src.data() + static_cast<std::size_t>(sy) * w;
      const int x0 = std::max(0, -dx);
      const int x1 = std::min(w, w - dx);
      if constexpr (Erode) {
        std::fill(row_out, row_out + std::min(x0, w), 0);
        if (x1 < w) std::fill(row_out + std::max(x1, 0), row_out + w, 0);
        for (int x = x0; x < x1; ++x) row_out[x] &= row_in[x + dx];
      } else {
        for (int x = x0; x < x1; ++x) row_out[x] |= row_in[x + dx];
      }
    }
  }
  return out;
}

template <typename Op>
BinaryMask iterate(const BinaryMask& mask, int iterations, Op op) {
  if (iterations < 0) {
    throw std::invalid_argument("iteration count must be >= 0");
  }
  BinaryMask current = mask;
  for (int i = 0; i < iterations; ++i) current = op(current);
  return current;
}

}  // namespace

BinaryMask erode(const BinaryMask& mask, const StructuringElement& se) {
  return row_kernel<true>(mask, se);
}

BinaryMask dilate(const BinaryMask& mask, const StructuringElement& se) {
  return row_kernel<false>(mask, se);
}

BinaryMask erode_iterated(const BinaryMask& mask, const StructuringElement& se,
                          int iterations) {
  return iterate(mask, iterations,
                 [&](const BinaryMask& m) { return erode(m, se); });
}

BinaryMask dilate_iterated(const BinaryMask& mask,
                           const StructuringElement& se, int iterations) {
  return iterate(mask, iterations,
                 [&](const BinaryMask& m) { return dilate(m, se); });
}

}  // namespace logcount
