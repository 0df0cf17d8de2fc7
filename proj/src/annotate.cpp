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

#include <algorithm>
#include <array>
#include <string>

#include "logcount/counting.hpp"

namespace logcount {

namespace {

// 3x5 bitmap digits, one row per entry, bit 2 is the leftmost column.
constexpr std::array<std::array<std::uint8_t, 5>, 10> kDigits = {{
    {7, 5, 5, 5, 7},  // 0
    {2, 6, 2, 2, 7},  // 1
    {7, 1, 7, 4, 7},  // 2
    {7, 1, 7, 1, 7},  // 3
    {5, 5, 7, 1, 1},  // 4
    {7, 4, 7, 1, 7},  // 5
    {7, 4, 7, 5, 7},  // 6
    {7, 1, 1, 1, 1},  // 7
    {7, 5, 7, 5, 7},  // 8
    {7, 5, 7, 1, 7},  // 9
}};

int caption_scale(Resolution image) { return image.height >= 64 ? 2 : 1; }

void fill_rect(RgbImage& img, int x0, int y0, int w, int h,
               RgbImage::Pixel color) {
  const int x1 = std::min(img.width(), x0 + w);
  const int y1 = std::min(img.height(), y0 + h);
  for (int y = std::max(0, y0); y < y1; ++y) {
    for (int x = std::max(0, x0); x < x1; ++x) img.set(x, y, color);
  }
}

void outline(RgbImage& img, const BoundingBox& b, RgbImage::Pixel color) {
  const int right = b.x + b.width - 1;
  const int bottom = b.y + b.height - 1;
  for (int x = b.x; x <= right; ++x) {
    img.set(x, b.y, color);
    img.set(x, bottom, color);
  }
  for (int y = b.y; y <= bottom; ++y) {
    img.set(b.x, y, color);
    img.set(right, y, color);
  }
}

}  // namespace

BoundingBox caption_extent(int count, Resolution image) {
  const int s = caption_scale(image);
  const int digits = static_cast<int>(std::to_string(count).size());
  const int w = s + digits * 3 * s + (digits - 1) * s + s;
  const int h = s + 5 * s + s;
  return {0, 0, std::min(w, image.width), std::min(h, image.height)};
}

RgbImage annotate(const BinaryMask& mask, const CountReport& report) {
  RgbImage img(to_gray(mask));
  for (const auto& b : report.boxes) {
    if (b.width < 1 || b.height < 1 || b.x < 0 || b.y < 0 ||
        b.x + b.width > mask.width() || b.y + b.height > mask.height()) {
      throw std::invalid_argument("annotate: box outside mask bounds");
    }
    outline(img, b, kBoxColor);
  }

  const Resolution res = mask.resolution();
  const int s = caption_scale(res);
  const BoundingBox cap = caption_extent(report.filtered_components, res);
  fill_rect(img, cap.x, cap.y, cap.width, cap.height, kCaptionBackground);
  const std::string text = std::to_string(report.filtered_components);
  int pen_x = s;
  for (char ch : text) {
    const auto& glyph = kDigits[static_cast<std::size_t>(ch - '0')];
    for (int row = 0; row < 5; ++row) {
      for (int col = 0; col < 3; ++col) {
        if (glyph[row] & (4 >> col)) {
          fill_rect(img, pen_x + col * s, s + row * s, s, s, kCaptionColor);
        }
      }
    }
    pen_x += 4 * s;
  }
  return img;
}

}  // namespace logcount
