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

// Raster substrate: grayscale and binary images, PNG/PGM codecs, binarization.

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace logcount {

/// Largest accepted extent along either axis.
inline constexpr int kMaxDimension = 65535;

struct Resolution {
  int width = 0;
  int height = 0;

  Resolution() = default;
  Resolution(int w, int h);

  [[nodiscard]] std::int64_t area() const {
    return static_cast<std::int64_t>(width) * height;
  }
  friend bool operator==(const Resolution&, const Resolution&) = default;
};

std::string to_string(const Resolution& r);

/// Thrown when a file claims a supported format but its contents are malformed.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when the bytes are not PNG, P2 or P5.
class UnsupportedFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when two images that must share a shape do not.
class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(const std::string& what_a, Resolution a,
                    const std::string& what_b, Resolution b);
};

class GrayImage {
 public:
  GrayImage(int width, int height, std::uint8_t fill = 0);
  GrayImage(int width, int height, std::vector<std::uint8_t> data);

  [[nodiscard]] int width() const { return res_.width; }
  [[nodiscard]] int height() const { return res_.height; }
  [[nodiscard]] Resolution resolution() const { return res_; }

  [[nodiscard]] std::uint8_t at(int x, int y) const {
    return data_[static_cast<std::size_t>(y) * res_.width + x];
  }
  void set(int x, int y, std::uint8_t v) {
    data_[static_cast<std::size_t>(y) * res_.width + x] = v;
  }
  [[nodiscard]] std::span<const std::uint8_t> data() const { return data_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  Resolution res_;
  std::vector<std::uint8_t> data_;
};

/// Foreground/background grid. Storage is one byte per pixel holding 0 or 1.
class BinaryMask {
 public:
  BinaryMask(int width, int height, bool fill = false);
  explicit BinaryMask(Resolution r, bool fill = false)
      : BinaryMask(r.width, r.height, fill) {}
  /// Any nonzero byte in `flags` is foreground.
  BinaryMask(int width, int height, std::vector<std::uint8_t> flags);
  /// Builds a mask from rows of '#' (foreground) and '.' (background).
  static BinaryMask from_rows(const std::vector<std::string>& rows);

  [[nodiscard]] int width() const { return res_.width; }
  [[nodiscard]] int height() const { return res_.height; }
  [[nodiscard]] Resolution resolution() const { return res_; }
  [[nodiscard]] std::size_t size() const { return data_.size(); }

  [[nodiscard]] bool at(int x, int y) const {
    return data_[static_cast<std::size_t>(y) * res_.width + x] != 0;
  }
  /// Out-of-bounds reads are background.
  [[nodiscard]] bool at_or_background(int x, int y) const {
    return x >= 0 && y >= 0 && x < res_.width && y < res_.height && at(x, y);
  }
  void set(int x, int y, bool v) {
    data_[static_cast<std::size_t>(y) * res_.width + x] = v ? 1 : 0;
  }

  [[nodiscard]] std::span<const std::uint8_t> data() const { return data_; }
  [[nodiscard]] std::span<std::uint8_t> mutable_data() { return data_; }

  [[nodiscard]] std::int64_t foreground_count() const;
  [[nodiscard]] BinaryMask complement() const;
  /// True when every foreground pixel of *this is foreground in `other`.
  [[nodiscard]] bool subset_of(const BinaryMask& other) const;

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

 private:
  Resolution res_;
  std::vector<std::uint8_t> data_;
};

/// Packed RGB raster used only for rendered outputs.
class RgbImage {
 public:
  struct Pixel {
    std::uint8_t r = 0, g = 0, b = 0;
    friend bool operator==(const Pixel&, const Pixel&) = default;
  };

  RgbImage(int width, int height);
  explicit RgbImage(const GrayImage& gray);

  [[nodiscard]] int width() const { return res_.width; }
  [[nodiscard]] int height() const { return res_.height; }
  [[nodiscard]] Pixel at(int x, int y) const {
    return data_[static_cast<std::size_t>(y) * res_.width + x];
  }
  void set(int x, int y, Pixel p) {
    data_[static_cast<std::size_t>(y) * res_.width + x] = p;
  }
  [[nodiscard]] std::span<const Pixel> data() const { return data_; }

 private:
  Resolution res_;
  std::vector<Pixel> data_;
};

enum class ImageFormat { png, pgm };

/// Rec. 601 luma, rounded to nearest.
[[nodiscard]] std::uint8_t luminance(std::uint8_t r, std::uint8_t g,
                                     std::uint8_t b);

/// Decodes PNG (gray, gray+alpha, RGB, RGBA, palette) or PGM (P2/P5).
[[nodiscard]] GrayImage decode_image(std::span<const std::uint8_t> bytes);
[[nodiscard]] GrayImage read_image(const std::filesystem::path& path);

/// Foreground iff intensity > cutoff.
[[nodiscard]] BinaryMask threshold(const GrayImage& img, int cutoff = 127);
/// Foreground -> 255, background -> 0.
[[nodiscard]] GrayImage to_gray(const BinaryMask& mask);

[[nodiscard]] std::vector<std::uint8_t> encode_gray(const GrayImage& img,
                                                    ImageFormat format);
[[nodiscard]] std::vector<std::uint8_t> encode_mask(const BinaryMask& mask,
                                                    ImageFormat format);
[[nodiscard]] std::vector<std::uint8_t> encode_rgb_png(const RgbImage& img);

/// Picks the format from the extension: ".pgm" -> PGM, anything else PNG.
[[nodiscard]] ImageFormat format_for_path(const std::filesystem::path& path);

void write_bytes(const std::filesystem::path& path,
                 std::span<const std::uint8_t> bytes);
[[nodiscard]] std::vector<std::uint8_t> read_bytes(
    const std::filesystem::path& path);

namespace detail {
[[nodiscard]] GrayImage decode_pgm(std::span<const std::uint8_t> bytes);
[[nodiscard]] std::vector<std::uint8_t> encode_pgm(const GrayImage& img);
[[nodiscard]] GrayImage decode_png(std::span<const std::uint8_t> bytes);
[[nodiscard]] std::vector<std::uint8_t> encode_png_gray(const GrayImage& img);
[[nodiscard]] bool has_png_signature(std::span<const std::uint8_t> bytes);
}  // namespace detail

}  // namespace logcount
