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

#include "logcount/raster.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>

namespace logcount {

namespace {

void check_extent(int width, int height) {
  if (width < 1 || height < 1 || width > kMaxDimension ||
      height > kMaxDimension) {
    throw std::invalid_argument("image dimensions must lie in [1, " +
                                std::to_string(kMaxDimension) + "], got " +
                                std::to_string(width) + "x" +
                                std::to_string(height));
  }
}

std::string lower_ext(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

}  // namespace

Resolution::Resolution(int w, int h) : width(w), height(h) {
  check_extent(w, h);
}

std::string to_string(const Resolution& r) {
  return std::to_string(r.width) + "x" + std::to_string(r.height);
}

DimensionMismatch::DimensionMismatch(const std::string& what_a, Resolution a,
                                     const std::string& what_b, Resolution b)
    : std::invalid_argument("dimension mismatch: " + what_a + " is " +
                            to_string(a) + " but " + what_b + " is " +
                            to_string(b)) {}

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : res_(width, height),
      data_(static_cast<std::size_t>(res_.area()), fill) {}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> data)
    : res_(width, height), data_(std::move(data)) {
  if (data_.size() != static_cast<std::size_t>(res_.area())) {
    throw std::invalid_argument("gray image data length " +
                                std::to_string(data_.size()) +
                                " does not match " + to_string(res_));
  }
}

BinaryMask::BinaryMask(int width, int height, bool fill)
    : res_(width, height),
      data_(static_cast<std::size_t>(res_.area()), fill ? 1 : 0) {}

BinaryMask::BinaryMask(int width, int height, std::vector<std::uint8_t> flags)
    : res_(width, height), data_(std::move(flags)) {
  if (data_.size() != static_cast<std::size_t>(res_.area())) {
    throw std::invalid_argument("mask data length " +
                                std::to_string(data_.size()) +
                                " does not match " + to_string(res_));
  }
  for (auto& v : data_) v = v != 0 ? 1 : 0;
}

BinaryMask BinaryMask::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::invalid_argument("from_rows: no rows");
  const int w = static_cast<int>(rows.front().size());
  BinaryMask m(w, static_cast<int>(rows.size()));
  for (int y = 0; y < m.height(); ++y) {
    if (static_cast<int>(rows[y].size()) != w) {
      throw std::invalid_argument("from_rows: ragged row " + std::to_string(y));
    }
    for (int x = 0; x < w; ++x) m.set(x, y, rows[y][x] == '#');
  }
  return m;
}

std::int64_t BinaryMask::foreground_count() const {
  std::int64_t n = 0;
  for (auto v : data_) n += v;
  return n;
}

BinaryMask BinaryMask::complement() const {
  BinaryMask out = *this;
  for (auto& v : out.data_) v ^= 1;
  return out;
}

bool BinaryMask::subset_of(const BinaryMask& other) const {
  if (res_ != other.res_) {
    throw DimensionMismatch("subset", res_, "superset", other.res_);
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (data_[i] && !other.data_[i]) return false;
  }
  return true;
}

RgbImage::RgbImage(int width, int height)
    : res_(width, height), data_(static_cast<std::size_t>(res_.area())) {}

RgbImage::RgbImage(const GrayImage& gray)
    : RgbImage(gray.width(), gray.height()) {
  auto src = gray.data();
  for (std::size_t i = 0; i < src.size(); ++i) {
    data_[i] = Pixel{src[i], src[i], src[i]};
  }
}

std::uint8_t luminance(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  // 0.299 R + 0.587 G + 0.114 B in exact integer arithmetic, half rounds up.
  const unsigned sum = 299u * r + 587u * g + 114u * b;
  return static_cast<std::uint8_t>((sum + 500u) / 1000u);
}

BinaryMask threshold(const GrayImage& img, int cutoff) {
  BinaryMask out(img.width(), img.height());
  auto src = img.data();
  auto dst = out.mutable_data();
  const auto n = static_cast<std::int64_t>(src.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) dst[i] = src[i] > cutoff ? 1 : 0;
  return out;
}

GrayImage to_gray(const BinaryMask& mask) {
  std::vector<std::uint8_t> data(mask.size());
  auto src = mask.data();
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = src[i] ? 255 : 0;
  return GrayImage(mask.width(), mask.height(), std::move(data));
}

GrayImage decode_image(std::span<const std::uint8_t> bytes) {
  if (detail::has_png_signature(bytes)) return detail::decode_png(bytes);
  if (bytes.size() >= 2 && bytes[0] == 'P' &&
      (bytes[1] == '2' || bytes[1] == '5')) {
    return detail::decode_pgm(bytes);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] >= '1' &&
      bytes[1] <= '7') {
    throw UnsupportedFormatError(std::string("unsupported netpbm variant P") +
                                 static_cast<char>(bytes[1]) +
                                 "; only P2 and P5 graymaps are accepted");
  }
  throw UnsupportedFormatError(
      "unrecognized image format: expected a PNG signature or a P2/P5 header");
}

GrayImage read_image(const std::filesystem::path& path) {
  const auto bytes = read_bytes(path);
  try {
    return decode_image(bytes);
  } catch (const DecodeError& e) {
    throw DecodeError(path.string() + ": " + e.what());
  } catch (const UnsupportedFormatError& e) {
    throw UnsupportedFormatError(path.string() + ": " + e.what());
  }
}

std::vector<std::uint8_t> encode_gray(const GrayImage& img,
                                      ImageFormat format) {
  return format == ImageFormat::png ? detail::encode_png_gray(img)
                                    : detail::encode_pgm(img);
}

std::vector<std::uint8_t> encode_mask(const BinaryMask& mask,
                                      ImageFormat format) {
  return encode_gray(to_gray(mask), format);
}

ImageFormat format_for_path(const std::filesystem::path& path) {
  return lower_ext(path) == ".pgm" ? ImageFormat::pgm : ImageFormat::png;
}

void write_bytes(const std::filesystem::path& path,
                 std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace logcount
