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

#include <charconv>
#include <string>

#include "logcount/raster.hpp"

namespace logcount::detail {

namespace {

// Tokenizer over a netpbm header. Comments run from '#' to end of line.
class PgmReader {
 public:
  explicit PgmReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  unsigned read_uint(const char* element) {
    skip_whitespace_and_comments();
    const std::size_t start = pos_;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      ++pos_;
    }
    if (start == pos_) {
      throw DecodeError(std::string("pgm: missing or non-numeric ") + element +
                        " at byte " + std::to_string(start));
    }
    unsigned value = 0;
    const auto* first = reinterpret_cast<const char*>(bytes_.data() + start);
    const auto* last = reinterpret_cast<const char*>(bytes_.data() + pos_);
    if (auto [p, ec] = std::from_chars(first, last, value); ec != std::errc{}) {
      throw DecodeError(std::string("pgm: ") + element + " out of range");
    }
    return value;
  }

  // Exactly one whitespace byte separates maxval from a binary raster.
  void consume_single_whitespace() {
    if (pos_ >= bytes_.size() || !is_space(bytes_[pos_])) {
      throw DecodeError("pgm: expected whitespace after maxval");
    }
    ++pos_;
  }

  [[nodiscard]] std::size_t pos() const { return pos_; }
  [[nodiscard]] std::size_t remaining() const { return bytes_.size() - pos_; }
  [[nodiscard]] std::uint8_t byte_at(std::size_t i) const { return bytes_[i]; }

 private:
  static bool is_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  }

  void skip_whitespace_and_comments() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 2;  // past the magic number
};

std::uint8_t rescale(unsigned v, unsigned maxval) {
  if (maxval == 255) return static_cast<std::uint8_t>(v);
  return static_cast<std::uint8_t>((v * 255u + maxval / 2) / maxval);
}

}  // namespace

GrayImage decode_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw DecodeError("pgm: bad magic number");
  }
  const bool binary = bytes[1] == '5';
  PgmReader reader(bytes);
  const unsigned width = reader.read_uint("width");
  const unsigned height = reader.read_uint("height");
  const unsigned maxval = reader.read_uint("maxval");
  if (width < 1 || width > static_cast<unsigned>(kMaxDimension)) {
    throw DecodeError("pgm: width " + std::to_string(width) + " out of range");
  }
  if (height < 1 || height > static_cast<unsigned>(kMaxDimension)) {
    throw DecodeError("pgm: height " + std::to_string(height) + " out of range");
  }
  if (maxval < 1 || maxval > 65535) {
    throw DecodeError("pgm: maxval " + std::to_string(maxval) + " out of range");
  }

  const std::size_t n = static_cast<std::size_t>(width) * height;
  std::vector<std::uint8_t> data(n);
  if (binary) {
    reader.consume_single_whitespace();
    const std::size_t sample_bytes = maxval > 255 ? 2 : 1;
    if (reader.remaining() < n * sample_bytes) {
      throw DecodeError("pgm: truncated raster, expected " +
                        std::to_string(n * sample_bytes) + " bytes, found " +
                        std::to_string(reader.remaining()));
    }
    const std::size_t base = reader.pos();
    for (std::size_t i = 0; i < n; ++i) {
      unsigned v = reader.byte_at(base + i * sample_bytes);
      if (sample_bytes == 2) v = (v << 8) | reader.byte_at(base + i * 2 + 1);
      if (v > maxval) {
        throw DecodeError("pgm: sample " + std::to_string(i) + " exceeds maxval");
      }
      data[i] = rescale(v, maxval);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned v = reader.read_uint("sample");
      if (v > maxval) {
        throw DecodeError("pgm: sample " + std::to_string(i) + " exceeds maxval");
      }
      data[i] = rescale(v, maxval);
    }
  }
  return GrayImage(static_cast<int>(width), static_cast<int>(height),
                   std::move(data));
}

std::vector<std::uint8_t> encode_pgm(const GrayImage& img) {
  const std::string header = "P5\n" + std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  auto px = img.data();
  out.insert(out.end(), px.begin(), px.end());
  return out;
}

}  // namespace logcount::detail
