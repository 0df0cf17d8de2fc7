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

#include <png.h>

#include <cstring>
#include <memory>

#include "logcount/raster.hpp"

// libpng's simplified API: no setjmp, errors surface through png_image.message.

namespace logcount {
namespace detail {

namespace {

struct ImageGuard {
  png_image* image;
  ~ImageGuard() { png_image_free(image); }
};

std::vector<std::uint8_t> write_png(const png_image& header, const void* pixels) {
  png_image image = header;
  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&image, nullptr, &size, 0, pixels, 0,
                                 nullptr)) {
    throw std::runtime_error(std::string("png encode: ") + image.message);
  }
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&image, out.data(), &size, 0, pixels, 0,
                                 nullptr)) {
    throw std::runtime_error(std::string("png encode: ") + image.message);
  }
  out.resize(size);
  return out;
}

}  // namespace

bool has_png_signature(std::span<const std::uint8_t> bytes) {
  return bytes.size() >= 8 && png_sig_cmp(bytes.data(), 0, 8) == 0;
}

GrayImage decode_png(std::span<const std::uint8_t> bytes) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  ImageGuard guard{&image};

  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw DecodeError(std::string("png header: ") + image.message);
  }
  if (image.width < 1 || image.height < 1 ||
      image.width > static_cast<png_uint_32>(kMaxDimension) ||
      image.height > static_cast<png_uint_32>(kMaxDimension)) {
    throw DecodeError("png header: dimensions " + std::to_string(image.width) +
                      "x" + std::to_string(image.height) + " out of range");
  }
  const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0 ||
                     (image.format & PNG_FORMAT_FLAG_COLORMAP) != 0;
  // Alpha, if any, composites onto black.
  png_color black{0, 0, 0};
  const std::size_t n = static_cast<std::size_t>(image.width) * image.height;
  const int w = static_cast<int>(image.width);
  const int h = static_cast<int>(image.height);

  if (!color) {
    image.format = PNG_FORMAT_GRAY;
    std::vector<std::uint8_t> gray(n);
    if (!png_image_finish_read(&image, &black, gray.data(), 0, nullptr)) {
      throw DecodeError(std::string("png data: ") + image.message);
    }
    return GrayImage(w, h, std::move(gray));
  }

  image.format = PNG_FORMAT_RGB;
  std::vector<std::uint8_t> rgb(n * 3);
  if (!png_image_finish_read(&image, &black, rgb.data(), 0, nullptr)) {
    throw DecodeError(std::string("png data: ") + image.message);
  }
  std::vector<std::uint8_t> gray(n);
  for (std::size_t i = 0; i < n; ++i) {
    gray[i] = luminance(rgb[3 * i], rgb[3 * i + 1], rgb[3 * i + 2]);
  }
  return GrayImage(w, h, std::move(gray));
}

std::vector<std::uint8_t> encode_png_gray(const GrayImage& img) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width());
  image.height = static_cast<png_uint_32>(img.height());
  image.format = PNG_FORMAT_GRAY;
  return write_png(image, img.data().data());
}

}  // namespace detail

std::vector<std::uint8_t> encode_rgb_png(const RgbImage& img) {
  static_assert(sizeof(RgbImage::Pixel) == 3);
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width());
  image.height = static_cast<png_uint_32>(img.height());
  image.format = PNG_FORMAT_RGB;
  return detail::write_png(image, img.data().data());
}

}  // namespace logcount
