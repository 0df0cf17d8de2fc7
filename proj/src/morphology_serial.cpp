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

namespace logcount::serial {

BinaryMask erode(const BinaryMask& mask, const StructuringElement& se) {
  BinaryMask out(mask.width(), mask.height(), false);
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      bool all = true;
      for (const Offset& o : se.offsets()) {
        if (!mask.at_or_background(x + o.dx, y + o.dy)) {
          all = false;
          break;
        }
      }
      out.set(x, y, all);
    }
  }
  return out;
}

BinaryMask dilate(const BinaryMask& mask, const StructuringElement& se) {
  BinaryMask out(mask.width(), mask.height(), false);
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      bool any = false;
      for (const Offset& o : se.offsets()) {
        if (mask.at_or_background(x - o.dx, y - o.dy)) {
          any = true;
          break;
        }
      }
      out.set(x, y, any);
    }
  }
  return out;
}

}  // namespace logcount::serial
