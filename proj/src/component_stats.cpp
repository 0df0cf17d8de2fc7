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
#include <string>

#include "logcount/labeling.hpp"

namespace logcount {

std::vector<ComponentStats> component_stats(const LabelMap& lm) {
  const auto k = static_cast<std::size_t>(lm.component_count());
  struct Accum {
    std::int64_t area = 0;
    int min_x = 0, min_y = 0, max_x = -1, max_y = -1;
    std::int64_t sum_x = 0, sum_y = 0;
  };
  std::vector<Accum> acc(k);

  for (int y = 0; y < lm.height(); ++y) {
    for (int x = 0; x < lm.width(); ++x) {
      const Label l = lm.at(x, y);
      if (l == 0) continue;
      if (l < 0 || static_cast<std::size_t>(l) > k) {
        throw std::invalid_argument("label " + std::to_string(l) +
                                    " outside 1.." + std::to_string(k));
      }
      Accum& a = acc[static_cast<std::size_t>(l) - 1];
      if (a.area == 0) {
        a.min_x = a.max_x = x;
        a.min_y = a.max_y = y;
      } else {
        a.min_x = std::min(a.min_x, x);
        a.max_x = std::max(a.max_x, x);
        a.min_y = std::min(a.min_y, y);
        a.max_y = std::max(a.max_y, y);
      }
      ++a.area;
      a.sum_x += x;
      a.sum_y += y;
    }
  }

  std::vector<ComponentStats> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Accum& a = acc[i];
    if (a.area == 0) {
      throw std::invalid_argument("label " + std::to_string(i + 1) +
                                  " has no pixels");
    }
    ComponentStats s;
    s.label = static_cast<Label>(i + 1);
    s.area = a.area;
    s.bbox = {a.min_x, a.min_y, a.max_x - a.min_x + 1, a.max_y - a.min_y + 1};
    s.centroid_x = static_cast<double>(a.sum_x) / static_cast<double>(a.area);
    s.centroid_y = static_cast<double>(a.sum_y) / static_cast<double>(a.area);
    out.push_back(s);
  }
  return out;
}

}  // namespace logcount
