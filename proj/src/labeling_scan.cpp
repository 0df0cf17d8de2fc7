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

#include <numeric>
#include <string>
#include <utility>

#include "logcount/labeling.hpp"

namespace logcount {

Connectivity parse_connectivity(std::string_view text) {
  if (text == "4" || text == "four") return Connectivity::four;
  if (text == "8" || text == "eight") return Connectivity::eight;
  throw std::invalid_argument("connectivity must be 4 or 8, got '" +
                              std::string(text) + "'");
}

std::string_view to_string(Connectivity c) {
  return c == Connectivity::four ? "4" : "8";
}

LabelMap::LabelMap(int width, int height, std::vector<Label> labels,
                   int component_count)
    : width_(width),
      height_(height),
      labels_(std::move(labels)),
      component_count_(component_count) {
  if (labels_.size() != static_cast<std::size_t>(width) * height) {
    throw std::invalid_argument("label map size mismatch");
  }
}

namespace {

// Equivalence resolution: union by size with path compression (halving).
class EquivalenceResolver {
 public:
  explicit EquivalenceResolver(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), Label{0});
  }

  Label find(Label a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void unite(Label a, Label b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<Label> parent_;
  std::vector<std::int64_t> size_;
};

}  // namespace

LabelMap label_scan(const BinaryMask& mask, Connectivity conn) {
  const int w = mask.width();
  const int h = mask.height();
  std::vector<Label> labels(mask.size(), 0);
  std::vector<std::pair<Label, Label>> equivalences;

  Label next = 1;

  auto label_at = [&](int x, int y) -> Label {
    if (x < 0 || y < 0 || x >= w) return 0;
    return labels[static_cast<std::size_t>(y) * w + x];
  };

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask.at(x, y)) continue;

      // Neighbor order: NW, W, N, NE for 8-connectivity; W, N for 4.
      Label neighbors[4];
      int count = 0;
      if (conn == Connectivity::eight) {
        neighbors[count++] = label_at(x - 1, y - 1);
        neighbors[count++] = label_at(x - 1, y);
        neighbors[count++] = label_at(x, y - 1);
        neighbors[count++] = label_at(x + 1, y - 1);
      } else {
        neighbors[count++] = label_at(x - 1, y);
        neighbors[count++] = label_at(x, y - 1);
      }

      Label chosen = 0;
      for (int i = 0; i < count; ++i) {
        if (neighbors[i] == 0) continue;
        if (chosen == 0) {
          chosen = neighbors[i];
        } else if (neighbors[i] != chosen) {
          equivalences.emplace_back(chosen, neighbors[i]);
        }
      }
      if (chosen == 0) chosen = next++;
      labels[static_cast<std::size_t>(y) * w + x] = chosen;
    }
  }

  EquivalenceResolver resolver(static_cast<std::size_t>(next));
  for (const auto& [a, b] : equivalences) resolver.unite(a, b);

  // Dense renumbering in first-encounter raster order of the resolved roots.
  std::vector<Label> dense(static_cast<std::size_t>(next), 0);
  Label k = 0;
  for (auto& l : labels) {
    if (l == 0) continue;
    const Label root = resolver.find(l);
    if (dense[root] == 0) dense[root] = ++k;
    l = dense[root];
  }
  return LabelMap(w, h, std::move(labels), k);
}

LabelMap canonicalize(const LabelMap& lm) {
  std::vector<Label> out(lm.labels().begin(), lm.labels().end());
  Label max_label = 0;
  for (auto l : out) max_label = std::max(max_label, l);
  std::vector<Label> dense(static_cast<std::size_t>(max_label) + 1, 0);
  Label k = 0;
  for (auto& l : out) {
    if (l == 0) continue;
    if (dense[l] == 0) dense[l] = ++k;
    l = dense[l];
  }
  return LabelMap(lm.width(), lm.height(), std::move(out), k);
}

}  // namespace logcount
