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

#include "logcount/labeling.hpp"

namespace logcount {

namespace {

// Disjoint-set forest keyed by provisional label. Roots are always the
// smallest label of their set, which keeps the final renumbering stable.
class LabelForest {
 public:
  explicit LabelForest(std::size_t capacity) {
    parent_.reserve(capacity);
    parent_.push_back(0);
  }

  Label make_set() {
    const auto id = static_cast<Label>(parent_.size());
    parent_.push_back(id);
    return id;
  }

  Label find(Label a) {
    Label root = a;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[a] != root) {
      const Label up = parent_[a];
      parent_[a] = root;
      a = up;
    }
    return root;
  }

  Label unite(Label a, Label b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return a;
  }

  [[nodiscard]] std::size_t size() const { return parent_.size(); }

 private:
  std::vector<Label> parent_;
};

}  // namespace

LabelMap label_union_find(const BinaryMask& mask, Connectivity conn) {
  const int w = mask.width();
  const int h = mask.height();
  std::vector<Label> labels(mask.size(), 0);
  // A checkerboard opens ceil(wh/2) provisional labels; nothing opens more.
  LabelForest forest((mask.size() + 1) / 2 + 1);

  auto at = [&](int x, int y) -> Label {
    if (x < 0 || y < 0 || x >= w) return 0;
    return labels[static_cast<std::size_t>(y) * w + x];
  };

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask.at(x, y)) continue;
      Label& out = labels[static_cast<std::size_t>(y) * w + x];
      const Label west = at(x - 1, y);
      const Label north = at(x, y - 1);

      if (conn == Connectivity::four) {
        if (west && north) {
          out = west;
          if (west != north) forest.unite(west, north);
        } else if (west || north) {
          out = west ? west : north;
        } else {
          out = forest.make_set();
        }
        continue;
      }

      // 8-connectivity decision tree. When north is set it is already joined
      // to west, north-west and north-east through earlier pixels.
      if (north) {
        out = north;
        continue;
      }
      const Label north_east = at(x + 1, y - 1);
      const Label north_west = at(x - 1, y - 1);
      const Label left = west ? west : north_west;
      if (north_east) {
        out = north_east;
        if (left && left != north_east) forest.unite(left, north_east);
      } else if (left) {
        out = left;
      } else {
        out = forest.make_set();
      }
    }
  }

  std::vector<Label> dense(forest.size(), 0);
  Label k = 0;
  for (auto& l : labels) {
    if (l == 0) continue;
    const Label root = forest.find(l);
    if (dense[root] == 0) dense[root] = ++k;
    l = dense[root];
  }
  return LabelMap(w, h, std::move(labels), k);
}

}  // namespace logcount
