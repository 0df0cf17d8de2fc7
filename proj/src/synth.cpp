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

#include "logcount/synth.hpp"

#include <algorithm>
#include <queue>

#include "logcount/random.hpp"

namespace logcount {

void PileSpec::validate() const {
  auto fail = [](const std::string& msg) {
    throw std::invalid_argument("pile spec: " + msg);
  };
  if (n_logs < 0) fail("n_logs must be >= 0");
  if (radius_min < 0) fail("radius_min must be >= 0");
  if (radius_min > radius_max) fail("radius_min exceeds radius_max");
  if (noise_speckles < 0) fail("noise_speckles must be >= 0");
  if (speckle_area_min < 1) fail("speckle areas must be >= 1");
  if (speckle_area_min > speckle_area_max) {
    fail("speckle_area_min exceeds speckle_area_max");
  }
  if (resolution.width < 1 || resolution.height < 1) fail("empty resolution");
}

void draw_disk(BinaryMask& mask, const Disk& d) {
  const std::int64_t r2 = static_cast<std::int64_t>(d.r) * d.r;
  for (int y = std::max(0, d.cy - d.r); y <= std::min(mask.height() - 1, d.cy + d.r); ++y) {
    for (int x = std::max(0, d.cx - d.r); x <= std::min(mask.width() - 1, d.cx + d.r); ++x) {
      const std::int64_t dx = x - d.cx;
      const std::int64_t dy = y - d.cy;
      if (dx * dx + dy * dy <= r2) mask.set(x, y, true);
    }
  }
}

namespace {

std::int64_t squared_distance(const Disk& a, const Disk& b) {
  const std::int64_t dx = a.cx - b.cx;
  const std::int64_t dy = a.cy - b.cy;
  return dx * dx + dy * dy;
}

bool inside(const Disk& d, int x, int y) {
  const std::int64_t dx = x - d.cx;
  const std::int64_t dy = y - d.cy;
  return dx * dx + dy * dy <= static_cast<std::int64_t>(d.r) * d.r;
}

// True when some pixel of `a` lies in `b` or is 4-adjacent to a pixel of `b`.
bool pixels_touch(const Disk& a, const Disk& b) {
  for (int y = a.cy - a.r; y <= a.cy + a.r; ++y) {
    for (int x = a.cx - a.r; x <= a.cx + a.r; ++x) {
      if (!inside(a, x, y)) continue;
      if (inside(b, x, y) || inside(b, x - 1, y) || inside(b, x + 1, y) ||
          inside(b, x, y - 1) || inside(b, x, y + 1)) {
        return true;
      }
    }
  }
  return false;
}

bool fits(const Disk& d, Resolution res) {
  return d.cx - d.r >= 0 && d.cy - d.r >= 0 && d.cx + d.r < res.width &&
         d.cy + d.r < res.height;
}

// Separation from every placed disk: center distance > r1 + r2 + gap for a
// non-negative gap; >= r1 + r2 + gap (bounded overlap) for a negative one.
bool separated(const Disk& d, const std::vector<Disk>& placed, int gap) {
  for (const auto& other : placed) {
    const std::int64_t reach = static_cast<std::int64_t>(d.r) + other.r + gap;
    const std::int64_t dist2 = squared_distance(d, other);
    if (gap >= 0) {
      if (dist2 <= reach * reach) return false;
    } else if (reach > 0 && dist2 < reach * reach) {
      return false;
    }
  }
  return true;
}

std::vector<Disk> place_disks(const PileSpec& spec, Rng& rng) {
  const Resolution res = spec.resolution;
  std::vector<Disk> placed;
  placed.reserve(static_cast<std::size_t>(spec.n_logs));

  for (int i = 0; i < spec.n_logs; ++i) {
    bool ok = false;
    for (int attempt = 0; attempt < kMaxPlacementAttempts && !ok; ++attempt) {
      Disk d;
      d.r = rng.uniform_int(spec.radius_min, spec.radius_max);
      if (2 * d.r + 1 > res.width || 2 * d.r + 1 > res.height) continue;

      if (spec.min_gap >= 0 || placed.empty()) {
        d.cx = rng.uniform_int(d.r, res.width - 1 - d.r);
        d.cy = rng.uniform_int(d.r, res.height - 1 - d.r);
        ok = separated(d, placed, spec.min_gap);
      } else {
        // Contact placement: integer center offset from a random parent with
        // r_p + r <= |offset| <= r_p + r + 1, kept only when the digital disks
        // actually touch.
        const Disk& parent =
            placed[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(placed.size()) - 1))];
        const int near = parent.r + d.r;
        const int far = near + 1;
        const int dx = rng.uniform_int(-far, far);
        const int dy = rng.uniform_int(-far, far);
        const std::int64_t dist2 = static_cast<std::int64_t>(dx) * dx +
                                   static_cast<std::int64_t>(dy) * dy;
        if (dist2 > static_cast<std::int64_t>(far) * far ||
            dist2 < static_cast<std::int64_t>(near) * near) {
          continue;
        }
        d.cx = parent.cx + dx;
        d.cy = parent.cy + dy;
        ok = fits(d, res) && separated(d, placed, spec.min_gap) &&
             pixels_touch(d, parent);
      }
      if (ok) placed.push_back(d);
    }
    if (!ok) {
      throw CapacityError("could not place disk " + std::to_string(i + 1) +
                              " of " + std::to_string(spec.n_logs) + " within " +
                              std::to_string(kMaxPlacementAttempts) +
                              " attempts (" + std::to_string(placed.size()) +
                              " placed)",
                          static_cast<int>(placed.size()));
    }
  }
  return placed;
}

// Foreground within Chebyshev distance 1 of (x, y), including (x, y).
bool near_foreground(const BinaryMask& m, int x, int y) {
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      if (m.at_or_background(x + dx, y + dy)) return true;
    }
  }
  return false;
}

struct Cell {
  int x, y;
  friend bool operator==(const Cell&, const Cell&) = default;
};

void add_speckles(const PileSpec& spec, Rng& rng, BinaryMask& mask,
                  int disks_placed) {
  const Resolution res = spec.resolution;
  constexpr int kSteps[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (int i = 0; i < spec.noise_speckles; ++i) {
    bool ok = false;
    for (int attempt = 0; attempt < kMaxPlacementAttempts && !ok; ++attempt) {
      const int area = rng.uniform_int(spec.speckle_area_min, spec.speckle_area_max);
      std::vector<Cell> blob{{rng.uniform_int(0, res.width - 1),
                              rng.uniform_int(0, res.height - 1)}};
      for (int tries = 0; static_cast<int>(blob.size()) < area && tries < 64 * area;
           ++tries) {
        const Cell from = blob[static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<int>(blob.size()) - 1))];
        const auto& step = kSteps[rng.uniform_int(0, 3)];
        const Cell c{from.x + step[0], from.y + step[1]};
        if (c.x < 0 || c.y < 0 || c.x >= res.width || c.y >= res.height) continue;
        if (std::find(blob.begin(), blob.end(), c) == blob.end()) blob.push_back(c);
      }
      if (static_cast<int>(blob.size()) != area) continue;
      ok = std::none_of(blob.begin(), blob.end(), [&](const Cell& c) {
        return near_foreground(mask, c.x, c.y);
      });
      if (ok) {
        for (const auto& c : blob) mask.set(c.x, c.y, true);
      }
    }
    if (!ok) {
      throw CapacityError("could not place speckle " + std::to_string(i + 1) +
                              " of " + std::to_string(spec.noise_speckles) +
                              " (" + std::to_string(disks_placed) +
                              " disks placed)",
                          disks_placed);
    }
  }
}

}  // namespace

SynthTruth generate(const PileSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  auto disks = place_disks(spec, rng);

  BinaryMask clean(spec.resolution);
  for (const auto& d : disks) draw_disk(clean, d);
  BinaryMask noisy = clean;
  add_speckles(spec, rng, noisy, static_cast<int>(disks.size()));

  SynthTruth t{std::move(noisy), std::move(clean),
               static_cast<int>(disks.size()), std::move(disks)};
  return t;
}

int oracle_count(const BinaryMask& mask, Connectivity conn) {
  const int w = mask.width();
  const int h = mask.height();
  std::vector<bool> seen(mask.size(), false);
  int components = 0;
  std::queue<std::pair<int, int>> frontier;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask.at(x, y) || seen[static_cast<std::size_t>(y) * w + x]) continue;
      ++components;
      seen[static_cast<std::size_t>(y) * w + x] = true;
      frontier.emplace(x, y);
      while (!frontier.empty()) {
        const auto [cx, cy] = frontier.front();
        frontier.pop();
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            if (conn == Connectivity::four && dx != 0 && dy != 0) continue;
            const int nx = cx + dx;
            const int ny = cy + dy;
            if (!mask.at_or_background(nx, ny)) continue;
            const auto idx = static_cast<std::size_t>(ny) * w + nx;
            if (seen[idx]) continue;
            seen[idx] = true;
            frontier.emplace(nx, ny);
          }
        }
      }
    }
  }
  return components;
}

}  // namespace logcount
