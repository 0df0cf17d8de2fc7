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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "logcount/labeling.hpp"
#include "logcount/raster.hpp"

namespace logcount {

/// Parameters of a synthetic pile of log faces. Disks are digital:
/// (x, y) is inside iff (x - cx)^2 + (y - cy)^2 <= r^2.
///
/// min_gap >= 0: any two pixels of different disks are farther apart than
/// min_gap (Euclidean). With min_gap >= 1 no two disks are 4-adjacent and with
/// min_gap >= 2 none are 8-adjacent.
///
/// min_gap < 0: each disk after the first is placed in contact with an earlier
/// disk, overlapping it by at most |min_gap| pixels along the center line.
struct PileSpec {
  Resolution resolution{256, 256};
  int n_logs = 25;
  int radius_min = 6;
  int radius_max = 12;
  int min_gap = 2;
  int noise_speckles = 0;
  int speckle_area_min = 1;
  int speckle_area_max = 3;
  std::uint64_t seed = 1;

  void validate() const;
};

struct Disk {
  int cx = 0;
  int cy = 0;
  int r = 0;
  friend bool operator==(const Disk&, const Disk&) = default;
};

struct SynthTruth {
  BinaryMask mask;
  BinaryMask clean_mask;
  int observed = 0;
  std::vector<Disk> disks;
};

/// Rejection sampling ran out of attempts.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, int placed)
      : std::runtime_error(what), placed_(placed) {}
  [[nodiscard]] int placed() const { return placed_; }

 private:
  int placed_;
};

inline constexpr int kMaxPlacementAttempts = 10000;

/// Deterministic in spec (including seed). Speckles are 4-connected blobs that
/// never touch any disk or another speckle, even diagonally.
[[nodiscard]] SynthTruth generate(const PileSpec& spec);

/// Rasterizes a disk into the mask, clipping at the borders.
void draw_disk(BinaryMask& mask, const Disk& d);

/// Breadth-first flood fill component count. Deliberately simple; used to
/// cross-check the labelers.
[[nodiscard]] int oracle_count(const BinaryMask& mask, Connectivity conn);

}  // namespace logcount
