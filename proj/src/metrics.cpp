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

#include "logcount/metrics.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>

namespace logcount {

namespace {

void check_shapes(const BinaryMask& pred, const BinaryMask& truth) {
  if (pred.resolution() != truth.resolution()) {
    throw DimensionMismatch("prediction", pred.resolution(), "ground truth",
                            truth.resolution());
  }
}

ConfusionCounts from_tallies(std::int64_t n, std::int64_t pred_fg,
                             std::int64_t truth_fg, std::int64_t tp) {
  ConfusionCounts c;
  c.tp = tp;
  c.fp = pred_fg - tp;
  c.fn = truth_fg - tp;
  c.tn = n - c.tp - c.fp - c.fn;
  return c;
}

}  // namespace

ConfusionCounts confusion(const BinaryMask& pred, const BinaryMask& truth) {
  check_shapes(pred, truth);
  auto p = pred.data();
  auto t = truth.data();
  const auto n = static_cast<std::int64_t>(p.size());
  std::int64_t tp = 0, pred_fg = 0, truth_fg = 0;
#pragma omp parallel for schedule(static) reduction(+ : tp, pred_fg, truth_fg)
  for (std::int64_t i = 0; i < n; ++i) {
    tp += p[i] & t[i];
    pred_fg += p[i];
    truth_fg += t[i];
  }
  return from_tallies(n, pred_fg, truth_fg, tp);
}

namespace serial {

ConfusionCounts confusion(const BinaryMask& pred, const BinaryMask& truth) {
  check_shapes(pred, truth);
  ConfusionCounts c;
  for (int y = 0; y < pred.height(); ++y) {
    for (int x = 0; x < pred.width(); ++x) {
      const bool p = pred.at(x, y);
      const bool t = truth.at(x, y);
      if (p && t) ++c.tp;
      else if (p) ++c.fp;
      else if (t) ++c.fn;
      else ++c.tn;
    }
  }
  return c;
}

}  // namespace serial

IndexReport indices(const ConfusionCounts& c, DegeneratePolicy policy) {
  if (c.tp < 0 || c.fp < 0 || c.tn < 0 || c.fn < 0) {
    throw std::invalid_argument("confusion counts must be non-negative");
  }
  if (c.total() == 0) {
    throw std::invalid_argument("cannot compute indices from all-zero counts");
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const bool conventional = policy == DegeneratePolicy::convention;
  const double n = static_cast<double>(c.total());
  const double tp = static_cast<double>(c.tp);
  const double fp = static_cast<double>(c.fp);
  const double tn = static_cast<double>(c.tn);
  const double fn = static_cast<double>(c.fn);

  IndexReport r;
  r.accuracy = (tp + tn) / n;

  const double errors_and_hits = tp + fp + fn;
  if (errors_and_hits == 0.0) {
    r.f1 = conventional ? 1.0 : nan;
    r.iou = conventional ? 1.0 : nan;
  } else {
    r.f1 = 2.0 * tp / (2.0 * tp + fp + fn);
    r.iou = tp / errors_and_hits;
  }

  const double p_o = r.accuracy;
  const double p_e = ((tp + fp) * (tp + fn) + (fn + tn) * (fp + tn)) / (n * n);
  if (p_e == 1.0) {
    r.kappa = conventional ? (p_o == 1.0 ? 1.0 : 0.0) : nan;
  } else {
    r.kappa = (p_o - p_e) / (1.0 - p_e);
  }
  return r;
}

IndexReport mean_indices(const std::vector<ImageEvaluation>& images) {
  if (images.empty()) throw std::invalid_argument("mean of an empty batch");
  IndexReport m;
  for (const auto& e : images) {
    m.accuracy += e.report.accuracy;
    m.f1 += e.report.f1;
    m.kappa += e.report.kappa;
    m.iou += e.report.iou;
  }
  const double k = static_cast<double>(images.size());
  m.accuracy /= k;
  m.f1 /= k;
  m.kappa /= k;
  m.iou /= k;
  return m;
}

BatchEvaluation evaluate_batch(const std::vector<EvalPair>& pairs,
                               DegeneratePolicy policy) {
  if (pairs.empty()) throw std::invalid_argument("evaluate_batch: empty batch");
  BatchEvaluation out;
  out.images.resize(pairs.size());
  std::vector<std::exception_ptr> failures(pairs.size());

  const auto n = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      const auto& pair = pairs[i];
      ImageEvaluation e;
      e.name = pair.name;
      e.counts = serial::confusion(pair.pred, pair.truth);
      e.report = indices(e.counts, policy);
      out.images[i] = std::move(e);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (!failures[i]) continue;
    try {
      std::rethrow_exception(failures[i]);
    } catch (const std::exception& e) {
      throw std::runtime_error("evaluate_batch: pair '" + pairs[i].name +
                               "': " + e.what());
    }
  }
  out.means = mean_indices(out.images);
  return out;
}

}  // namespace logcount
