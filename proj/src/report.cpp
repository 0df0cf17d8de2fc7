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

#include <sstream>

#include "logcount/json_writer.hpp"
#include "logcount/pipeline.hpp"

namespace logcount {

namespace {

void write_indices(JsonWriter& w, const IndexReport& r) {
  w.key("accuracy").value(r.accuracy);
  w.key("f1").value(r.f1);
  w.key("kappa").value(r.kappa);
  w.key("iou").value(r.iou);
}

void write_counts(JsonWriter& w, const ConfusionCounts& c) {
  w.key("tp").value(c.tp);
  w.key("fp").value(c.fp);
  w.key("tn").value(c.tn);
  w.key("fn").value(c.fn);
}

void write_box(JsonWriter& w, const BoundingBox& b) {
  w.begin_object();
  w.key("x").value(b.x);
  w.key("y").value(b.y);
  w.key("width").value(b.width);
  w.key("height").value(b.height);
  w.end_object();
}

std::string csv_double(double v) {
  const std::string s = format_fixed6(v);
  return s == "null" ? "nan" : s;
}

}  // namespace

std::string render_pipeline_json(const PipelineResult& result,
                                 const PipelineConfig& config) {
  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value(kReportSchemaVersion);
  w.key("tool_version").value(kToolVersion);
  w.key("config").begin_object();
  w.key("cutoff").value(config.cutoff);
  w.key("connectivity").value(static_cast<int>(config.connectivity));
  w.key("erode_first").value(config.erode_first);
  w.key("se_shape").value(to_string(config.se_shape));
  w.key("se_size").value(config.se_size);
  w.key("iterations").value(config.iterations);
  if (config.min_area) w.key("min_area").value(*config.min_area);
  else w.key("min_area").value("auto");
  w.key("accuracy_mode").value(to_string(config.accuracy_mode));
  w.key("degenerate")
      .value(config.degenerate == DegeneratePolicy::convention ? "convention" : "nan");
  w.end_object();

  w.key("images").begin_array();
  for (const auto& img : result.images) {
    w.begin_object();
    w.key("name").value(img.name);
    w.key("image_id").value(img.image_id);
    w.key("raw").value(img.count.raw_components);
    w.key("filtered").value(img.count.filtered_components);
    w.key("min_area").value(img.count.min_area);
    if (img.count.observed) w.key("observed").value(*img.count.observed);
    else w.key("observed").null();
    if (img.count.count_accuracy) w.key("count_accuracy").value(*img.count.count_accuracy);
    else w.key("count_accuracy").null();
    w.key("boxes").begin_array();
    for (const auto& b : img.count.boxes) write_box(w, b);
    w.end_array();
    if (img.evaluation) {
      w.key("metrics").begin_object();
      write_counts(w, img.evaluation->counts);
      write_indices(w, img.evaluation->report);
      w.end_object();
    }
    w.end_object();
  }
  w.end_array();

  w.key("means").begin_object();
  if (result.index_means) write_indices(w, *result.index_means);
  if (result.mean_count_accuracy) w.key("count_accuracy").value(*result.mean_count_accuracy);
  else w.key("count_accuracy").null();
  w.end_object();

  w.key("errors").begin_array();
  for (const auto& e : result.errors) {
    w.begin_object();
    w.key("file").value(e.file);
    w.key("message").value(e.message);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

std::string render_pipeline_csv(const PipelineResult& result) {
  std::ostringstream os;
  os << "image_id,raw,filtered,observed,count_accuracy";
  if (result.has_truth) os << ",tp,fp,tn,fn,accuracy,f1,kappa,iou";
  os << '\n';
  for (const auto& img : result.images) {
    os << img.image_id << ',' << img.count.raw_components << ','
       << img.count.filtered_components << ',';
    if (img.count.observed) os << *img.count.observed;
    os << ',';
    if (img.count.count_accuracy) os << csv_double(*img.count.count_accuracy);
    if (result.has_truth && img.evaluation) {
      const auto& c = img.evaluation->counts;
      const auto& r = img.evaluation->report;
      os << ',' << c.tp << ',' << c.fp << ',' << c.tn << ',' << c.fn << ','
         << csv_double(r.accuracy) << ',' << csv_double(r.f1) << ','
         << csv_double(r.kappa) << ',' << csv_double(r.iou);
    }
    os << '\n';
  }
  return os.str();
}

std::string render_eval_json(const BatchEvaluation& batch) {
  JsonWriter w;
  w.begin_object();
  w.key("images").begin_array();
  for (const auto& img : batch.images) {
    w.begin_object();
    w.key("name").value(img.name);
    write_counts(w, img.counts);
    write_indices(w, img.report);
    w.end_object();
  }
  w.end_array();
  w.key("means").begin_object();
  write_indices(w, batch.means);
  w.end_object();
  w.end_object();
  return w.str();
}

std::string render_eval_csv(const BatchEvaluation& batch) {
  std::ostringstream os;
  os << "name,tp,fp,tn,fn,accuracy,f1,kappa,iou\n";
  for (const auto& img : batch.images) {
    os << img.name << ',' << img.counts.tp << ',' << img.counts.fp << ','
       << img.counts.tn << ',' << img.counts.fn << ','
       << csv_double(img.report.accuracy) << ',' << csv_double(img.report.f1)
       << ',' << csv_double(img.report.kappa) << ','
       << csv_double(img.report.iou) << '\n';
  }
  os << "mean,,,,," << csv_double(batch.means.accuracy) << ','
     << csv_double(batch.means.f1) << ',' << csv_double(batch.means.kappa)
     << ',' << csv_double(batch.means.iou) << '\n';
  return os.str();
}

std::string render_stats_json(const LabelMap& lm,
                              const std::vector<ComponentStats>& stats,
                              Connectivity conn, std::string_view algo) {
  JsonWriter w;
  w.begin_object();
  w.key("width").value(lm.width());
  w.key("height").value(lm.height());
  w.key("connectivity").value(static_cast<int>(conn));
  w.key("algo").value(algo);
  w.key("component_count").value(lm.component_count());
  w.key("components").begin_array();
  for (const auto& s : stats) {
    w.begin_object();
    w.key("label").value(s.label);
    w.key("area").value(s.area);
    w.key("bbox");
    write_box(w, s.bbox);
    w.key("centroid").begin_object();
    w.key("x").value(s.centroid_x);
    w.key("y").value(s.centroid_y);
    w.end_object();
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

std::string render_truth_json(const SynthTruth& truth, std::uint64_t seed) {
  JsonWriter w;
  w.begin_object();
  w.key("observed").value(truth.observed);
  w.key("disks").begin_array();
  for (const auto& d : truth.disks) {
    w.begin_object();
    w.key("cx").value(d.cx);
    w.key("cy").value(d.cy);
    w.key("r").value(d.r);
    w.end_object();
  }
  w.end_array();
  w.key("seed").value(seed);
  w.end_object();
  return w.str();
}

}  // namespace logcount
