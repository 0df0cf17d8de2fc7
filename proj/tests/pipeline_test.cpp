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

#include <gtest/gtest.h>

#include <filesystem>
#include <limits>
#include <string>

#include "json.hpp"

#include "logcount/json_writer.hpp"
#include "logcount/parallel.hpp"
#include "logcount/pipeline.hpp"
#include "logcount/raster.hpp"
#include "logcount/synth.hpp"

namespace fs = std::filesystem;

namespace logcount {
namespace {

// Scratch directory removed at scope exit.
class TempDir {
 public:
  explicit TempDir(const std::string& tag)
      : path_(fs::temp_directory_path() / ("logcount_pipeline_" + tag)) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

SynthTruth write_pile(const fs::path& dir, const std::string& name,
                      std::uint64_t seed, int n) {
  PileSpec s;
  s.resolution = Resolution(96, 96);
  s.n_logs = n;
  s.radius_min = 5;
  s.radius_max = 8;
  s.min_gap = 2;
  s.seed = seed;
  auto t = generate(s);
  write_bytes(dir / name, encode_mask(t.mask, format_for_path(dir / name)));
  return t;
}

TEST(Config, CanonicalRoundTrip) {
  PipelineConfig c;
  EXPECT_EQ(PipelineConfig::parse_canonical(c.canonical()), c);

  c.cutoff = 64;
  c.connectivity = Connectivity::four;
  c.erode_first = true;
  c.se_shape = SeShape::cross;
  c.se_size = 5;
  c.iterations = 2;
  c.min_area = 17;
  c.accuracy_mode = AccuracyMode::ratio;
  c.degenerate = DegeneratePolicy::propagate_nan;
  c.report = ReportFormat::csv;
  c.fail_fast = true;
  c.inputs = {"a/b.png", "c.pgm"};
  c.truth_dir = "truth";
  c.observed = "obs.csv";
  c.annotate_dir = "ann";
  c.report_out = "out.json";
  EXPECT_EQ(PipelineConfig::parse_canonical(c.canonical()), c);
}

TEST(Config, CommentsAndUnknownKeys) {
  const auto c = PipelineConfig::parse_canonical("# tuned\n\ncutoff = 90\n");
  EXPECT_EQ(c.cutoff, 90);
  EXPECT_THROW((void)PipelineConfig::parse_canonical("cutof=90\n"),
               std::invalid_argument);
  EXPECT_THROW((void)PipelineConfig::parse_canonical("cutoff\n"),
               std::invalid_argument);
  EXPECT_THROW((void)PipelineConfig::parse_canonical("se_size=4\n"),
               std::invalid_argument);
  EXPECT_THROW((void)PipelineConfig::parse_canonical("erode_first=yes\n"),
               std::invalid_argument);
}

TEST(Config, ValidateRejectsOutOfRange) {
  PipelineConfig c;
  c.cutoff = 256;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.iterations = -1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.min_area = -3;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(ObservedCsv, HeaderAndRows) {
  const auto m = parse_observed_csv("image_id,observed\npile_a, 12\n\npile_b,3\n");
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.at("pile_a"), 12);
  EXPECT_EQ(m.at("pile_b"), 3);
  EXPECT_EQ(parse_observed_csv("x,1\n").at("x"), 1);
}

TEST(ObservedCsv, Errors) {
  EXPECT_THROW((void)parse_observed_csv("a,0\n"), std::invalid_argument);
  EXPECT_THROW((void)parse_observed_csv("a,2\na,3\n"), std::invalid_argument);
  EXPECT_THROW((void)parse_observed_csv("a,2\nb,x\n"), std::invalid_argument);
  EXPECT_THROW((void)parse_observed_csv("a 2\n"), std::invalid_argument);
}

TEST(ThreadCap, Parse) {
  EXPECT_EQ(parse_thread_cap("0"), 0);
  EXPECT_EQ(parse_thread_cap("8"), 8);
  EXPECT_FALSE(parse_thread_cap(""));
  EXPECT_FALSE(parse_thread_cap("-1"));
  EXPECT_FALSE(parse_thread_cap("4x"));
  EXPECT_GE(max_threads(), 1);
}

TEST(JsonWriter, FixedSixAndNull) {
  EXPECT_EQ(format_fixed6(0.5), "0.500000");
  EXPECT_EQ(format_fixed6(-0.0), "0.000000");
  EXPECT_EQ(format_fixed6(2.0 / 3.0), "0.666667");
  EXPECT_EQ(format_fixed6(std::numeric_limits<double>::quiet_NaN()), "null");

  JsonWriter w;
  w.begin_object();
  w.key("a").value(1);
  w.key("b").begin_array().value(true).null().end_array();
  w.key("s").value("q\"\n");
  w.end_object();
  EXPECT_EQ(w.str(),
            "{\n  \"a\": 1,\n  \"b\": [\n    true,\n    null\n  ],\n"
            "  \"s\": \"q\\\"\\n\"\n}\n");
}

TEST(CollectImages, ExpandsSortsAndDedupes) {
  TempDir tmp("collect");
  write_pile(tmp.path(), "b.png", 1, 2);
  write_pile(tmp.path(), "a.pgm", 2, 2);
  write_bytes(tmp.path() / "notes.txt", std::vector<std::uint8_t>{'x'});
  const auto files = collect_images({tmp.path(), tmp.path() / "a.pgm"});
  ASSERT_EQ(files.size(), 2u);
  EXPECT_EQ(files[0].filename(), "a.pgm");
  EXPECT_EQ(files[1].filename(), "b.png");
}

TEST(RunPipeline, CountsMatchGeneratorAndScoresObserved) {
  TempDir tmp("run");
  const auto in = tmp.path() / "in";
  fs::create_directories(in);
  const auto t1 = write_pile(in, "p1.png", 11, 6);
  const auto t2 = write_pile(in, "p2.pgm", 12, 9);
  write_bytes(tmp.path() / "obs.csv",
              std::vector<std::uint8_t>{'p', '1', ',', '6', '\n', 'p', '2', ',', '9', '\n'});

  PipelineConfig c;
  c.inputs = {in};
  c.min_area = 20;
  c.observed = tmp.path() / "obs.csv";
  c.annotate_dir = tmp.path() / "ann";
  const auto r = run_pipeline(c);
  ASSERT_TRUE(r.errors.empty());
  ASSERT_EQ(r.images.size(), 2u);
  EXPECT_EQ(r.images[0].count.filtered_components, t1.observed);
  EXPECT_EQ(r.images[1].count.filtered_components, t2.observed);
  ASSERT_TRUE(r.mean_count_accuracy);
  EXPECT_DOUBLE_EQ(*r.mean_count_accuracy, 100.0);
  EXPECT_FALSE(r.index_means);
  EXPECT_TRUE(fs::exists(c.annotate_dir / "p1.png"));
  EXPECT_TRUE(fs::exists(c.annotate_dir / "p2.png"));
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(RunPipeline, MissingTruthIsRecordedAndRunContinues) {
  TempDir tmp("truth");
  const auto in = tmp.path() / "in";
  const auto truth = tmp.path() / "truth";
  fs::create_directories(in);
  fs::create_directories(truth);
  write_pile(in, "a.png", 1, 3);
  write_pile(in, "b.png", 2, 3);
  write_pile(in, "c.png", 3, 3);
  write_pile(truth, "a.png", 1, 3);
  write_pile(truth, "c.png", 30, 3);

  PipelineConfig c;
  c.inputs = {in};
  c.truth_dir = truth;
  const auto r = run_pipeline(c);
  ASSERT_EQ(r.images.size(), 2u);
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_NE(r.errors[0].file.find("b.png"), std::string::npos);
  EXPECT_EQ(r.exit_code(), 1);

  // Identical prediction and truth score perfectly.
  ASSERT_TRUE(r.images[0].evaluation);
  EXPECT_DOUBLE_EQ(r.images[0].evaluation->report.f1, 1.0);
  ASSERT_TRUE(r.images[1].evaluation);
  EXPECT_LT(r.images[1].evaluation->report.f1, 1.0);
  ASSERT_TRUE(r.index_means);

  c.fail_fast = true;
  const auto ff = run_pipeline(c);
  EXPECT_EQ(ff.images.size(), 1u);
  EXPECT_EQ(ff.errors.size(), 1u);
}

TEST(RunPipeline, UndecodableFileIsAnError) {
  TempDir tmp("bad");
  write_bytes(tmp.path() / "bad.png", std::vector<std::uint8_t>{'n', 'o', 'p', 'e'});
  write_pile(tmp.path(), "good.png", 5, 2);
  PipelineConfig c;
  c.inputs = {tmp.path()};
  const auto r = run_pipeline(c);
  EXPECT_EQ(r.images.size(), 1u);
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_NE(r.errors[0].message.find("unrecognized image format"), std::string::npos);
}

TEST(Reports, PipelineJsonSchemaAndDeterminism) {
  TempDir tmp("json");
  const auto in = tmp.path() / "in";
  fs::create_directories(in);
  write_pile(in, "x.png", 7, 4);
  PipelineConfig c;
  c.inputs = {in};
  c.truth_dir = in;  // self-evaluation
  const auto text = render_pipeline_json(run_pipeline(c), c);
  EXPECT_EQ(text, render_pipeline_json(run_pipeline(c), c));

  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["tool_version"], kToolVersion);
  EXPECT_EQ(j["config"]["connectivity"], 8);
  EXPECT_EQ(j["config"]["min_area"], "auto");
  ASSERT_EQ(j["images"].size(), 1u);
  const auto& img = j["images"][0];
  EXPECT_EQ(img["image_id"], "x");
  EXPECT_EQ(img["filtered"], 4);
  EXPECT_EQ(img["boxes"].size(), 4u);
  EXPECT_TRUE(img["observed"].is_null());
  for (const char* k : {"tp", "fp", "tn", "fn", "accuracy", "f1", "kappa", "iou"}) {
    EXPECT_TRUE(img["metrics"].contains(k)) << k;
  }
  for (const char* k : {"accuracy", "f1", "kappa", "iou"}) {
    EXPECT_DOUBLE_EQ(j["means"][k].get<double>(), 1.0) << k;
  }
  EXPECT_TRUE(j["means"]["count_accuracy"].is_null());
  EXPECT_TRUE(j["errors"].empty());
}

TEST(Reports, PipelineCsvColumns) {
  TempDir tmp("csv");
  write_pile(tmp.path(), "q.png", 8, 3);
  PipelineConfig c;
  c.inputs = {tmp.path()};
  const auto plain = render_pipeline_csv(run_pipeline(c));
  EXPECT_EQ(plain.substr(0, plain.find('\n')),
            "image_id,raw,filtered,observed,count_accuracy");
  c.truth_dir = tmp.path();
  const auto with_truth = render_pipeline_csv(run_pipeline(c));
  EXPECT_EQ(with_truth.substr(0, with_truth.find('\n')),
            "image_id,raw,filtered,observed,count_accuracy,tp,fp,tn,fn,"
            "accuracy,f1,kappa,iou");
}

TEST(Reports, EvalJsonAndStrictPairing) {
  TempDir tmp("eval");
  const auto pred = tmp.path() / "pred";
  const auto truth = tmp.path() / "truth";
  fs::create_directories(pred);
  fs::create_directories(truth);
  write_pile(pred, "m.png", 1, 3);
  write_pile(truth, "m.png", 2, 3);
  const auto batch = evaluate_batch(load_eval_pairs(pred, truth, 127));
  const auto j = nlohmann::json::parse(render_eval_json(batch));
  ASSERT_EQ(j["images"].size(), 1u);
  EXPECT_EQ(j["images"][0]["name"], "m.png");
  const auto& m = j["images"][0];
  EXPECT_EQ(m["tp"].get<std::int64_t>() + m["fp"].get<std::int64_t>() +
                m["tn"].get<std::int64_t>() + m["fn"].get<std::int64_t>(),
            96 * 96);
  EXPECT_EQ(j["means"].size(), 4u);

  write_pile(pred, "orphan.png", 3, 1);
  EXPECT_THROW((void)load_eval_pairs(pred, truth, 127), std::runtime_error);
}

TEST(Reports, TruthJson) {
  PileSpec s;
  s.resolution = Resolution(64, 64);
  s.n_logs = 2;
  s.radius_min = 4;
  s.radius_max = 6;
  s.seed = 99;
  const auto t = generate(s);
  const auto j = nlohmann::json::parse(render_truth_json(t, 99));
  EXPECT_EQ(j["observed"], 2);
  EXPECT_EQ(j["seed"], 99);
  ASSERT_EQ(j["disks"].size(), 2u);
  EXPECT_EQ(j["disks"][0]["r"], t.disks[0].r);
}

TEST(Version, NamesPrng) {
  EXPECT_EQ(version_info(), "logcount 1.0.0 schema=1 prng=mt19937_64");
}

}  // namespace
}  // namespace logcount
