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

// logcount: command-line front end for the counting and evaluation flows.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "logcount/counting.hpp"
#include "logcount/labeling.hpp"
#include "logcount/metrics.hpp"
#include "logcount/morphology.hpp"
#include "logcount/parallel.hpp"
#include "logcount/pipeline.hpp"
#include "logcount/synth.hpp"

namespace fs = std::filesystem;
using namespace logcount;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFileFailures = 1;
constexpr int kExitUsage = 2;

// Thrown for anything that is the caller's fault rather than a file's.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const fs::path& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + out.string());
  f << text;
}

struct ProcessingFlags {
  int cutoff = 127;
  std::string connectivity = "8";
  bool erode_first = false;
  std::string se_shape = "box";
  int se_size = 3;
  int iterations = 1;
  std::string min_area = "auto";
  std::string accuracy_mode = "symmetric";
  std::string report = "json";
  bool nan_degenerate = false;
  bool fail_fast = false;
  std::vector<std::string> inputs;
  std::string truth_dir, observed, annotate_dir, out;
};

// Options shared by `count` and `pipeline`.
void add_processing_options(CLI::App* cmd, ProcessingFlags& f) {
  cmd->add_option("inputs", f.inputs, "Mask files or directories of .png/.pgm");
  cmd->add_option("--cutoff", f.cutoff, "Foreground iff intensity > cutoff")
      ->check(CLI::Range(0, 255));
  cmd->add_option("--connectivity", f.connectivity, "4 or 8")
      ->check(CLI::IsMember({"4", "8"}));
  cmd->add_flag("--erode-first", f.erode_first, "Erode before labeling");
  cmd->add_option("--se-shape", f.se_shape, "Erosion kernel: box or cross")
      ->check(CLI::IsMember({"box", "cross"}));
  cmd->add_option("--se-size", f.se_size, "Odd kernel extent");
  cmd->add_option("--iterations", f.iterations, "Erosion passes")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--min-area", f.min_area,
                  "Smallest counted component in pixels, or 'auto' (0.05% of "
                  "the image)");
  cmd->add_option("--observed", f.observed, "CSV of image_id,observed");
  cmd->add_option("--annotate-dir", f.annotate_dir,
                  "Write annotated PNGs here");
  cmd->add_option("--accuracy-mode", f.accuracy_mode, "symmetric or ratio")
      ->check(CLI::IsMember({"symmetric", "ratio"}));
  cmd->add_option("--report", f.report, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", f.out, "Report path (default: stdout)");
  cmd->add_flag("--fail-fast", f.fail_fast, "Stop at the first failing file");
}

// Overlays explicitly given flags onto `base`.
PipelineConfig to_config(const CLI::App* cmd, const ProcessingFlags& f,
                         PipelineConfig base) {
  // `count` lacks the evaluation flags, so absent options read as not given.
  auto given = [&](const char* name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  try {
    if (given("--cutoff")) base.cutoff = f.cutoff;
    if (given("--connectivity")) base.connectivity = parse_connectivity(f.connectivity);
    if (given("--erode-first")) base.erode_first = f.erode_first;
    if (given("--se-shape")) base.se_shape = parse_se_shape(f.se_shape);
    if (given("--se-size")) base.se_size = f.se_size;
    if (given("--iterations")) base.iterations = f.iterations;
    if (given("--min-area")) {
      if (f.min_area == "auto") {
        base.min_area.reset();
      } else {
        std::size_t pos = 0;
        const long long v = std::stoll(f.min_area, &pos);
        if (pos != f.min_area.size()) throw std::invalid_argument("min-area");
        base.min_area = v;
      }
    }
    if (given("--accuracy-mode")) base.accuracy_mode = parse_accuracy_mode(f.accuracy_mode);
    if (given("--report")) base.report = parse_report_format(f.report);
    if (given("--fail-fast")) base.fail_fast = f.fail_fast;
    if (given("--nan-degenerate") && f.nan_degenerate) {
      base.degenerate = DegeneratePolicy::propagate_nan;
    }
    if (given("inputs")) {
      base.inputs.assign(f.inputs.begin(), f.inputs.end());
    }
    if (given("--truth-dir")) base.truth_dir = f.truth_dir;
    if (given("--observed")) base.observed = f.observed;
    if (given("--annotate-dir")) base.annotate_dir = f.annotate_dir;
    if (given("--out")) base.report_out = f.out;
    base.validate();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return base;
}

int run_batch(const PipelineConfig& cfg) {
  if (cfg.inputs.empty()) throw UsageError("no inputs given");
  for (const auto& in : cfg.inputs) {
    if (!fs::exists(in)) throw UsageError("input does not exist: " + in.string());
  }
  if (!cfg.truth_dir.empty() && !fs::is_directory(cfg.truth_dir)) {
    throw UsageError("truth dir is not a directory: " + cfg.truth_dir.string());
  }
  PipelineResult result;
  try {
    result = run_pipeline(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string text = cfg.report == ReportFormat::json
                               ? render_pipeline_json(result, cfg)
                               : render_pipeline_csv(result);
  emit(text, cfg.report_out);
  for (const auto& e : result.errors) {
    std::cerr << "error: " << e.file << ": " << e.message << '\n';
  }
  if (!result.errors.empty()) {
    std::cerr << result.errors.size() << " of "
              << result.errors.size() + result.images.size()
              << " file(s) failed\n";
  }
  return result.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count log faces in binary segmentation masks and score "
               "segmentations against ground truth."};
  app.require_subcommand(1);
  app.set_version_flag("--version", version_info());

  // version
  auto* version_cmd = app.add_subcommand("version", "Print version information");

  // label
  auto* label_cmd = app.add_subcommand("label", "Label connected components");
  std::string label_in, label_conn = "8", label_algo = "scan", stats_out, colorize_out;
  int label_cutoff = 127;
  label_cmd->add_option("input", label_in, "Mask file")->required();
  label_cmd->add_option("--connectivity", label_conn, "4 or 8")
      ->check(CLI::IsMember({"4", "8"}));
  label_cmd->add_option("--algo", label_algo, "scan or union-find")
      ->check(CLI::IsMember({"scan", "union-find"}));
  label_cmd->add_option("--cutoff", label_cutoff, "Foreground iff intensity > cutoff")
      ->check(CLI::Range(0, 255));
  label_cmd->add_option("--stats-out", stats_out, "Write component stats JSON");
  label_cmd->add_option("--colorize", colorize_out, "Write a color-coded PNG");

  // morph
  auto* morph_cmd = app.add_subcommand("morph", "Binary erosion or dilation");
  std::string morph_in, morph_out, morph_op = "erode", morph_shape = "box";
  int morph_size = 3, morph_iter = 1, morph_cutoff = 127;
  morph_cmd->add_option("input", morph_in, "Mask file")->required();
  morph_cmd->add_option("output", morph_out, "Output .png or .pgm")->required();
  morph_cmd->add_option("--op", morph_op, "erode or dilate")
      ->check(CLI::IsMember({"erode", "dilate"}));
  morph_cmd->add_option("--se-shape", morph_shape, "box or cross")
      ->check(CLI::IsMember({"box", "cross"}));
  morph_cmd->add_option("--se-size", morph_size, "Odd kernel extent");
  morph_cmd->add_option("--iterations", morph_iter, "Passes")
      ->check(CLI::NonNegativeNumber);
  morph_cmd->add_option("--cutoff", morph_cutoff, "Foreground iff intensity > cutoff")
      ->check(CLI::Range(0, 255));

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Score predictions against ground truth");
  std::string pred_dir, eval_truth_dir, eval_report = "json", eval_out;
  int eval_cutoff = 127;
  bool eval_nan = false;
  eval_cmd->add_option("--pred-dir", pred_dir, "Predicted masks")->required();
  eval_cmd->add_option("--truth-dir", eval_truth_dir, "Ground-truth masks")->required();
  eval_cmd->add_option("--cutoff", eval_cutoff, "Foreground iff intensity > cutoff")
      ->check(CLI::Range(0, 255));
  eval_cmd->add_option("--report", eval_report, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  eval_cmd->add_option("--out", eval_out, "Report path (default: stdout)");
  eval_cmd->add_flag("--nan-degenerate", eval_nan,
                     "Report undefined indices as NaN instead of the conventions");

  // count
  auto* count_cmd = app.add_subcommand("count", "Count components per mask");
  ProcessingFlags count_flags;
  add_processing_options(count_cmd, count_flags);

  // pipeline
  auto* pipe_cmd = app.add_subcommand(
      "pipeline", "Evaluate and count a batch, with optional ground truth");
  ProcessingFlags pipe_flags;
  std::string config_path;
  bool dump_config = false;
  add_processing_options(pipe_cmd, pipe_flags);
  pipe_cmd->add_option("--truth-dir", pipe_flags.truth_dir,
                       "Ground-truth masks matched by file name");
  pipe_cmd->add_flag("--nan-degenerate", pipe_flags.nan_degenerate,
                     "Report undefined indices as NaN");
  pipe_cmd->add_option("--config", config_path,
                       "Canonical config file; other flags override it");
  pipe_cmd->add_flag("--dump-config", dump_config,
                     "Print the canonical config and exit");

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic log pile");
  PileSpec spec;
  int synth_w = 256, synth_h = 256;
  std::string synth_dir = ".", synth_name = "pile";
  synth_cmd->add_option("--width", synth_w, "Image width")->check(CLI::Range(1, kMaxDimension));
  synth_cmd->add_option("--height", synth_h, "Image height")->check(CLI::Range(1, kMaxDimension));
  synth_cmd->add_option("--n-logs", spec.n_logs, "Disks to place");
  synth_cmd->add_option("--radius-min", spec.radius_min, "Smallest radius");
  synth_cmd->add_option("--radius-max", spec.radius_max, "Largest radius");
  synth_cmd->add_option("--min-gap", spec.min_gap,
                        "Pixel gap between disks; negative forces contact");
  synth_cmd->add_option("--noise", spec.noise_speckles, "Speckle count");
  synth_cmd->add_option("--speckle-min", spec.speckle_area_min, "Smallest speckle area");
  synth_cmd->add_option("--speckle-max", spec.speckle_area_max, "Largest speckle area");
  synth_cmd->add_option("--seed", spec.seed, "PRNG seed");
  synth_cmd->add_option("--out-dir", synth_dir, "Output directory");
  synth_cmd->add_option("--name", synth_name, "Output file stem");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    apply_thread_cap_from_env();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (version_cmd->parsed()) {
      std::cout << version_info() << '\n';
      return kExitOk;
    }

    if (label_cmd->parsed()) {
      const Connectivity conn = parse_connectivity(label_conn);
      const BinaryMask mask = threshold(read_image(label_in), label_cutoff);
      const LabelMap lm = label_algo == "scan" ? label_scan(mask, conn)
                                               : label_union_find(mask, conn);
      const auto stats = component_stats(lm);
      if (!stats_out.empty()) {
        emit(render_stats_json(lm, stats, conn, label_algo), stats_out);
      }
      if (!colorize_out.empty()) write_bytes(colorize_out, encode_rgb_png(colorize(lm)));
      std::cout << "components: " << lm.component_count() << '\n';
      return kExitOk;
    }

    if (morph_cmd->parsed()) {
      StructuringElement se = [&] {
        try {
          return make_structuring_element(parse_se_shape(morph_shape), morph_size);
        } catch (const std::exception& e) {
          throw UsageError(e.what());
        }
      }();
      const BinaryMask mask = threshold(read_image(morph_in), morph_cutoff);
      const BinaryMask out = morph_op == "erode"
                                 ? erode_iterated(mask, se, morph_iter)
                                 : dilate_iterated(mask, se, morph_iter);
      write_bytes(morph_out, encode_mask(out, format_for_path(morph_out)));
      return kExitOk;
    }

    if (eval_cmd->parsed()) {
      for (const auto& d : {pred_dir, eval_truth_dir}) {
        if (!fs::is_directory(d)) throw UsageError("not a directory: " + d);
      }
      const auto pairs = load_eval_pairs(pred_dir, eval_truth_dir, eval_cutoff);
      if (pairs.empty()) throw UsageError("no images in " + pred_dir);
      const auto batch = evaluate_batch(
          pairs, eval_nan ? DegeneratePolicy::propagate_nan : DegeneratePolicy::convention);
      emit(eval_report == "json" ? render_eval_json(batch) : render_eval_csv(batch),
           eval_out);
      return kExitOk;
    }

    if (count_cmd->parsed()) {
      return run_batch(to_config(count_cmd, count_flags, PipelineConfig{}));
    }

    if (pipe_cmd->parsed()) {
      PipelineConfig base;
      if (!config_path.empty()) {
        try {
          const auto bytes = read_bytes(config_path);
          base = PipelineConfig::parse_canonical(
              std::string(bytes.begin(), bytes.end()));
        } catch (const std::exception& e) {
          throw UsageError(config_path + ": " + e.what());
        }
      }
      const PipelineConfig cfg = to_config(pipe_cmd, pipe_flags, base);
      if (dump_config) {
        std::cout << cfg.canonical();
        return kExitOk;
      }
      return run_batch(cfg);
    }

    if (synth_cmd->parsed()) {
      try {
        spec.resolution = Resolution(synth_w, synth_h);
        spec.validate();
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      const SynthTruth truth = generate(spec);
      fs::create_directories(synth_dir);
      const fs::path dir(synth_dir);
      write_bytes(dir / (synth_name + ".png"), encode_mask(truth.mask, ImageFormat::png));
      write_bytes(dir / (synth_name + "_clean.png"),
                  encode_mask(truth.clean_mask, ImageFormat::png));
      emit(render_truth_json(truth, spec.seed), dir / (synth_name + "_truth.json"));
      std::cout << "observed: " << truth.observed << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFileFailures;
  }
  return kExitUsage;
}
