#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <iostream>
#include <optional>

#include "strokeforge/pipeline.hpp"
#include "strokeforge/render.hpp"
#include "strokeforge/serialization.hpp"
#include "strokeforge/thinning.hpp"

namespace strokeforge::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kStrokeSetFormat =
    "StrokeSet JSON: {\"strokes\": [[[x,y],...],...]} in pixel units, y pointing down.";
constexpr const char* kSequenceFormat =
    "OnlineSequence JSON: {\"strokes\": [[[x,y],...],...], \"fallback\": [bool,...]}; one entry per stroke, "
    "consecutive samples are one time step apart, pen lifts between strokes.";

struct BinarizeFlags {
  std::optional<int> threshold;
  bool invert = false;

  void attach(CLI::App* app) {
    app->add_option("--threshold", threshold, "Fixed ink threshold (ink iff luminance < value); Otsu if omitted")
        ->check(CLI::Range(0, 255));
    app->add_flag("--invert", invert, "Treat light ink on a dark background");
  }

  BinarizeMethod method() const {
    if (threshold) return FixedThreshold{static_cast<std::uint8_t>(*threshold)};
    return OtsuThreshold{};
  }

  GrayImage load(const fs::path& path) const {
    GrayImage img = load_png_file(path);
    return invert ? strokeforge::invert(img) : img;
  }
};

struct ResampleFlags {
  double accel = 3.0;
  std::optional<double> spacing;
  std::optional<double> reach;
  std::optional<double> speed;
  std::string method = "maxaccel";
  unsigned jobs = 1;

  void attach(CLI::App* app, bool accel_required) {
    auto* a = app->add_option("--accel", accel, "Maximum acceleration a in pixels per step^2 (> 0)")
                  ->check(CLI::PositiveNumber);
    if (accel_required) a->required();
    else a->capture_default_str();
    app->add_option("--spacing", spacing, "Pre-sampling spacing in pixels (default a/3)")->check(CLI::PositiveNumber);
    app->add_option("--reach", reach, "Reachability threshold t in pixels (default 3 x spacing)")
        ->check(CLI::PositiveNumber);
    app->add_option("--method", method, "Resampling method")
        ->check(CLI::IsMember({"maxaccel", "constvel", "none"}))
        ->capture_default_str();
    app->add_option("--speed", speed, "Step length for constvel in pixels (default a)")->check(CLI::PositiveNumber);
    app->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  }

  ResampleOptions options() const {
    ResampleOptions o;
    o.params = ResampleParams::make(accel, spacing, reach);
    o.speed = speed.value_or(accel);
    o.jobs = jobs;
    o.method = method == "constvel" ? ResampleMethod::constant_velocity
               : method == "none"   ? ResampleMethod::none
                                    : ResampleMethod::max_accel;
    return o;
  }
};

std::string read_text(const fs::path& path) {
  const auto bytes = read_file(path);
  return std::string(bytes.begin(), bytes.end());
}

void emit_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") out << text;
  else write_file(path, text);
}

void emit_json(const nlohmann::json& j, const std::string& path, std::ostream& out) {
  emit_text(j.dump(2) + "\n", path, out);
}

std::vector<std::size_t> parse_soft_list(const std::string& spec) {
  std::vector<std::size_t> ks;
  std::string field;
  for (char c : spec + ",") {
    if (c == ',') {
      if (!field.empty()) {
        std::size_t k = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), k);
        if (ec != std::errc{} || ptr != field.data() + field.size() || k == 0)
          throw CLI::ValidationError("--soft", "expected positive integers, got '" + field + "'");
        ks.push_back(k);
      }
      field.clear();
    } else if (c != ' ') {
      field += c;
    }
  }
  return ks;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Offline handwriting skeletons to online pen trajectories, and back.", "strokeforge"};
  app.set_version_flag("--version", std::string("strokeforge ") + STROKEFORGE_VERSION);
  app.require_subcommand(1);

  std::string input;
  std::string output;
  BinarizeFlags binarize_flags;
  ResampleFlags resample_flags;

  // skeletonize
  auto* skeletonize_cmd = app.add_subcommand("skeletonize", "Binarize and thin a handwriting image");
  skeletonize_cmd->add_option("input", input, "Input PNG (grayscale or RGB)")->required();
  skeletonize_cmd->add_option("-o,--output", output, "Output skeleton PNG (ink black on white)")->required();
  binarize_flags.attach(skeletonize_cmd);

  // vectorize
  bool thin_first = false;
  auto* vectorize_cmd = app.add_subcommand("vectorize", "Convert a skeleton PNG to strokes");
  vectorize_cmd->add_option("input", input, "Skeleton PNG")->required();
  vectorize_cmd->add_option("-o,--output", output, "Output StrokeSet JSON (stdout if omitted)");
  vectorize_cmd->add_flag("--thin", thin_first, "Thin the binarized image first");
  vectorize_cmd->footer(kStrokeSetFormat);
  binarize_flags.attach(vectorize_cmd);

  // resample
  auto* resample_cmd = app.add_subcommand("resample", "Assign pen dynamics to strokes");
  resample_cmd->add_option("input", input, "StrokeSet JSON")->required();
  resample_cmd->add_option("-o,--output", output, "Output OnlineSequence JSON, input order (stdout if omitted)");
  resample_flags.attach(resample_cmd, true);
  resample_cmd->footer(std::string("Input: ") + kStrokeSetFormat + "\nOutput: " + kSequenceFormat);

  // order
  auto* order_cmd = app.add_subcommand("order", "Order strokes left to right and orient them");
  order_cmd->add_option("input", input, "OnlineSequence JSON")->required();
  order_cmd->add_option("-o,--output", output, "Output OnlineSequence JSON (stdout if omitted)");
  order_cmd->footer(kSequenceFormat);

  // export-deltas
  bool relative_origin = false;
  auto* deltas_cmd = app.add_subcommand("export-deltas", "Write an online sequence as pen-delta CSV");
  deltas_cmd->add_option("input", input, "OnlineSequence JSON")->required();
  deltas_cmd->add_option("-o,--output", output, "Output CSV (stdout if omitted)");
  deltas_cmd->add_flag("--relative", relative_origin, "Measure the first row from the first sample, not (0,0)");
  deltas_cmd->footer("CSV: header \"dx,dy,lift\", one row per sample; lift=1 on the last sample of a stroke.");

  // render
  int width = 0;
  int height = 0;
  auto* render_cmd = app.add_subcommand("render", "Rasterize an online sequence as a 1-px skeleton");
  render_cmd->add_option("input", input, "OnlineSequence JSON")->required();
  render_cmd->add_option("--width", width, "Canvas width")->required()->check(CLI::PositiveNumber);
  render_cmd->add_option("--height", height, "Canvas height")->required()->check(CLI::PositiveNumber);
  render_cmd->add_option("-o,--output", output, "Output PNG")->required();
  render_cmd->footer(kSequenceFormat);

  // roundtrip
  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Skeleton -> online -> skeleton chamfer distances");
  roundtrip_cmd->add_option("input", input, "Input PNG")->required();
  roundtrip_cmd->add_option("-o,--output", output, "Output JSON (stdout if omitted)");
  binarize_flags.attach(roundtrip_cmd);
  resample_flags.attach(roundtrip_cmd, false);
  roundtrip_cmd->footer("Output JSON: {\"mean_ab\", \"mean_ba\", \"max_ab\", \"max_ba\"} in pixels; a = input "
                        "skeleton, b = rendered trajectory.");

  // dataset-gen
  std::string in_dir;
  std::string out_dir;
  unsigned dataset_jobs = 1;
  auto* dataset_cmd = app.add_subcommand("dataset-gen", "Write (original, naive skeleton) training pairs");
  dataset_cmd->add_option("--in", in_dir, "Directory of input PNGs")->required();
  dataset_cmd->add_option("--out", out_dir, "Output directory")->required();
  dataset_cmd->add_option("--jobs", dataset_jobs, "Worker threads")->check(CLI::PositiveNumber);
  binarize_flags.attach(dataset_cmd);
  dataset_cmd->footer("Writes <stem>_original.png, <stem>_skeleton.png and manifest.json: "
                      "[{\"source\", \"original\", \"skeleton\", \"status\": \"ok\"|\"skipped\"}, ...].");

  // eval
  std::string dist_path;
  std::string labels_path;
  std::string exclusions_path;
  std::string soft_spec = "2,3,4,5";
  auto* eval_cmd = app.add_subcommand("eval", "Leave-one-out writer retrieval metrics");
  eval_cmd->add_option("--dist", dist_path, "N x N distance matrix CSV, no header")->required();
  eval_cmd->add_option("--labels", labels_path, "Writer labels, one per line")->required();
  eval_cmd->add_option("--soft", soft_spec, "Comma-separated K values for Soft-K")->capture_default_str();
  eval_cmd->add_option("--exclusions", exclusions_path, "CSV of query,item index pairs to drop");
  eval_cmd->add_option("-o,--output", output, "Output JSON (stdout if omitted)");
  eval_cmd->footer("Report JSON: {\"map\", \"accuracy\", \"soft\": {\"K\": percent}, \"evaluated\", \"skipped\"}.");

  // pipeline
  std::string render_path;
  auto* pipeline_cmd = app.add_subcommand("pipeline", "Image -> skeleton -> strokes -> resampled, ordered sequence");
  pipeline_cmd->add_option("input", input, "Input PNG")->required();
  pipeline_cmd->add_option("-o,--output", output, "Output OnlineSequence JSON (stdout if omitted)");
  pipeline_cmd->add_option("--render", render_path, "Also render the result to this PNG");
  binarize_flags.attach(pipeline_cmd);
  resample_flags.attach(pipeline_cmd, false);
  pipeline_cmd->footer(kSequenceFormat);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*skeletonize_cmd) {
      save_png(skeletonize(binarize_flags.load(input), binarize_flags.method()), output);
    } else if (*vectorize_cmd) {
      BinaryImage mask = binarize(binarize_flags.load(input), binarize_flags.method());
      if (thin_first) mask = thin(mask);
      emit_json(to_json(vectorize(mask)), output, out);
    } else if (*resample_cmd) {
      const StrokeSet strokes = stroke_set_from_json(parse_json(read_text(input)));
      emit_json(to_json(OnlineSequence{resample_all(strokes, resample_flags.options())}), output, out);
    } else if (*order_cmd) {
      const OnlineSequence seq = online_sequence_from_json(parse_json(read_text(input)));
      emit_json(to_json(order_strokes(seq.strokes)), output, out);
    } else if (*deltas_cmd) {
      const OnlineSequence seq = online_sequence_from_json(parse_json(read_text(input)));
      const auto origin = relative_origin ? std::nullopt : std::optional<Point>(Point{});
      emit_text(deltas_to_csv(to_deltas(seq, origin)), output, out);
    } else if (*render_cmd) {
      const OnlineSequence seq = online_sequence_from_json(parse_json(read_text(input)));
      save_png(render_online(seq, width, height), output);
    } else if (*roundtrip_cmd) {
      const BinaryImage skeleton = skeletonize(binarize_flags.load(input), binarize_flags.method());
      const OnlineSequence seq = online_from_skeleton(skeleton, resample_flags.options());
      const auto c = chamfer(skeleton, render_online(seq, skeleton.width(), skeleton.height()));
      emit_json({{"mean_ab", c.mean_ab}, {"mean_ba", c.mean_ba}, {"max_ab", c.max_ab}, {"max_ba", c.max_ba}}, output,
                out);
    } else if (*dataset_cmd) {
      const PairManifest m = generate_training_pairs(in_dir, out_dir, binarize_flags.method(), dataset_jobs);
      for (const auto& e : m.entries)
        if (!e.ok) err << "skipped " << e.source << ": " << e.reason << "\n";
      err << m.pair_count() << " pairs, " << m.skipped_count() << " skipped\n";
    } else if (*eval_cmd) {
      RetrievalProblem problem;
      problem.dist = parse_matrix_csv(read_text(dist_path));
      problem.labels = parse_labels(read_text(labels_path));
      std::vector<std::pair<std::size_t, std::size_t>> exclusions;
      if (!exclusions_path.empty()) exclusions = parse_index_pairs(read_text(exclusions_path));
      const RetrievalReport report = leave_one_out_eval(problem, exclusions, parse_soft_list(soft_spec));
      if (report.skipped > 0) err << "warning: " << report.skipped << " queries had no relevant item\n";
      emit_json(to_json(report), output, out);
    } else if (*pipeline_cmd) {
      const BinaryImage skeleton = skeletonize(binarize_flags.load(input), binarize_flags.method());
      const OnlineSequence seq = online_from_skeleton(skeleton, resample_flags.options());
      emit_json(to_json(seq), output, out);
      if (!render_path.empty()) save_png(render_online(seq, skeleton.width(), skeleton.height()), render_path);
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kProcessing;
  }
  return kOk;
}

}  // namespace strokeforge::cli
