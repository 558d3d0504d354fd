// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#include "cli.h"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <ostream>
#include <set>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "plateflow/backend.h"
#include "plateflow/dataset.h"
#include "plateflow/error.h"
#include "plateflow/image.h"
#include "plateflow/metrics.h"
#include "plateflow/parallel.h"
#include "plateflow/pipeline.h"
#include "plateflow/records.h"
#include "plateflow/report.h"
#include "settings.h"

namespace fs = std::filesystem;

namespace plateflow::cli {

namespace {

// Failure with a fixed exit code, raised where the stage (not the error
// code) decides the category.
class Failure : public std::runtime_error {
 public:
  Failure(int exit_code, const std::string& message)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kSchema:
      return kExitConfig;
    case ErrorCode::kNotFound:
    case ErrorCode::kShape:
    case ErrorCode::kDecode:
    case ErrorCode::kUnavailable:
      return kExitBackend;
    case ErrorCode::kParse:
    case ErrorCode::kIo:
    case ErrorCode::kFormat:
    case ErrorCode::kDomain:
      return kExitData;
  }
  return kExitData;
}

struct Io {
  std::ostream& out;
  std::ostream& err;
  bool quiet = false;

  void Say(const std::string& text) const {
    if (!quiet) out << text;
  }
};

// Writes `content` to `path` via a temporary file in the same directory,
// or to `io.out` when `path` is empty.
void WriteOutput(const std::string& path, const std::string& content, const Io& io) {
  if (path.empty()) {
    io.out << content;
    return;
  }
  const fs::path target(path);
  const fs::path tmp =
      target.parent_path() / fmt::format(".{}.tmp{}", target.filename().string(), ::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    f << content;
    f.close();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot write " + target.string());
  }
}

// cv::dnn networks are not re-entrant.
class SerializedBackend : public DetectorBackend {
 public:
  explicit SerializedBackend(std::unique_ptr<DetectorBackend> inner)
      : inner_(std::move(inner)) {}
  RawHeadOutput Infer(std::string_view key, const PreprocessedInput& input) override {
    std::lock_guard<std::mutex> lock(mu_);
    return inner_->Infer(key, input);
  }

 private:
  std::mutex mu_;
  std::unique_ptr<DetectorBackend> inner_;
};

std::string FixturesDir(const Settings& s) {
  if (auto v = s.Find("fixtures")) return *v;
  if (const char* env = std::getenv(kFixturesEnv); env && *env) return env;
  return {};
}

// Recorded: "<role>-model" overrides the tensor directory for that stage,
// else --fixtures / $PLATEFLOW_FIXTURES. Runtime: "<role>-model" is an ONNX
// file.
std::unique_ptr<DetectorBackend> MakeBackend(const Settings& s, ModelRole role) {
  const std::string backend = s.GetChoice("backend", {"recorded", "runtime"});
  const std::string model_key = role == ModelRole::kPlate ? "plate-model" : "char-model";
  const ModelDescriptor desc = role == ModelRole::kPlate ? ModelDescriptor::Plate()
                                                         : ModelDescriptor::Character();
  if (backend == "recorded") {
    std::string dir = s.Get(model_key);
    if (dir.empty()) dir = FixturesDir(s);
    if (dir.empty()) {
      throw ConfigError(fmt::format(
          "recorded backend needs --fixtures, --{} or ${}", model_key, kFixturesEnv));
    }
    try {
      return std::make_unique<RecordedBackend>(dir, desc);
    } catch (const Error& e) {
      throw Failure(kExitBackend, e.what());
    }
  }
  if (!s.Has(model_key)) {
    throw ConfigError(fmt::format("runtime backend needs --{}", model_key));
  }
  try {
    return std::make_unique<SerializedBackend>(
        MakeRuntimeBackend(s.Get(model_key), desc));
  } catch (const Error& e) {
    throw Failure(kExitBackend, e.what());
  }
}

ClassMap CharacterClasses(const Settings& s) {
  if (auto path = s.Find("classes")) {
    return LoadClassMap(*path, ClassPreset::kCharacters);
  }
  return ClassMap::Characters();
}

PipelineConfig PipelineFrom(const Settings& s) {
  PipelineConfig cfg;
  const double conf = s.GetUnit("conf");
  const double iou = s.GetUnit("nms-iou");
  cfg.plate.conf_threshold = cfg.character.conf_threshold = conf;
  cfg.plate.iou_threshold = cfg.character.iou_threshold = iou;
  if (s.Has("pad")) {
    const double pad = s.GetUnit("pad");
    cfg.pad_ratio = pad;
  }
  if (s.Has("rows")) cfg.cluster_rows = s.GetBool("rows");
  return cfg;
}

std::vector<fs::path> ImagesFrom(const Settings& s) {
  if (!s.Has("images")) throw ConfigError("--images is required");
  const fs::path dir = s.Get("images");
  if (!fs::is_directory(dir)) {
    throw Error(ErrorCode::kIo, "image directory not found: " + dir.string());
  }
  return ListImages(dir);
}

std::string Fixed(double v) { return fmt::format("{:.6f}", v); }

// ------------------------------------------------------------- detect

int CmdDetect(const Settings& s, const Io& io) {
  const std::string role = s.GetChoice("role", {"plate", "character"});
  const std::string format = s.GetChoice("format", {"json", "csv"});
  const int workers = s.GetPositiveInt("workers");
  const PipelineConfig cfg = PipelineFrom(s);
  const bool plates = role == "plate";
  const ClassMap classes = plates ? ClassMap::Plate() : CharacterClasses(s);
  const std::vector<fs::path> images = ImagesFrom(s);
  auto backend = MakeBackend(s, plates ? ModelRole::kPlate : ModelRole::kCharacter);

  std::vector<ImageDetections> results(images.size());
  ParallelFor(images.size(), workers, [&](std::size_t i) {
    const RgbImage image = LoadImage(images[i]);
    ImageDetections& rec = results[i];
    rec.image = images[i].stem().string();
    rec.role = role;
    rec.width = image.width;
    rec.height = image.height;
    const PreprocessedInput input = Preprocess(image, cfg.input_size);
    const PostprocessConfig& pc = plates ? cfg.plate : cfg.character;
    try {
      rec.detections =
          PostprocessImage(backend->Infer(rec.image, input), pc, input.transform);
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("image '{}': {}", rec.image, e.what()));
    }
  });

  std::string body;
  std::size_t total = 0;
  if (format == "csv") body = "image,class_id,class,confidence,x1,y1,x2,y2\n";
  for (const auto& rec : results) {
    total += rec.detections.size();
    if (format == "json") {
      body += DetectionRecordJson(rec, classes) + "\n";
      continue;
    }
    for (const auto& d : rec.detections) {
      body += fmt::format("{},{},{},{},{},{},{},{}\n", rec.image, d.class_id,
                          classes.name(d.class_id), Fixed(d.confidence),
                          Fixed(d.box.x1), Fixed(d.box.y1), Fixed(d.box.x2),
                          Fixed(d.box.y2));
    }
  }
  WriteOutput(s.Get("out"), body, io);
  if (s.Has("out")) {
    io.Say(fmt::format("{} images, {} {} detections -> {}\n", results.size(),
                       total, role, s.Get("out")));
  }
  return kExitOk;
}

// --------------------------------------------------------------- read

int CmdRead(const Settings& s, const Io& io) {
  const std::string format = s.GetChoice("format", {"json", "csv"});
  const int workers = s.GetPositiveInt("workers");
  const PipelineConfig cfg = PipelineFrom(s);
  const ClassMap classes = CharacterClasses(s);
  const std::vector<fs::path> images = ImagesFrom(s);
  auto plate_backend = MakeBackend(s, ModelRole::kPlate);
  auto char_backend = MakeBackend(s, ModelRole::kCharacter);

  std::vector<ImageReadings> results(images.size());
  ParallelFor(images.size(), workers, [&](std::size_t i) {
    const RgbImage image = LoadImage(images[i]);
    ImageReadings& rec = results[i];
    rec.image = images[i].stem().string();
    rec.width = image.width;
    rec.height = image.height;
    rec.readings =
        ReadPlates(image, rec.image, *plate_backend, *char_backend, classes, cfg);
  });

  std::string body;
  std::size_t plates = 0;
  if (format == "csv") body = "image,plate,text,confidence,x1,y1,x2,y2\n";
  for (const auto& rec : results) {
    plates += rec.readings.size();
    if (format == "json") {
      body += ReadingRecordJson(rec) + "\n";
      continue;
    }
    for (std::size_t k = 0; k < rec.readings.size(); ++k) {
      const auto& r = rec.readings[k];
      body += fmt::format("{},{},{},{},{},{},{},{}\n", rec.image, k, r.text,
                          Fixed(r.plate.confidence), Fixed(r.plate.box.x1),
                          Fixed(r.plate.box.y1), Fixed(r.plate.box.x2),
                          Fixed(r.plate.box.y2));
    }
  }
  WriteOutput(s.Get("out"), body, io);
  if (s.Has("out")) {
    io.Say(fmt::format("{} images, {} plates -> {}\n", results.size(), plates,
                       s.Get("out")));
  }
  return kExitOk;
}

// --------------------------------------------------------------- eval

// --classes, else a data.yaml at or above the dataset root.
std::optional<ClassMap> FindDatasetClasses(const Settings& s, const fs::path& root) {
  if (auto path = s.Find("classes")) return LoadClassMap(*path);
  for (const fs::path candidate : {root / "data.yaml", root.parent_path() / "data.yaml"}) {
    if (fs::is_regular_file(candidate)) return LoadClassMap(candidate);
  }
  return std::nullopt;
}

ClassMap DatasetClasses(const Settings& s, const fs::path& root) {
  return FindDatasetClasses(s, root).value_or(ClassMap::Plate());
}

int CmdEval(const Settings& s, const Io& io) {
  const std::string format = s.GetChoice("format", {"json", "csv"});
  const int workers = s.GetPositiveInt("workers");
  if (!s.Has("predictions")) throw ConfigError("--predictions is required");
  if (!s.Has("dataset")) throw ConfigError("--dataset is required");
  EvalOptions options;
  options.fixed_confidence = s.GetUnit("conf");

  const fs::path root = s.Get("dataset");
  const ClassMap classes = DatasetClasses(s, root);
  const DatasetSplit split = LoadSplit(root, s.Get("split"), &classes, workers);
  const auto predictions = LoadPredictions(s.Get("predictions"));

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < split.entries.size(); ++i) {
    index[split.entries[i].id] = i;
  }
  std::vector<ImageEval> evals(split.entries.size());
  for (const auto& [image, dets] : predictions) {
    const auto it = index.find(image);
    if (it == index.end()) {
      throw Error(ErrorCode::kFormat,
                  fmt::format("predictions name image '{}', which is not in split '{}'",
                              image, split.name));
    }
    for (const auto& d : dets) {
      if (d.class_id < 0 || static_cast<std::size_t>(d.class_id) >= classes.size()) {
        throw Error(ErrorCode::kFormat,
                    fmt::format("image '{}': predicted class {} is outside the {} "
                                "dataset classes",
                                image, d.class_id, classes.size()));
      }
    }
    evals[it->second].predictions = dets;
  }
  for (std::size_t i = 0; i < split.entries.size(); ++i) {
    const auto& e = split.entries[i];
    for (const auto& a : e.annotations) {
      evals[i].ground_truth.push_back({NormToPixels(a.box, e.width, e.height), a.class_id});
    }
  }

  EvalReport report = EvaluateDetections(evals, classes, options);
  if (s.Has("truth")) {
    const auto readings = LoadReadings(s.Get("predictions"));
    const auto truth = LoadPlateTruth(s.Get("truth"));
    const SequencePairs pairs = PairReadings(readings, truth);
    report.sequence_accuracy = SequenceAccuracy(pairs.predicted, pairs.truth).accuracy;
  }

  std::map<std::string, std::string> echo = s.Resolved();
  for (const char* k : {"workers", "out", "quiet", "format"}) echo.erase(k);
  if (s.Has("out")) {
    WriteOutput(s.Get("out"),
                format == "json" ? ReportJson(report, echo) + "\n" : ReportCsv(report),
                io);
  }
  io.Say(ReportTable(report));
  if (s.Has("sweep") && s.GetBool("sweep")) {
    EvalAccumulator acc(static_cast<int>(classes.size()), options.iou_thresholds);
    for (const auto& ev : evals) {
      acc.Add(Match(ev.predictions, ev.ground_truth, options.iou_thresholds,
                    static_cast<int>(classes.size())));
    }
    std::vector<OperatingPoint> points;
    for (int k = 0; k <= 19; ++k) points.push_back(OperatingPointAt(acc, 0.05 * k));
    io.Say(SweepTable(points));
  }
  return kExitOk;
}

// -------------------------------------------------------------- stats

int CmdStats(const Settings& s, const Io& io) {
  const std::string format = s.GetChoice("format", {"json", "csv"});
  const int workers = s.GetPositiveInt("workers");
  if (!s.Has("dataset")) throw ConfigError("--dataset is required");
  const fs::path root = s.Get("dataset");
  const std::optional<ClassMap> classes = FindDatasetClasses(s, root);
  const DatasetSplit split =
      LoadSplit(root, s.Get("split"), classes ? &*classes : nullptr, workers);
  const DatasetStats stats = ComputeStats(split);

  auto class_name = [&](int cls) {
    return classes && static_cast<std::size_t>(cls) < classes->size()
               ? classes->name(cls)
               : std::to_string(cls);
  };
  std::string text = fmt::format("split {}: {} images, {} annotations, {} empty\n",
                                 split.name, stats.images, stats.annotations,
                                 stats.empty_images);
  for (const auto& [cls, count] : stats.per_class) {
    text += fmt::format("  {:>8} {:>8}\n", class_name(cls), count);
  }
  if (stats.annotations > 0) {
    auto q = [](const char* label, const Quantiles& v) {
      return fmt::format("  {} min {:.4f} q25 {:.4f} median {:.4f} q75 {:.4f} max {:.4f}\n",
                         label, v.min, v.q25, v.median, v.q75, v.max);
    };
    text += q("box width ", stats.box_width) + q("box height", stats.box_height);
  }
  io.Say(text);
  if (s.Has("out")) {
    std::string body;
    if (format == "json") {
      body = DatasetStatsJson(split, stats, classes ? &*classes : nullptr) + "\n";
    } else {
      body = "class_id,class,count\n";
      for (const auto& [cls, count] : stats.per_class) {
        body += fmt::format("{},{},{}\n", cls, class_name(cls), count);
      }
    }
    WriteOutput(s.Get("out"), body, io);
  }
  return kExitOk;
}

// ----------------------------------------------------------- seq-eval

int CmdSeqEval(const Settings& s, const Io& io) {
  const std::string format = s.GetChoice("format", {"json", "csv"});
  if (!s.Has("readings")) throw ConfigError("--readings is required");
  if (!s.Has("truth")) throw ConfigError("--truth is required");
  const auto readings = LoadReadings(s.Get("readings"));
  const auto truth = LoadPlateTruth(s.Get("truth"));
  const SequencePairs pairs = PairReadings(readings, truth);
  const SequenceScore score = SequenceAccuracy(pairs.predicted, pairs.truth);

  std::string text =
      score.accuracy
          ? fmt::format("sequence accuracy: {:.4f} ({} / {})\n", *score.accuracy,
                        score.correct, score.total)
          : std::string("sequence accuracy: undefined (no truth plates)\n");
  for (const auto& m : score.mismatches) {
    text += fmt::format("  {}: predicted '{}' truth '{}'\n", m.key, m.predicted, m.truth);
  }
  for (const auto& k : score.extra) {
    text += fmt::format("  {}: predicted '{}' has no truth\n", k, pairs.predicted.at(k));
  }
  io.Say(text);

  if (s.Has("out")) {
    std::string body;
    if (format == "json") {
      std::string mismatches;
      for (const auto& m : score.mismatches) {
        mismatches += fmt::format("{}{{\"key\":\"{}\",\"predicted\":\"{}\",\"truth\":\"{}\"}}",
                                  mismatches.empty() ? "" : ",", m.key, m.predicted,
                                  m.truth);
      }
      body = fmt::format(
          "{{\"schema\":\"plateflow/sequence/1\",\"accuracy\":{},\"total\":{},"
          "\"correct\":{},\"missing\":{},\"extra\":{},\"mismatches\":[{}]}}\n",
          score.accuracy ? Fixed(*score.accuracy) : "null", score.total,
          score.correct, score.missing.size(), score.extra.size(), mismatches);
    } else {
      body = "key,predicted,truth,match\n";
      for (const auto& [key, want] : pairs.truth) {
        const auto it = pairs.predicted.find(key);
        const std::string got = it == pairs.predicted.end() ? "" : it->second;
        body += fmt::format("{},{},{},{}\n", key, got, want, got == want ? 1 : 0);
      }
    }
    WriteOutput(s.Get("out"), body, io);
  }
  return kExitOk;
}

// ------------------------------------------------------------ wiring

struct Command {
  std::string name;
  std::string help;
  std::vector<std::string> options;  // valued flags
  std::vector<std::string> switches;  // boolean flags
  std::map<std::string, std::string> defaults;
  std::function<int(const Settings&, const Io&)> run;
};

const std::map<std::string, std::string>& OptionHelp() {
  static const std::map<std::string, std::string> help = {
      {"config", "flat key = value settings file (flags override it)"},
      {"save-config", "write the resolved settings to this file"},
      {"out", "output file (written atomically); stdout when omitted"},
      {"format", "output format: json|csv"},
      {"workers", "worker threads (>= 1)"},
      {"images", "directory of input images"},
      {"backend", "inference source: recorded|runtime"},
      {"fixtures", "recorded tensor directory (fallback: $PLATEFLOW_FIXTURES)"},
      {"plate-model", "plate model: .onnx (runtime) or tensor directory (recorded)"},
      {"char-model", "character model: .onnx (runtime) or tensor directory (recorded)"},
      {"role", "which detector to run: plate|character"},
      {"conf", "confidence threshold in [0, 1]"},
      {"nms-iou", "NMS IoU threshold in [0, 1]"},
      {"pad", "plate crop padding ratio in [0, 1]"},
      {"rows", "cluster characters into rows before ordering"},
      {"classes", "class manifest (YAML)"},
      {"predictions", "detection or reading records (JSON Lines)"},
      {"dataset", "dataset root containing <split>/images and <split>/labels"},
      {"split", "dataset split name"},
      {"truth", "plate truth file: '<image> <text> [x1 y1 x2 y2]' per line"},
      {"readings", "reading records (JSON Lines)"},
      {"sweep", "also print precision/recall over a confidence sweep"},
  };
  return help;
}

std::vector<Command> Commands() {
  const std::map<std::string, std::string> inference = {
      {"backend", "recorded"}, {"conf", "0.25"}, {"nms-iou", "0.45"}, {"workers", "1"},
      {"format", "json"}};
  std::vector<Command> cmds;
  {
    Command c{"detect", "run one detector stage over a directory of images"};
    c.options = {"images", "backend", "fixtures", "plate-model", "char-model", "role",
                 "conf", "nms-iou", "classes", "out", "format", "workers"};
    c.defaults = inference;
    c.defaults["role"] = "plate";
    c.run = CmdDetect;
    cmds.push_back(std::move(c));
  }
  {
    Command c{"read", "detect plates and read their characters"};
    c.options = {"images", "backend", "fixtures", "plate-model", "char-model", "conf",
                 "nms-iou", "pad", "classes", "out", "format", "workers"};
    c.switches = {"rows"};
    c.defaults = inference;
    c.defaults["pad"] = "0.05";
    c.defaults["rows"] = "false";
    c.run = CmdRead;
    cmds.push_back(std::move(c));
  }
  {
    Command c{"eval", "score predictions against a dataset split"};
    c.options = {"predictions", "dataset", "split", "classes", "conf", "truth", "out",
                 "format", "workers"};
    c.switches = {"sweep"};
    c.defaults = {{"split", "test"}, {"conf", "0.25"}, {"workers", "1"},
                  {"format", "json"}, {"sweep", "false"}};
    c.run = CmdEval;
    cmds.push_back(std::move(c));
  }
  {
    Command c{"stats", "summarize a dataset split"};
    c.options = {"dataset", "split", "classes", "out", "format", "workers"};
    c.defaults = {{"split", "test"}, {"workers", "1"}, {"format", "json"}};
    c.run = CmdStats;
    cmds.push_back(std::move(c));
  }
  {
    Command c{"seq-eval", "exact-match accuracy of plate strings"};
    c.options = {"readings", "truth", "out", "format"};
    c.defaults = {{"format", "json"}};
    c.run = CmdSeqEval;
    cmds.push_back(std::move(c));
  }
  return cmds;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"plateflow: license plate reading and evaluation"};
  app.name("plateflow");
  app.require_subcommand(1);
  app.set_version_flag("--version", "plateflow 0.1.0");

  const std::vector<Command> commands = Commands();
  std::map<std::string, std::string> flags;
  bool quiet = false;
  std::string config_path;
  std::string save_config;
  std::map<std::string, CLI::App*> subs;
  for (const auto& cmd : commands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    subs[cmd.name] = sub;
    for (const auto& key : cmd.options) {
      sub->add_option_function<std::string>(
          "--" + key, [&flags, key](const std::string& v) { flags[key] = v; },
          OptionHelp().at(key));
    }
    for (const auto& key : cmd.switches) {
      sub->add_flag_function(
          "--" + key, [&flags, key](std::int64_t) { flags[key] = "true"; },
          OptionHelp().at(key));
    }
    sub->add_option("--config", config_path, OptionHelp().at("config"));
    sub->add_option("--save-config", save_config, OptionHelp().at("save-config"));
    sub->add_flag("-q,--quiet", quiet, "suppress console output");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }

  const Command* cmd = nullptr;
  for (const auto& c : commands) {
    if (subs[c.name]->parsed()) cmd = &c;
  }
  Io io{out, err, quiet};
  try {
    std::set<std::string> known(cmd->options.begin(), cmd->options.end());
    known.insert(cmd->switches.begin(), cmd->switches.end());
    Settings settings(known);
    for (const auto& [k, v] : cmd->defaults) settings.SetDefault(k, v);
    if (!config_path.empty()) settings.LoadFile(config_path);
    for (const auto& [k, v] : flags) settings.SetFlag(k, v);
    if (!save_config.empty()) WriteOutput(save_config, settings.Dump(), io);
    return cmd->run(settings, io);
  } catch (const ConfigError& e) {
    err << "plateflow " << cmd->name << ": " << e.what() << "\n";
    return kExitConfig;
  } catch (const Failure& e) {
    err << "plateflow " << cmd->name << ": " << e.what() << "\n";
    return e.exit_code();
  } catch (const Error& e) {
    err << "plateflow " << cmd->name << ": " << ErrorCodeName(e.code()) << ": "
        << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "plateflow " << cmd->name << ": " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace plateflow::cli
