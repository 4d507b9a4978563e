// src/cli.cc

// Copyright 2026  The fairtrial Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "fairtrial/cli.h"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "fairtrial/corpus.h"
#include "fairtrial/error.h"
#include "fairtrial/guidelines.h"
#include "fairtrial/hashing.h"
#include "fairtrial/metrics.h"
#include "fairtrial/report.h"
#include "fairtrial/robustness.h"
#include "fairtrial/scoring.h"
#include "fairtrial/stats.h"
#include "fairtrial/text_io.h"
#include "fairtrial/trialgen.h"
#include "fairtrial/trials.h"

namespace fairtrial::cli {

namespace {

namespace fs = std::filesystem;

std::string HexDigest(uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string Dump(const Json &j) { return j.dump(2) + "\n"; }

// Collects input digests and the resolved configuration for the run
// manifest.
class RunContext {
 public:
  RunContext(std::string command, std::ostream &err)
      : command_(std::move(command)), err_(err),
        start_(std::chrono::steady_clock::now()) {}

  void Input(const std::string &role, const std::string &path) {
    inputs_[role] = {{"path", path}, {"fnv1a64", HexDigest(Fnv1a64(ReadFile(path)))}};
  }

  Json &config() { return config_; }

  Json Manifest() const {
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return {{"command", command_},
            {"tool_version", kToolVersion},
            {"config", config_},
            {"inputs", inputs_},
            {"wall_seconds", seconds}};
  }

  Corpus LoadCorpus(const std::string &meta, const std::string &utts) {
    Input("meta", meta);
    Input("utts", utts);
    BuildWarnings w;
    Corpus corpus = fairtrial::LoadCorpus(meta, utts, &w);
    if (w.dropped_utterances)
      err_ << "warning: dropped " << w.dropped_utterances
           << " utterance(s) of speakers missing from metadata\n";
    if (w.dropped_speakers)
      err_ << "warning: dropped " << w.dropped_speakers << " speaker(s) without utterances\n";
    return corpus;
  }

  std::vector<TrialPair> LoadTrials(const Corpus &corpus, const std::string &path) {
    Input("trials", path);
    std::vector<RawTrial> raw = ReadTrialFile(path);
    return ResolveTrials(corpus, raw);
  }

  // Writes `text` to `out_path` if given, else to stdout; the manifest goes
  // next to the file or, for stdout, to stderr.
  void Emit(const std::optional<std::string> &out_path, const std::string &text,
            std::ostream &out) {
    if (out_path) {
      WriteFileAtomic(*out_path, text);
      WriteFileAtomic(*out_path + ".manifest.json", Dump({{"run", Manifest()}}));
    } else {
      out << text;
      err_ << "manifest: " << Manifest().dump() << "\n";
    }
  }

 private:
  std::string command_;
  std::ostream &err_;
  std::chrono::steady_clock::time_point start_;
  Json config_ = Json::object();
  Json inputs_ = Json::object();
};

struct CorpusFlags {
  std::string meta;
  std::string utts;
};

void AddCorpusFlags(CLI::App *cmd, CorpusFlags &f) {
  cmd->add_option("--meta", f.meta, "Speaker metadata (speaker_id, gender, nationality)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--utts", f.utts, "Utterance list, one <speaker>/<recording>/<file> per line")
      ->required()
      ->check(CLI::ExistingFile);
}

void AddDcfFlags(CLI::App *cmd, DcfParams &dcf, bool &no_normalize) {
  cmd->add_option("--p-target", dcf.p_target, "Target prior for the DCF")->capture_default_str();
  cmd->add_option("--c-miss", dcf.c_miss, "Cost of a miss")->capture_default_str();
  cmd->add_option("--c-fa", dcf.c_fa, "Cost of a false alarm")->capture_default_str();
  cmd->add_flag("--no-normalize", no_normalize, "Report minDCF without normalization");
}

Json DcfJson(const DcfParams &dcf, bool normalize) {
  return {{"p_target", dcf.p_target}, {"c_miss", dcf.c_miss}, {"c_fa", dcf.c_fa},
          {"normalize", normalize}};
}

Json SimJson(const SimConfig &sim) {
  return {{"embedding_dim", sim.embedding_dim}, {"speaker_scale", sim.speaker_scale},
          {"channel_scale", sim.channel_scale}, {"noise_scale", sim.noise_scale},
          {"seed", sim.seed}};
}

void AddSimFlags(CLI::App *cmd, SimConfig &sim) {
  cmd->add_option("--sim-seed", sim.seed, "Seed of the synthetic scorer")->capture_default_str();
  cmd->add_option("--dim", sim.embedding_dim, "Synthetic embedding dimension")->capture_default_str();
  cmd->add_option("--speaker-scale", sim.speaker_scale, "Weight of the speaker latent")
      ->capture_default_str();
  cmd->add_option("--channel-scale", sim.channel_scale, "Weight of the recording direction")
      ->capture_default_str();
  cmd->add_option("--noise-scale", sim.noise_scale, "Weight of the utterance noise")
      ->capture_default_str();
}

}  // namespace

int Dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Inclusive speaker-verification trial generation and evaluation", "fairtrial"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  unsigned threads = 0;
  app.add_option("--threads", threads,
                 "Worker threads (0 = FAIRTRIAL_THREADS or hardware concurrency)")
      ->capture_default_str();

  std::function<int()> run;

  // generate
  CorpusFlags gen_corpus;
  GenerationConfig gen_config;
  std::string gen_out;
  auto *gen = app.add_subcommand("generate", "Generate a graded trial list");
  AddCorpusFlags(gen, gen_corpus);
  gen->add_option("--n", gen_config.n, "Same- and different-speaker pairs per speaker")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_config.seed, "Random seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output trial list")->required();
  gen->callback([&] {
    run = [&] {
      RunContext ctx("generate", err);
      Corpus corpus = ctx.LoadCorpus(gen_corpus.meta, gen_corpus.utts);
      ctx.config() = {{"n", gen_config.n}, {"seed", gen_config.seed},
                      {"group_policy", ToString(gen_config.group_policy)}, {"threads", threads}};
      TrialList list = Generate(corpus, gen_config, threads);
      GradeHistogram h = GradeTrialList(corpus, list.pairs);
      WriteFileAtomic(gen_out, FormatTrials(list.pairs));
      WriteFileAtomic(gen_out + ".manifest.json",
                      Dump({{"generation", GenerationManifest(list, h)}, {"run", ctx.Manifest()}}));
      err << "generated " << list.pairs.size() << " trials for "
          << list.included_speakers.size() << " speaker(s); excluded "
          << list.excluded_speakers.size() << "\n";
      return kExitOk;
    };
  });

  // variants
  CorpusFlags var_corpus;
  GenerationConfig var_config;
  std::vector<uint64_t> var_seeds{3, 6, 8, 12, 20};
  std::string var_out;
  auto *var = app.add_subcommand("variants", "Generate one trial list per seed");
  AddCorpusFlags(var, var_corpus);
  var->add_option("--n", var_config.n, "Pairs per speaker")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  var->add_option("--seeds", var_seeds, "Comma-separated distinct seeds")
      ->delimiter(',')
      ->capture_default_str();
  var->add_option("--out", var_out, "Output directory")->required();
  var->callback([&] {
    run = [&] {
      RunContext ctx("variants", err);
      Corpus corpus = ctx.LoadCorpus(var_corpus.meta, var_corpus.utts);
      ctx.config() = {{"n", var_config.n}, {"seeds", var_seeds},
                      {"group_policy", ToString(var_config.group_policy)}, {"threads", threads}};
      std::vector<TrialList> lists = GenerateVariants(corpus, var_config, var_seeds, threads);
      Json index = Json::array();
      for (const TrialList &list : lists) {
        std::string base = "trials_seed" + std::to_string(list.config.seed);
        std::string path = (fs::path(var_out) / (base + ".txt")).string();
        WriteFileAtomic(path, FormatTrials(list.pairs));
        WriteFileAtomic(path + ".manifest.json",
                        Dump({{"generation", GenerationManifest(list, GradeTrialList(corpus, list.pairs))}}));
        index.push_back({{"seed", list.config.seed}, {"file", base + ".txt"},
                         {"pairs", list.pairs.size()}});
      }
      WriteFileAtomic((fs::path(var_out) / "manifest.json").string(),
                      Dump({{"variants", index}, {"run", ctx.Manifest()}}));
      return kExitOk;
    };
  });

  // grade
  CorpusFlags grade_corpus;
  std::string grade_trials;
  std::optional<std::string> grade_out;
  std::string grade_format = "json";
  auto *grade = app.add_subcommand("grade", "Grade-histogram of a trial list");
  AddCorpusFlags(grade, grade_corpus);
  grade->add_option("--trials", grade_trials, "Trial list")->required()->check(CLI::ExistingFile);
  grade->add_option("--out", grade_out, "Output file (default stdout)");
  grade->add_option("--format", grade_format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();
  grade->callback([&] {
    run = [&] {
      RunContext ctx("grade", err);
      Corpus corpus = ctx.LoadCorpus(grade_corpus.meta, grade_corpus.utts);
      ctx.config() = {{"format", grade_format}};
      std::vector<TrialPair> trials = ctx.LoadTrials(corpus, grade_trials);
      GradeHistogram h = GradeTrialList(corpus, trials);
      ctx.Emit(grade_out, grade_format == "json" ? Dump(ToJson(h)) : HistogramTable(h), out);
      return kExitOk;
    };
  });

  // stats
  CorpusFlags stats_corpus;
  std::optional<std::string> stats_trials;
  std::optional<std::string> stats_out;
  std::string stats_format = "tsv";
  auto *stats = app.add_subcommand("stats", "Per-nationality same-speaker pair statistics");
  AddCorpusFlags(stats, stats_corpus);
  stats->add_option("--trials", stats_trials, "Trial list (default: every same-speaker pair)")
      ->check(CLI::ExistingFile);
  stats->add_option("--out", stats_out, "Output file (default stdout)");
  stats->add_option("--format", stats_format, "tsv or json")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();
  stats->callback([&] {
    run = [&] {
      RunContext ctx("stats", err);
      Corpus corpus = ctx.LoadCorpus(stats_corpus.meta, stats_corpus.utts);
      ctx.config() = {{"format", stats_format}, {"trials", stats_trials.has_value()}};
      std::vector<NationalityStats> rows;
      if (stats_trials) {
        ctx.Input("trials", *stats_trials);
        std::vector<RawTrial> raw = ReadTrialFile(*stats_trials);
        rows = CorpusStats(corpus, std::span<const RawTrial>(raw));
      } else {
        rows = CorpusStats(corpus);
      }
      ctx.Emit(stats_out, stats_format == "json" ? Dump(ToJson(rows)) : StatsTable(rows), out);
      return kExitOk;
    };
  });

  // simulate-scores
  CorpusFlags sim_corpus;
  SimConfig sim_config;
  std::string sim_trials;
  std::string sim_out;
  auto *sim = app.add_subcommand("simulate-scores", "Score a trial list with the synthetic scorer");
  AddCorpusFlags(sim, sim_corpus);
  AddSimFlags(sim, sim_config);
  sim->add_option("--trials", sim_trials, "Trial list")->required()->check(CLI::ExistingFile);
  sim->add_option("--out", sim_out, "Output score file")->required();
  sim->callback([&] {
    run = [&] {
      RunContext ctx("simulate-scores", err);
      Corpus corpus = ctx.LoadCorpus(sim_corpus.meta, sim_corpus.utts);
      ctx.config() = {{"sim", SimJson(sim_config)}, {"threads", threads}};
      std::vector<TrialPair> trials = ctx.LoadTrials(corpus, sim_trials);
      ScoreSet scores = SimulateScores(corpus, trials, sim_config, threads);
      ctx.Emit(sim_out, FormatScores(scores, trials), out);
      return kExitOk;
    };
  });

  // eval
  CorpusFlags eval_corpus;
  std::string eval_trials, eval_scores, eval_out;
  DcfParams eval_dcf;
  bool eval_no_normalize = false;
  std::vector<double> eval_levels{0.01, 0.001};
  auto *ev = app.add_subcommand("eval", "EER, minDCF and DET points per speaker group");
  AddCorpusFlags(ev, eval_corpus);
  AddDcfFlags(ev, eval_dcf, eval_no_normalize);
  ev->add_option("--trials", eval_trials, "Trial list")->required()->check(CLI::ExistingFile);
  ev->add_option("--scores", eval_scores, "Score file <enroll> <test> <score>")
      ->required()
      ->check(CLI::ExistingFile);
  ev->add_option("--fpr-levels", eval_levels, "FPR levels for fnr_at_fpr")
      ->delimiter(',')
      ->capture_default_str();
  ev->add_option("--out", eval_out, "Output directory")->required();
  ev->callback([&] {
    run = [&] {
      RunContext ctx("eval", err);
      Corpus corpus = ctx.LoadCorpus(eval_corpus.meta, eval_corpus.utts);
      bool normalize = !eval_no_normalize;
      ctx.config() = {{"dcf", DcfJson(eval_dcf, normalize)}, {"fpr_levels", eval_levels}};
      std::vector<TrialPair> trials = ctx.LoadTrials(corpus, eval_trials);
      ctx.Input("scores", eval_scores);
      ScoreSet scores = ReadScoreFile(eval_scores);
      for (double level : eval_levels)
        if (!(level > 0.0 && level < 1.0))
          throw Error(ErrorKind::kInvalidArgument, "fpr levels must lie inside (0, 1)");
      Evaluation eval = Evaluate(corpus, trials, scores, eval_dcf, normalize);
      fs::path dir(eval_out);
      WriteFileAtomic((dir / "report.json").string(),
                      Dump(EvaluationJson(eval, eval_dcf, normalize, eval_levels)));
      WriteFileAtomic((dir / "det_points.tsv").string(), DetPointsTable(eval));
      WriteFileAtomic((dir / "manifest.json").string(), Dump({{"run", ctx.Manifest()}}));
      for (const auto &[name, outcome] : eval)
        if (!outcome.result) {
          err << "error[evaluation]: " << outcome.error << "\n";
          return kExitData;
        }
      return kExitOk;
    };
  });

  // robustness
  CorpusFlags rob_corpus;
  std::vector<std::size_t> rob_n{50, 100, 225, 520};
  std::vector<uint64_t> rob_seeds{3, 6, 8, 12, 20};
  std::vector<std::string> rob_groups;
  std::optional<std::string> rob_scores;
  SimConfig rob_sim;
  DcfParams rob_dcf;
  bool rob_no_normalize = false;
  std::string rob_out;
  auto *rob = app.add_subcommand("robustness", "Metric spread across seeded trial-list variants");
  AddCorpusFlags(rob, rob_corpus);
  AddSimFlags(rob, rob_sim);
  AddDcfFlags(rob, rob_dcf, rob_no_normalize);
  rob->add_option("--n", rob_n, "Comma-separated pairs-per-speaker values")
      ->delimiter(',')
      ->capture_default_str();
  rob->add_option("--seeds", rob_seeds, "Comma-separated distinct seeds")
      ->delimiter(',')
      ->capture_default_str();
  rob->add_option("--groups", rob_groups, "Groups to report, e.g. male:usa (default all)")
      ->delimiter(',');
  rob->add_option("--scores", rob_scores,
                  "Pre-computed scores covering every generated pair (default: synthetic scorer)")
      ->check(CLI::ExistingFile);
  rob->add_option("--out", rob_out, "Output directory")->required();
  rob->callback([&] {
    run = [&] {
      RunContext ctx("robustness", err);
      Corpus corpus = ctx.LoadCorpus(rob_corpus.meta, rob_corpus.utts);
      ExperimentGrid grid{rob_n, rob_seeds, rob_groups, rob_dcf, !rob_no_normalize};
      ctx.config() = {{"n", rob_n}, {"seeds", rob_seeds}, {"groups", rob_groups},
                      {"dcf", DcfJson(rob_dcf, grid.normalize)}, {"threads", threads}};
      std::optional<ScoreSet> loaded;
      std::optional<SimulatedScorer> simulated;
      const ScoreProvider *provider;
      if (rob_scores) {
        ctx.Input("scores", *rob_scores);
        loaded = ReadScoreFile(*rob_scores);
        provider = &*loaded;
        ctx.config()["scores"] = "external_file";
      } else {
        simulated.emplace(corpus, rob_sim, threads);
        provider = &*simulated;
        ctx.config()["scores"] = "simulated";
        ctx.config()["sim"] = SimJson(rob_sim);
      }
      GridResults results = RunGrid(corpus, grid, *provider, threads);
      fs::path dir(rob_out);
      WriteFileAtomic((dir / "grid.json").string(), Dump(GridJson(results)));
      WriteFileAtomic((dir / "grid.tsv").string(), GridTable(results));
      Json spread_json = Json::array();
      std::string spread_tsv;
      for (Metric m : {Metric::kMinDcf, Metric::kEer}) {
        std::vector<SpreadStats> s = Spread(results, m);
        spread_json.push_back(SpreadJson(s, m));
        std::string table = SpreadTable(s, m);
        spread_tsv += spread_tsv.empty() ? table : table.substr(table.find('\n') + 1);
      }
      WriteFileAtomic((dir / "spread.json").string(), Dump(spread_json));
      WriteFileAtomic((dir / "spread.tsv").string(), spread_tsv);
      std::string bands = "group\tn\tfpr\tfnr_min\tfnr_max\n";
      if (rob_seeds.size() >= 2) {
        for (const SpreadStats &s : Spread(results, Metric::kMinDcf)) {
          if (s.samples.size() < 2) continue;
          for (const BandPoint &b : DetBand(results, s.group, s.n))
            bands += s.group + '\t' + std::to_string(s.n) + '\t' + FormatFixed(b.fpr, 6) + '\t' +
                     FormatFixed(b.fnr_min, 6) + '\t' + FormatFixed(b.fnr_max, 6) + '\n';
        }
      }
      WriteFileAtomic((dir / "det_bands.tsv").string(), bands);
      WriteFileAtomic((dir / "manifest.json").string(), Dump({{"run", ctx.Manifest()}}));
      if (!results.failed.empty())
        err << "warning: " << results.failed.size() << " grid cell(s) failed; see grid.json\n";
      return kExitOk;
    };
  });

  // validate
  CorpusFlags val_corpus;
  std::string val_trials;
  std::size_t val_min_diff = kMinDifferentPairsPerSpeaker;
  std::optional<std::string> val_out;
  auto *val = app.add_subcommand("validate", "Check a trial list against the design checklist");
  AddCorpusFlags(val, val_corpus);
  val->add_option("--trials", val_trials, "Trial list")->required()->check(CLI::ExistingFile);
  val->add_option("--min-diff-pairs", val_min_diff,
                  "Minimum different-speaker pairs per speaker")
      ->capture_default_str();
  val->add_option("--out", val_out, "Output report (default stdout)");
  val->callback([&] {
    run = [&] {
      RunContext ctx("validate", err);
      Corpus corpus = ctx.LoadCorpus(val_corpus.meta, val_corpus.utts);
      ctx.config() = {{"min_diff_pairs", val_min_diff}};
      std::vector<TrialPair> trials = ctx.LoadTrials(corpus, val_trials);
      GuidelineReport report = ValidateGuidelines(corpus, trials, val_min_diff);
      ctx.Emit(val_out, Dump(ToJson(report)), out);
      if (const GuidelineCheck *f = report.first_failure()) {
        err << "error[" << ToString(ErrorKind::kGuidelineViolation) << "]: guideline " << f->id
            << " (" << f->title << ") failed: " << f->detail << "\n";
        return kExitData;
      }
      return kExitOk;
    };
  });

  std::vector<const char *> argv;
  argv.push_back("fairtrial");
  for (const std::string &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    err << app.help();
    return kExitUsage;
  }

  try {
    return run();
  } catch (const Error &e) {
    err << "error[" << ToString(e.kind()) << "]: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception &e) {
    err << "error[io]: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace fairtrial::cli
