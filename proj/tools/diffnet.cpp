// diffnet: command-line front end for the diffusion-network pipeline.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "diffnet/error.hpp"
#include "diffnet/experiments.hpp"
#include "diffnet/features.hpp"
#include "diffnet/ingest.hpp"
#include "diffnet/netbuild.hpp"
#include "diffnet/results.hpp"
#include "diffnet/synth.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace diffnet {
namespace {

struct Globals {
  int jobs = 1;
};

struct CvFlags {
  int folds = 10;
  double test_fraction = 0.2;
  std::uint64_t seed = 0;
  double C = 1.0;
  std::string standardize = "train";
  std::string size_class = "all";
  std::string out = "results";
  bool resume = false;

  CvConfig config(int jobs) const {
    CvConfig c;
    c.folds = folds;
    c.test_fraction = test_fraction;
    c.seed = seed;
    c.C = C;
    c.scope = standardize == "all" ? StandardizeScope::AllSamples : StandardizeScope::TrainOnly;
    c.jobs = jobs;
    return c;
  }

  ordered_json snapshot() const {
    ordered_json j;
    j["folds"] = folds;
    j["test_fraction"] = test_fraction;
    j["seed"] = seed;
    j["C"] = C;
    j["standardize"] = standardize;
    j["size_class"] = size_class;
    return j;
  }
};

void add_cv_flags(CLI::App* app, CvFlags& f, bool with_size = true) {
  app->add_option("--folds", f.folds, "Shuffle-split folds")->check(CLI::PositiveNumber);
  app->add_option("--test-fraction", f.test_fraction, "Test share per fold")
      ->check(CLI::Range(0.0, 1.0));
  app->add_option("--seed", f.seed, "Master seed");
  app->add_option("--C", f.C, "Inverse L2 strength")->check(CLI::PositiveNumber);
  app->add_option("--standardize", f.standardize, "Fit standardizer on train portion or all samples")
      ->check(CLI::IsMember({"train", "all"}));
  if (with_size) {
    app->add_option("--size-class", f.size_class, "0-100, 100-1000, 1000-inf or all")
        ->check(CLI::IsMember({"0-100", "100-1000", "1000-inf", "all"}));
  }
  app->add_option("--out", f.out, "Results directory");
  app->add_flag("--resume", f.resume, "Skip cells whose manifest and outputs are up to date");
}

std::vector<std::string> cell_outputs(const std::string& dir, const std::string& cell,
                                      std::initializer_list<const char*> files) {
  std::vector<std::string> out;
  for (const char* f : files) out.push_back((fs::path(dir) / cell / f).generic_string());
  return out;
}

// Writes the manifest, or returns false when --resume finds the cell current.
bool begin_cell(const std::string& manifest_path, const RunManifest& m, bool resume) {
  if (resume) {
    switch (check_resume(manifest_path, m)) {
      case ResumeState::UpToDate:
        std::cerr << "up to date: " << manifest_path << '\n';
        return false;
      case ResumeState::Stale:
        fail(ErrorCode::Manifest, "manifest " + manifest_path +
                                      " does not match current inputs or options; rerun without --resume");
      case ResumeState::Fresh:
        break;
    }
  }
  write_manifest(manifest_path, m);
  return true;
}

void print_file(const fs::path& p) {
  std::ifstream in(p);
  std::cout << in.rdbuf();
}

template <typename Compute>
void run_report_cell(const std::string& command, const std::string& cell, const CvFlags& flags,
                     ordered_json config, const std::vector<std::string>& inputs, Compute compute) {
  RunManifest m;
  m.command = command;
  m.config_json = config.dump();
  m.input_digests = digest_inputs(inputs);
  m.seed = flags.seed;
  m.outputs = cell_outputs(flags.out, cell, {"config.json", "folds.csv", "summary.csv", "report.txt"});
  const auto manifest_path = (fs::path(flags.out) / cell / "manifest.json").string();
  if (begin_cell(manifest_path, m, flags.resume)) {
    EvaluationReport r = compute();
    r.name = cell;
    write_report_cell(flags.out, cell, r, m.config_json);
    rebuild_index(flags.out);
  }
  print_file(fs::path(flags.out) / cell / "report.txt");
}

std::vector<LabeledSample> load_samples(const std::string& features_path, SizeClass size) {
  return filter_size(to_samples(read_features_file(features_path)), size);
}

std::string cell_suffix(const std::string& size_class) {
  return size_class == "all" ? "all" : size_class;
}

// ---------------------------------------------------------------------------

struct IngestFlags {
  std::string tweets, labels, out;
  std::optional<Seconds> start;
  std::string window = "14d";
  std::size_t min_tweets = 50;
};

void cmd_ingest(const IngestFlags& f) {
  ordered_json cfg;
  cfg["tweets"] = f.tweets;
  cfg["labels"] = f.labels;
  cfg["start"] = f.start ? ordered_json(*f.start) : ordered_json(nullptr);
  cfg["window"] = f.window;
  cfg["min_tweets"] = f.min_tweets;
  RunManifest m;
  m.command = "ingest";
  m.config_json = cfg.dump();
  m.input_digests = digest_inputs({f.tweets, f.labels});
  m.outputs = {(fs::path(f.out) / "tweets.jsonl").generic_string(),
               (fs::path(f.out) / "labels.csv").generic_string()};
  write_manifest((fs::path(f.out) / "manifest.json").string(), m);

  const Seconds window = parse_duration(f.window);
  auto parsed = read_records_file(f.tweets);
  const auto labels = read_labels_file(f.labels);
  Seconds start = f.start.value_or(0);
  if (!f.start) {
    start = parsed.records.empty() ? 1 : parsed.records.front().timestamp;
    for (const auto& r : parsed.records) start = std::min(start, r.timestamp);
  }
  const auto total = parsed.records.size();
  GroupStats gs;
  auto cascades = group_by_article(std::move(parsed.records), labels, &gs);
  const auto grouped = cascades.size();
  cascades = apply_censoring(std::move(cascades), start, window);
  const auto censored = cascades.size();
  cascades = filter_min_tweets(std::move(cascades), f.min_tweets);
  write_cascades_dir(f.out, cascades);
  std::cout << "records " << total << " malformed " << parsed.stats.malformed << " duplicates "
            << parsed.stats.duplicates << " unlabeled " << gs.unlabeled_tweets << " articles "
            << grouped << " after_censoring " << censored << " kept " << cascades.size() << '\n';
}

struct FeaturizeFlags {
  std::string cascades, out, networks;
};

void cmd_featurize(const FeaturizeFlags& f, const Globals& g) {
  ordered_json cfg;
  cfg["cascades"] = f.cascades;
  cfg["networks"] = f.networks;
  RunManifest m;
  m.command = "featurize";
  m.config_json = cfg.dump();
  m.input_digests = digest_inputs({f.cascades});
  m.outputs = {f.out};
  if (!f.networks.empty()) m.outputs.push_back(f.networks);
  write_manifest(f.out + ".manifest.json", m);

  const auto cascades = read_cascades_dir(f.cascades);
  const auto rows = featurize_all(cascades, g.jobs);
  std::ofstream out(f.out, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot write " + f.out);
  write_features(out, rows);
  if (!f.networks.empty()) {
    std::vector<MultiLayerNetwork> nets(cascades.size());
    parallel_for(cascades.size(), g.jobs, [&](std::size_t i) { nets[i] = build_network(cascades[i]); });
    std::ofstream nout(f.networks, std::ios::binary);
    if (!nout) fail(ErrorCode::Io, "cannot write " + f.networks);
    write_networks(nout, nets);
  }
  std::cout << "articles " << rows.size() << " columns " << 5 + kFeatureCount << '\n';
}

void cmd_evaluate(const std::string& features, const CvFlags& f, const Globals& g) {
  auto cfg = f.snapshot();
  cfg["features"] = features;
  run_report_cell("evaluate", "evaluate_" + cell_suffix(f.size_class), f, cfg, {features}, [&] {
    auto r = stratified_shuffle_cv(load_samples(features, parse_size_class(f.size_class)), f.config(g.jobs));
    r.feature_names = feature_names();
    return r;
  });
}

void cmd_ablate(const std::string& features, const std::string& layer, const CvFlags& f,
                const Globals& g) {
  auto cfg = f.snapshot();
  cfg["features"] = features;
  cfg["layer"] = layer;
  run_report_cell("ablate", "ablate_" + layer + "_" + cell_suffix(f.size_class), f, cfg, {features}, [&] {
    return layer_ablation(load_samples(features, parse_size_class(f.size_class)), parse_layer(layer),
                          f.config(g.jobs));
  });
}

void cmd_baseline(const std::string& cascades_dir, const CvFlags& f, const Globals& g) {
  auto cfg = f.snapshot();
  cfg["cascades"] = cascades_dir;
  run_report_cell("baseline-single-layer", "baseline_single_" + cell_suffix(f.size_class), f, cfg,
                  {cascades_dir}, [&] {
                    const auto samples = filter_size(
                        single_layer_samples(read_cascades_dir(cascades_dir), g.jobs),
                        parse_size_class(f.size_class));
                    return single_layer_baseline(samples, f.config(g.jobs));
                  });
}

void cmd_bias(const std::string& features, const std::string& bias,
              const std::vector<std::string>& excluded, const CvFlags& f, const Globals& g) {
  auto cfg = f.snapshot();
  cfg["features"] = features;
  cfg["train_bias"] = bias;
  cfg["exclude_sources"] = excluded;
  std::string cell = "bias_" + bias;
  for (const auto& s : excluded) cell += "_excl-" + s;
  run_report_cell("bias-eval", cell, f, cfg, {features}, [&] {
    return bias_restricted_eval(load_samples(features, parse_size_class(f.size_class)),
                                parse_bias(bias), excluded, f.config(g.jobs));
  });
}

struct RankFlags {
  std::string features, method = "chi2", layer;
  std::size_t top = 5;
};

void cmd_rank(const RankFlags& r, const CvFlags& f, const Globals& g) {
  auto cfg = f.snapshot();
  cfg["features"] = r.features;
  cfg["method"] = r.method;
  cfg["layer"] = r.layer;
  const std::string cell = "rank_" + r.method + (r.layer.empty() ? "" : "_" + r.layer);
  RunManifest m;
  m.command = "rank-features";
  m.config_json = cfg.dump();
  m.input_digests = digest_inputs({r.features});
  m.seed = f.seed;
  m.outputs = cell_outputs(f.out, cell, {"ranking.csv"});
  const auto manifest_path = (fs::path(f.out) / cell / "manifest.json").string();
  if (begin_cell(manifest_path, m, f.resume)) {
    auto samples = load_samples(r.features, parse_size_class(f.size_class));
    auto names = feature_names();
    if (!r.layer.empty()) {
      const auto cols = layer_columns(parse_layer(r.layer));
      samples = select_columns(samples, cols);
      std::vector<std::string> picked;
      for (auto c : cols) picked.push_back(names[c]);
      names = picked;
    }
    std::ofstream out(m.outputs.front(), std::ios::binary);
    if (!out) fail(ErrorCode::Io, "cannot write " + m.outputs.front());
    if (r.method == "chi2") {
      write_chi2_table(out, chi2_ranking(samples, names, f.config(g.jobs)));
    } else {
      write_ks_table(out, ks_ranking(samples, names));
    }
  }
  std::ifstream in(m.outputs.front());
  std::string line;
  for (std::size_t i = 0; i <= r.top && std::getline(in, line); ++i) std::cout << line << '\n';
}

void cmd_temporal(const std::string& cascades_dir, const std::string& lifetimes_csv,
                  const CvFlags& f, const Globals& g) {
  std::vector<Seconds> lifetimes;
  for (const auto& tok : split_fields(lifetimes_csv)) lifetimes.push_back(parse_duration(tok));
  auto cfg = f.snapshot();
  cfg["cascades"] = cascades_dir;
  cfg["lifetimes"] = lifetimes_csv;
  RunManifest m;
  m.command = "temporal";
  m.config_json = cfg.dump();
  m.input_digests = digest_inputs({cascades_dir});
  m.seed = f.seed;
  m.outputs = cell_outputs(f.out, "temporal", {"series.csv"});
  const auto manifest_path = (fs::path(f.out) / "temporal" / "manifest.json").string();
  if (begin_cell(manifest_path, m, f.resume)) {
    auto cascades = read_cascades_dir(cascades_dir);
    if (f.size_class != "all") {
      // Size classes refer to the full (untruncated) network.
      const auto size = parse_size_class(f.size_class);
      std::erase_if(cascades, [&](const ArticleCascade& c) {
        return !in_size_class(aggregate_user_count(build_network(c)), size);
      });
    }
    const auto series = temporal_sweep(cascades, lifetimes, f.config(g.jobs), g.jobs);
    for (const auto& p : series) write_report_cell(f.out, "temporal/" + p.report.name, p.report, m.config_json);
    std::ofstream out(m.outputs.front(), std::ios::binary);
    if (!out) fail(ErrorCode::Io, "cannot write " + m.outputs.front());
    write_temporal_series(out, series);
  }
  print_file(m.outputs.front());
}

struct SynthFlags {
  std::string config, out;
  std::optional<std::uint64_t> seed;
  bool print_config = false;
};

void cmd_synth(const SynthFlags& f, const Globals& g) {
  GeneratorConfig cfg = f.config.empty() ? default_generator_config() : read_generator_config(f.config);
  if (f.seed) cfg.seed = *f.seed;
  if (f.print_config) {
    std::cout << to_json(cfg);
    return;
  }
  if (f.out.empty()) fail(ErrorCode::InvalidArgument, "synth needs --out");
  RunManifest m;
  m.command = "synth";
  m.config_json = to_json(cfg);
  if (!f.config.empty()) m.input_digests = digest_inputs({f.config});
  m.seed = cfg.seed;
  m.outputs = {(fs::path(f.out) / "tweets.jsonl").generic_string(),
               (fs::path(f.out) / "labels.csv").generic_string()};
  write_manifest((fs::path(f.out) / "manifest.json").string(), m);
  const auto corpus = generate_corpus(cfg, g.jobs);
  write_corpus(f.out, corpus);
  std::cout << "articles " << corpus.labels.size() << " tweets " << corpus.tweets.size() << '\n';
}

// Full experiment grid from a cascades directory; each cell is an
// independent job.
void cmd_grid(const std::string& cascades_dir, const CvFlags& f, const Globals& g) {
  auto cfg = f.snapshot();
  cfg["cascades"] = cascades_dir;
  RunManifest m;
  m.command = "grid";
  m.config_json = cfg.dump();
  m.input_digests = digest_inputs({cascades_dir});
  m.seed = f.seed;
  m.outputs = {(fs::path(f.out) / "index.csv").generic_string()};
  if (!begin_cell((fs::path(f.out) / "manifest.json").string(), m, f.resume)) {
    print_file(m.outputs.front());
    return;
  }

  const auto cascades = read_cascades_dir(cascades_dir);
  const auto samples = to_samples(featurize_all(cascades, g.jobs));
  const auto single = single_layer_samples(cascades, g.jobs);
  const CvConfig cv = f.config(1);

  std::vector<std::pair<std::string, std::function<EvaluationReport()>>> cells;
  for (auto size : {SizeClass::Small, SizeClass::Medium, SizeClass::Large, SizeClass::All}) {
    const std::string tag(to_string(size));
    cells.emplace_back("evaluate_" + tag, [&, size] {
      auto r = stratified_shuffle_cv(filter_size(samples, size), cv);
      r.feature_names = feature_names();
      return r;
    });
    cells.emplace_back("baseline_single_" + tag,
                       [&, size] { return single_layer_baseline(filter_size(single, size), cv); });
    for (auto layer : kLayerOrder) {
      cells.emplace_back("ablate_" + std::string(layer_tag(layer)) + "_" + tag,
                         [&, size, layer] { return layer_ablation(filter_size(samples, size), layer, cv); });
    }
  }
  for (auto bias : {Bias::Left, Bias::Right}) {
    cells.emplace_back("bias_" + std::string(to_string(bias)),
                       [&, bias] { return bias_restricted_eval(samples, bias, {}, cv); });
  }

  std::vector<std::string> skipped(cells.size());
  parallel_for(cells.size(), g.jobs, [&](std::size_t i) {
    try {
      auto r = cells[i].second();
      r.name = cells[i].first;
      write_report_cell(f.out, cells[i].first, r, m.config_json);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidArgument) throw;
      skipped[i] = e.what();
    }
  });

  {
    std::ofstream out(fs::path(f.out) / "skipped.csv", std::ios::binary);
    out << "cell,reason\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!skipped[i].empty()) out << cells[i].first << ',' << skipped[i] << '\n';
    }
  }
  const auto names = feature_names();
  {
    fs::create_directories(fs::path(f.out) / "rank_chi2");
    std::ofstream out(fs::path(f.out) / "rank_chi2" / "ranking.csv", std::ios::binary);
    write_chi2_table(out, chi2_ranking(samples, names, f.config(g.jobs)));
  }
  {
    const auto cols = layer_columns(LayerKind::Mention);
    std::vector<std::string> picked;
    for (auto c : cols) picked.push_back(names[c]);
    fs::create_directories(fs::path(f.out) / "rank_chi2_M");
    std::ofstream out(fs::path(f.out) / "rank_chi2_M" / "ranking.csv", std::ios::binary);
    write_chi2_table(out, chi2_ranking(select_columns(samples, cols), picked, f.config(g.jobs)));
  }
  {
    fs::create_directories(fs::path(f.out) / "rank_ks");
    std::ofstream out(fs::path(f.out) / "rank_ks" / "ranking.csv", std::ios::binary);
    write_ks_table(out, ks_ranking(samples, names));
  }
  {
    const auto series = temporal_sweep(cascades, kDefaultLifetimes, f.config(g.jobs), g.jobs);
    for (const auto& p : series) write_report_cell(f.out, "temporal/" + p.report.name, p.report, m.config_json);
    std::ofstream out(fs::path(f.out) / "temporal" / "series.csv", std::ios::binary);
    write_temporal_series(out, series);
  }
  rebuild_index(f.out);
  print_file(m.outputs.front());
}

int run(int argc, char** argv) {
  CLI::App app{"Multi-layer diffusion network features and disinformation classification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  Globals g;
  app.add_option("--jobs", g.jobs, "Worker threads; output is identical for any value")
      ->envname("DIFFNET_JOBS")
      ->check(CLI::PositiveNumber);

  IngestFlags ingest;
  auto* c_ingest = app.add_subcommand("ingest", "Parse, censor and filter raw tweets into cascades");
  c_ingest->add_option("--tweets", ingest.tweets, "Line-delimited JSON tweets")->required()->check(CLI::ExistingFile);
  c_ingest->add_option("--labels", ingest.labels, "article_id,label,source,bias table")->required()->check(CLI::ExistingFile);
  c_ingest->add_option("--start", ingest.start, "Collection start, epoch seconds (default: earliest tweet)");
  c_ingest->add_option("--window", ingest.window, "Collection window, e.g. 14d");
  c_ingest->add_option("--min-tweets", ingest.min_tweets, "Drop articles with fewer tweets")->check(CLI::PositiveNumber);
  c_ingest->add_option("--out", ingest.out, "Cascades directory")->required();

  FeaturizeFlags feat;
  auto* c_feat = app.add_subcommand("featurize", "Build networks and write the 38-feature table");
  c_feat->add_option("--cascades", feat.cascades, "Cascades directory")->required()->check(CLI::ExistingDirectory);
  c_feat->add_option("--out", feat.out, "Features table")->required();
  c_feat->add_option("--networks", feat.networks, "Also write the serialized networks here");

  std::string features;
  CvFlags eval_flags;
  auto* c_eval = app.add_subcommand("evaluate", "Stratified shuffle-split CV on the 38 features");
  c_eval->add_option("--features", features, "Features table")->required()->check(CLI::ExistingFile);
  add_cv_flags(c_eval, eval_flags);

  std::string layer;
  CvFlags ablate_flags;
  auto* c_ablate = app.add_subcommand("ablate", "CV on a single layer's nine features");
  c_ablate->add_option("--features", features, "Features table")->required()->check(CLI::ExistingFile);
  c_ablate->add_option("--layer", layer, "Q, RT, M or R")->required()->check(CLI::IsMember({"Q", "RT", "M", "R"}));
  add_cv_flags(c_ablate, ablate_flags);

  std::string cascades_dir;
  CvFlags base_flags;
  auto* c_base = app.add_subcommand("baseline-single-layer", "CV on the aggregated single-layer network");
  c_base->add_option("--cascades", cascades_dir, "Cascades directory")->required()->check(CLI::ExistingDirectory);
  add_cv_flags(c_base, base_flags);

  std::string train_bias;
  std::vector<std::string> excluded;
  CvFlags bias_flags;
  auto* c_bias = app.add_subcommand("bias-eval", "Train on one political bias, test on the rest");
  c_bias->add_option("--features", features, "Features table")->required()->check(CLI::ExistingFile);
  c_bias->add_option("--train-bias", train_bias, "left or right")->required()->check(CLI::IsMember({"left", "right"}));
  c_bias->add_option("--exclude-source", excluded, "Drop a source host; repeatable");
  add_cv_flags(c_bias, bias_flags);

  RankFlags rank;
  CvFlags rank_flags;
  auto* c_rank = app.add_subcommand("rank-features", "Chi-square or KS feature ranking");
  c_rank->add_option("--features", rank.features, "Features table")->required()->check(CLI::ExistingFile);
  c_rank->add_option("--method", rank.method, "chi2 or ks")->check(CLI::IsMember({"chi2", "ks"}));
  c_rank->add_option("--top", rank.top, "Rows to print");
  c_rank->add_option("--layer", rank.layer, "Restrict to one layer")->check(CLI::IsMember({"Q", "RT", "M", "R"}));
  add_cv_flags(c_rank, rank_flags);

  std::string lifetimes = "1h,6h,12h,1d,2d,3d,7d";
  CvFlags temporal_flags;
  auto* c_temp = app.add_subcommand("temporal", "CV on networks truncated to each lifetime");
  c_temp->add_option("--cascades", cascades_dir, "Cascades directory")->required()->check(CLI::ExistingDirectory);
  c_temp->add_option("--lifetimes", lifetimes, "Comma-separated durations");
  add_cv_flags(c_temp, temporal_flags);

  SynthFlags synth;
  auto* c_synth = app.add_subcommand("synth", "Generate a labelled synthetic tweet corpus");
  c_synth->add_option("--config", synth.config, "Generator config JSON (default: built-in)")->check(CLI::ExistingFile);
  c_synth->add_option("--out", synth.out, "Output directory");
  c_synth->add_option("--seed", synth.seed, "Override the config seed");
  c_synth->add_flag("--print-config", synth.print_config, "Print the effective config and exit");

  CvFlags grid_flags;
  auto* c_grid = app.add_subcommand("grid", "Run every experiment cell on a cascades directory");
  c_grid->add_option("--cascades", cascades_dir, "Cascades directory")->required()->check(CLI::ExistingDirectory);
  add_cv_flags(c_grid, grid_flags, /*with_size=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    std::cerr << "error: E_USAGE: " << msg << '\n';
    return 2;
  }

  if (*c_ingest) cmd_ingest(ingest);
  else if (*c_feat) cmd_featurize(feat, g);
  else if (*c_eval) cmd_evaluate(features, eval_flags, g);
  else if (*c_ablate) cmd_ablate(features, layer, ablate_flags, g);
  else if (*c_base) cmd_baseline(cascades_dir, base_flags, g);
  else if (*c_bias) cmd_bias(features, train_bias, excluded, bias_flags, g);
  else if (*c_rank) cmd_rank(rank, rank_flags, g);
  else if (*c_temp) cmd_temporal(cascades_dir, lifetimes, temporal_flags, g);
  else if (*c_synth) cmd_synth(synth, g);
  else if (*c_grid) cmd_grid(cascades_dir, grid_flags, g);
  std::cout.flush();
  return std::cout ? 0 : 3;
}

}  // namespace
}  // namespace diffnet

int main(int argc, char** argv) {
  try {
    return diffnet::run(argc, argv);
  } catch (const diffnet::Error& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    std::cerr << "error: " << diffnet::error_code_name(e.code()) << ": " << msg << '\n';
    return diffnet::error_exit_status(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: E_IO: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: E_INTERNAL: " << e.what() << '\n';
    return 1;
  }
}
