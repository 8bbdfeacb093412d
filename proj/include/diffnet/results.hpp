#pragma once

#include <map>
#include <string>
#include <vector>

#include "diffnet/experiments.hpp"
#include "diffnet/model.hpp"

namespace diffnet {

inline constexpr const char* kToolVersion = "0.1.0";

/// Provenance record written next to every set of outputs before they are
/// produced. Two runs with byte-identical manifests produce identical outputs.
struct RunManifest {
  std::string command;
  std::string config_json;  // JSON object text; snapshot of result-affecting options
  std::map<std::string, std::string> input_digests;  // path -> sha256
  std::uint64_t seed = 0;
  std::string tool_version = kToolVersion;
  std::vector<std::string> outputs;

  std::string to_json() const;
};

/// Digests every path in `inputs` (files directly, directories file by file).
std::map<std::string, std::string> digest_inputs(const std::vector<std::string>& inputs);

void write_manifest(const std::string& path, const RunManifest& m);

enum class ResumeState { Fresh, UpToDate, Stale };

/// Compares an existing manifest at `path` with `m`. UpToDate requires
/// byte-identical content and every listed output present.
ResumeState check_resume(const std::string& path, const RunManifest& m);

/// Writes `<dir>/<cell>/{config.json, folds.csv, summary.csv, report.txt}`.
void write_report_cell(const std::string& dir, const std::string& cell, const EvaluationReport& r,
                       const std::string& config_json);

/// Rewrites `<dir>/index.csv` from every cell's summary.csv, sorted by cell name.
void rebuild_index(const std::string& dir);

void write_chi2_table(std::ostream& out, const std::vector<FeatureScore>& ranking);
void write_ks_table(std::ostream& out, const std::vector<KsFeature>& ranking);
/// `lifetime,seconds,tweets,auroc_mean,auroc_std,precision_mean,...`
void write_temporal_series(std::ostream& out, const std::vector<TemporalPoint>& series);

}  // namespace diffnet
