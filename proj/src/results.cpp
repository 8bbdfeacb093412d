#include "diffnet/results.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "diffnet/error.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace diffnet {

namespace {

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot write " + p.string());
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return {};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_summary_pair(std::ostream& out, const MetricSummary& s) {
  out << ',' << format_double(s.mean) << ',' << format_double(s.stddev);
}

}  // namespace

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["config"] = nlohmann::ordered_json::parse(config_json.empty() ? "{}" : config_json);
  j["input_digests"] = input_digests;
  j["seed"] = seed;
  j["tool_version"] = tool_version;
  j["outputs"] = outputs;
  return j.dump(2) + "\n";
}

std::map<std::string, std::string> digest_inputs(const std::vector<std::string>& inputs) {
  std::map<std::string, std::string> out;
  for (const auto& in : inputs) {
    if (fs::is_directory(in)) {
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(in)) {
        if (e.is_regular_file() && e.path().filename() != "manifest.json") files.push_back(e.path());
      }
      std::sort(files.begin(), files.end());
      for (const auto& f : files) out[f.generic_string()] = sha256_file(f.string());
    } else {
      out[in] = sha256_file(in);
    }
  }
  return out;
}

void write_manifest(const std::string& path, const RunManifest& m) {
  const auto p = fs::path(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  auto out = open_out(p);
  out << m.to_json();
}

ResumeState check_resume(const std::string& path, const RunManifest& m) {
  if (!fs::exists(path)) return ResumeState::Fresh;
  if (slurp(path) != m.to_json()) return ResumeState::Stale;
  for (const auto& o : m.outputs) {
    if (!fs::exists(o)) return ResumeState::Fresh;
  }
  return ResumeState::UpToDate;
}

void write_report_cell(const std::string& dir, const std::string& cell, const EvaluationReport& r,
                       const std::string& config_json) {
  const auto base = fs::path(dir) / cell;
  fs::create_directories(base);
  {
    auto out = open_out(base / "config.json");
    out << nlohmann::ordered_json::parse(config_json.empty() ? "{}" : config_json).dump(2) << '\n';
  }
  {
    auto out = open_out(base / "folds.csv");
    write_report_folds(out, r);
  }
  {
    auto out = open_out(base / "summary.csv");
    write_report_summary(out, r);
  }
  {
    auto out = open_out(base / "report.txt");
    write_report_text(out, r);
  }
}

void rebuild_index(const std::string& dir) {
  std::vector<std::string> cells;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_directory() && fs::exists(e.path() / "summary.csv")) {
      cells.push_back(e.path().filename().string());
    }
  }
  std::sort(cells.begin(), cells.end());
  auto out = open_out(fs::path(dir) / "index.csv");
  out << "cell,auroc_mean,auroc_std,precision_mean,precision_std,recall_mean,recall_std,f1_mean,f1_std\n";
  for (const auto& cell : cells) {
    std::istringstream in(slurp(fs::path(dir) / cell / "summary.csv"));
    std::string line;
    std::getline(in, line);  // header
    out << cell;
    while (std::getline(in, line)) {
      const auto f = split_fields(line);
      if (f.size() == 3) out << ',' << f[1] << ',' << f[2];
    }
    out << '\n';
  }
}

void write_chi2_table(std::ostream& out, const std::vector<FeatureScore>& ranking) {
  out << "rank,feature,chi2_mean,chi2_std\n";
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    out << i + 1 << ',' << ranking[i].name << ',' << format_double(ranking[i].mean) << ','
        << format_double(ranking[i].stddev) << '\n';
  }
}

void write_ks_table(std::ostream& out, const std::vector<KsFeature>& ranking) {
  out << "rank,feature,ks_statistic,p_value,rejected\n";
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    const auto& r = ranking[i].result;
    out << i + 1 << ',' << ranking[i].name << ',' << format_double(r.statistic) << ','
        << format_double(r.p_value) << ',' << (r.rejected ? "yes" : "no") << '\n';
  }
}

void write_temporal_series(std::ostream& out, const std::vector<TemporalPoint>& series) {
  out << "lifetime,seconds,tweets,auroc_mean,auroc_std,precision_mean,precision_std,"
         "recall_mean,recall_std,f1_mean,f1_std\n";
  for (const auto& p : series) {
    out << format_duration(p.lifetime) << ',' << p.lifetime << ',' << p.tweets_kept;
    write_summary_pair(out, p.report.auroc);
    write_summary_pair(out, p.report.precision);
    write_summary_pair(out, p.report.recall);
    write_summary_pair(out, p.report.f1);
    out << '\n';
  }
}

}  // namespace diffnet
