#include "diffnet/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "diffnet/error.hpp"
#include "diffnet/rng.hpp"

namespace diffnet {

std::vector<LabeledSample> to_samples(const std::vector<FeatureRow>& rows) {
  std::vector<LabeledSample> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    out.push_back({r.article_id, std::vector<double>(r.values.begin(), r.values.end()),
                   r.label.label, r.label.source, r.label.bias, r.n_users});
  }
  return out;
}

std::vector<LabeledSample> select_columns(const std::vector<LabeledSample>& samples,
                                          const std::vector<std::size_t>& columns) {
  std::vector<LabeledSample> out = samples;
  for (auto& s : out) {
    std::vector<double> x;
    x.reserve(columns.size());
    for (auto c : columns) {
      if (c >= s.features.size()) fail(ErrorCode::InvalidArgument, "column out of range");
      x.push_back(s.features[c]);
    }
    s.features = std::move(x);
  }
  return out;
}

std::vector<LabeledSample> filter_size(const std::vector<LabeledSample>& samples, SizeClass s) {
  std::vector<LabeledSample> out;
  for (const auto& x : samples) {
    if (in_size_class(x.n_users, s)) out.push_back(x);
  }
  return out;
}

std::map<SizeClass, std::vector<LabeledSample>> partition_by_size(
    const std::vector<LabeledSample>& samples) {
  std::map<SizeClass, std::vector<LabeledSample>> bins;
  for (auto c : {SizeClass::Small, SizeClass::Medium, SizeClass::Large}) bins[c];
  for (const auto& s : samples) bins[s.size_class()].push_back(s);
  bins[SizeClass::All] = samples;
  return bins;
}

std::vector<LabeledSample> exclude_sources(const std::vector<LabeledSample>& samples,
                                           const std::vector<std::string>& sources) {
  const std::set<std::string> drop(sources.begin(), sources.end());
  std::vector<LabeledSample> out;
  for (const auto& s : samples) {
    if (!drop.contains(s.source)) out.push_back(s);
  }
  return out;
}

EvaluationReport bias_restricted_eval(const std::vector<LabeledSample>& samples, Bias train_bias,
                                      const std::vector<std::string>& excluded_sources,
                                      const CvConfig& cfg) {
  if (train_bias == Bias::Unlabeled) {
    fail(ErrorCode::InvalidArgument, "train bias must be left or right");
  }
  if (cfg.folds < 1) fail(ErrorCode::InvalidArgument, "need at least one fold");
  const auto pool = exclude_sources(samples, excluded_sources);
  std::vector<std::size_t> biased;  // indices into pool
  std::vector<NewsClass> biased_labels;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (pool[i].bias == train_bias) {
      biased.push_back(i);
      biased_labels.push_back(pool[i].label);
    }
  }
  if (biased.empty()) {
    fail(ErrorCode::InvalidArgument,
         "no " + std::string(to_string(train_bias)) + "-biased samples to train on");
  }
  stratified_split(biased_labels, cfg.test_fraction, cfg.seed);  // validates class counts

  CvConfig fold_cfg = cfg;
  fold_cfg.balanced = true;
  EvaluationReport report;
  report.config = fold_cfg;
  report.sample_count = pool.size();
  report.feature_count = pool.front().features.size();
  report.folds.resize(static_cast<std::size_t>(cfg.folds));
  parallel_for(report.folds.size(), cfg.jobs, [&](std::size_t f) {
    const auto split = stratified_split(biased_labels, cfg.test_fraction, derive_seed(cfg.seed, f));
    std::vector<char> in_train(pool.size(), 0);
    std::vector<LabeledSample> train, test;
    for (auto k : split.train) {
      in_train[biased[k]] = 1;
      train.push_back(pool[biased[k]]);
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!in_train[i]) test.push_back(pool[i]);
    }
    report.folds[f] = evaluate_fold(train, test, fold_cfg);
  });
  report.summarize();
  return report;
}

EvaluationReport layer_ablation(const std::vector<LabeledSample>& samples, LayerKind layer,
                                const CvConfig& cfg) {
  const auto cols = layer_columns(layer);
  auto report = stratified_shuffle_cv(select_columns(samples, cols), cfg);
  for (auto c : cols) report.feature_names.push_back(feature_names()[c]);
  return report;
}

std::vector<double> chi2_scores(const std::vector<std::vector<double>>& x,
                                const std::vector<NewsClass>& y) {
  if (x.size() != y.size()) fail(ErrorCode::InvalidArgument, "chi2: row/label count mismatch");
  if (x.empty()) return {};
  const auto dim = x.front().size();
  std::vector<double> observed_d(dim, 0.0), total(dim, 0.0);
  double n_d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const bool is_d = y[i] == NewsClass::Disinformation;
    n_d += is_d;
    for (std::size_t j = 0; j < dim; ++j) {
      if (x[i][j] < 0) fail(ErrorCode::InvalidArgument, "chi2 needs nonnegative features");
      total[j] += x[i][j];
      if (is_d) observed_d[j] += x[i][j];
    }
  }
  const double p_d = n_d / static_cast<double>(x.size());
  const double p_m = 1.0 - p_d;
  std::vector<double> scores(dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) {
    if (total[j] <= 0) continue;
    const double obs[2] = {observed_d[j], total[j] - observed_d[j]};
    const double exp[2] = {p_d * total[j], p_m * total[j]};
    for (int c = 0; c < 2; ++c) {
      if (exp[c] > 0) scores[j] += (obs[c] - exp[c]) * (obs[c] - exp[c]) / exp[c];
    }
  }
  return scores;
}

std::vector<FeatureScore> chi2_ranking(const std::vector<LabeledSample>& samples,
                                       const std::vector<std::string>& names, const CvConfig& cfg) {
  if (samples.empty()) fail(ErrorCode::InvalidArgument, "no samples to rank");
  const auto dim = samples.front().features.size();
  if (names.size() != dim) fail(ErrorCode::InvalidArgument, "feature name count mismatch");
  std::vector<NewsClass> labels;
  for (const auto& s : samples) labels.push_back(s.label);

  std::vector<std::vector<double>> per_fold(static_cast<std::size_t>(cfg.folds));
  parallel_for(per_fold.size(), cfg.jobs, [&](std::size_t f) {
    const auto split = stratified_split(labels, cfg.test_fraction, derive_seed(cfg.seed, f));
    std::vector<double> lo(dim, INFINITY), hi(dim, -INFINITY);
    for (auto i : split.train) {
      for (std::size_t j = 0; j < dim; ++j) {
        lo[j] = std::min(lo[j], samples[i].features[j]);
        hi[j] = std::max(hi[j], samples[i].features[j]);
      }
    }
    std::vector<std::vector<double>> x;
    std::vector<NewsClass> y;
    for (auto i : split.train) {
      std::vector<double> row(dim, 0.0);
      for (std::size_t j = 0; j < dim; ++j) {
        const double span = hi[j] - lo[j];
        row[j] = span > 0 ? (samples[i].features[j] - lo[j]) / span : 0.0;
      }
      x.push_back(std::move(row));
      y.push_back(labels[i]);
    }
    per_fold[f] = chi2_scores(x, y);
  });

  std::vector<FeatureScore> out;
  const double k = static_cast<double>(per_fold.size());
  for (std::size_t j = 0; j < dim; ++j) {
    FeatureScore fs{names[j], j, 0.0, 0.0};
    for (const auto& s : per_fold) fs.mean += s[j];
    fs.mean /= k;
    double ss = 0.0;
    for (const auto& s : per_fold) ss += (s[j] - fs.mean) * (s[j] - fs.mean);
    fs.stddev = std::sqrt(ss / k);
    out.push_back(std::move(fs));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const FeatureScore& a, const FeatureScore& b) { return a.mean > b.mean; });
  return out;
}

double kolmogorov_survival(double lambda) {
  if (lambda <= 0) return 1.0;
  constexpr double pi = std::numbers::pi;
  if (lambda < 1.18) {
    // Theta-function form converges fast for small lambda.
    double sum = 0.0;
    for (int k = 1; k <= 20; ++k) {
      const double odd = 2.0 * k - 1.0;
      sum += std::exp(-odd * odd * pi * pi / (8.0 * lambda * lambda));
    }
    return std::clamp(1.0 - std::sqrt(2.0 * pi) / lambda * sum, 0.0, 1.0);
  }
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 ? term : -term);
    if (term < 1e-300) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b, double alpha) {
  if (a.empty() || b.empty()) fail(ErrorCode::InvalidArgument, "KS test needs two nonempty samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double n = static_cast<double>(a.size()), m = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / m));
  }
  KsResult r;
  r.statistic = d;
  r.p_value = kolmogorov_survival(std::sqrt(n * m / (n + m)) * d);
  r.rejected = r.p_value < alpha;
  return r;
}

std::vector<KsFeature> ks_ranking(const std::vector<LabeledSample>& samples,
                                  const std::vector<std::string>& names, double alpha) {
  if (samples.empty()) fail(ErrorCode::InvalidArgument, "no samples to rank");
  const auto dim = samples.front().features.size();
  if (names.size() != dim) fail(ErrorCode::InvalidArgument, "feature name count mismatch");
  std::vector<KsFeature> out;
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<double> d, m;
    for (const auto& s : samples) {
      (s.label == NewsClass::Disinformation ? d : m).push_back(s.features[j]);
    }
    out.push_back({names[j], j, ks_two_sample(std::move(d), std::move(m), alpha)});
  }
  std::stable_sort(out.begin(), out.end(), [](const KsFeature& a, const KsFeature& b) {
    return a.result.statistic > b.result.statistic;
  });
  return out;
}

std::vector<TemporalPoint> temporal_sweep(const std::vector<ArticleCascade>& cascades,
                                          const std::vector<Seconds>& lifetimes, const CvConfig& cfg,
                                          int featurize_jobs) {
  std::vector<TemporalPoint> out;
  for (Seconds lt : lifetimes) {
    std::vector<ArticleCascade> cut(cascades.size());
    std::size_t kept = 0;
    for (std::size_t i = 0; i < cascades.size(); ++i) {
      cut[i] = truncate_by_lifetime(cascades[i], lt);
      kept += cut[i].tweets.size();
    }
    auto samples = to_samples(featurize_all(cut, featurize_jobs));
    auto report = stratified_shuffle_cv(samples, cfg);
    report.name = "temporal_" + format_duration(lt);
    report.feature_names = feature_names();
    out.push_back({lt, std::move(report), kept});
  }
  return out;
}

std::vector<LabeledSample> single_layer_samples(const std::vector<ArticleCascade>& cascades,
                                                int jobs) {
  std::vector<LabeledSample> out(cascades.size());
  parallel_for(cascades.size(), jobs, [&](std::size_t i) {
    const auto& c = cascades[i];
    const auto net = build_network(c);
    out[i] = {c.article_id, single_layer_vector(net), c.label.label, c.label.source, c.label.bias,
              aggregate_user_count(net)};
  });
  return out;
}

EvaluationReport single_layer_baseline(const std::vector<LabeledSample>& single_layer,
                                       const CvConfig& cfg) {
  auto report = stratified_shuffle_cv(single_layer, cfg);
  report.feature_names = single_layer_names();
  return report;
}

}  // namespace diffnet
