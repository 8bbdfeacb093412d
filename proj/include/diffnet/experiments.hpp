#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffnet/features.hpp"
#include "diffnet/model.hpp"

namespace diffnet {

/// Rows of a features table as model samples over all 38 features.
std::vector<LabeledSample> to_samples(const std::vector<FeatureRow>& rows);

/// Restricts every sample to the given feature columns.
std::vector<LabeledSample> select_columns(const std::vector<LabeledSample>& samples,
                                          const std::vector<std::size_t>& columns);

std::vector<LabeledSample> filter_size(const std::vector<LabeledSample>& samples, SizeClass s);

/// Small, Medium and Large bins; All holds every sample.
std::map<SizeClass, std::vector<LabeledSample>> partition_by_size(
    const std::vector<LabeledSample>& samples);

std::vector<LabeledSample> exclude_sources(const std::vector<LabeledSample>& samples,
                                           const std::vector<std::string>& sources);

/// Trains class-weighted models on a stratified split of the samples carrying
/// `train_bias` and tests each fold on every sample outside that fold's
/// training set. Samples from `excluded_sources` take no part.
EvaluationReport bias_restricted_eval(const std::vector<LabeledSample>& samples, Bias train_bias,
                                      const std::vector<std::string>& excluded_sources,
                                      const CvConfig& cfg);

/// CV on one layer's nine features (T and U dropped).
EvaluationReport layer_ablation(const std::vector<LabeledSample>& samples, LayerKind layer,
                                const CvConfig& cfg);

struct FeatureScore {
  std::string name;
  std::size_t column = 0;
  double mean = 0.0;
  double stddev = 0.0;
};

/// Chi-square feature-selection score of each column against the class:
/// observed per-class feature mass against the mass expected if the feature
/// were independent of the class. Inputs must be nonnegative. Columns with
/// zero total mass score 0.
std::vector<double> chi2_scores(const std::vector<std::vector<double>>& x,
                                const std::vector<NewsClass>& y);

/// Per fold: min-max scale the training portion to [0, 1] and score it with
/// chi2_scores. Result sorted by mean score, descending (ties by column).
std::vector<FeatureScore> chi2_ranking(const std::vector<LabeledSample>& samples,
                                       const std::vector<std::string>& names, const CvConfig& cfg);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
  bool rejected = false;  // at alpha
};

/// Survival function of the Kolmogorov distribution, P(K > lambda).
double kolmogorov_survival(double lambda);

/// Two-sided two-sample Kolmogorov-Smirnov test with the asymptotic p-value
/// at effective size n*m/(n+m).
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b, double alpha = 0.05);

struct KsFeature {
  std::string name;
  std::size_t column = 0;
  KsResult result;
};

/// KS between D and M values of every column, sorted by statistic descending.
std::vector<KsFeature> ks_ranking(const std::vector<LabeledSample>& samples,
                                  const std::vector<std::string>& names, double alpha = 0.05);

inline const std::vector<Seconds> kDefaultLifetimes = {kHour,    6 * kHour, 12 * kHour, kDay,
                                                       2 * kDay, 3 * kDay,  7 * kDay};

struct TemporalPoint {
  Seconds lifetime = 0;
  EvaluationReport report;
  std::size_t tweets_kept = 0;
};

/// Rebuilds every network from tweets within each lifetime of its first tweet,
/// re-featurizes, and runs the same CV (same seed) on all articles.
std::vector<TemporalPoint> temporal_sweep(const std::vector<ArticleCascade>& cascades,
                                          const std::vector<Seconds>& lifetimes, const CvConfig& cfg,
                                          int featurize_jobs = 1);

/// Samples on the 11-feature single-layer representation.
std::vector<LabeledSample> single_layer_samples(const std::vector<ArticleCascade>& cascades,
                                                int jobs = 1);

EvaluationReport single_layer_baseline(const std::vector<LabeledSample>& single_layer,
                                       const CvConfig& cfg);

}  // namespace diffnet
