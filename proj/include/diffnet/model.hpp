#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "diffnet/ingest.hpp"

namespace diffnet {

/// Article size bins by number of unique sharing users.
enum class SizeClass { Small, Medium, Large, All };  // [0,100) [100,1000) [1000,inf) [0,inf)

std::string_view to_string(SizeClass s);  // "0-100", "100-1000", "1000-inf", "all"
SizeClass parse_size_class(std::string_view s);
SizeClass size_class_of(std::int64_t n_users);
bool in_size_class(std::int64_t n_users, SizeClass s);

struct LabeledSample {
  std::string article_id;
  std::vector<double> features;
  NewsClass label = NewsClass::Mainstream;
  std::string source;
  Bias bias = Bias::Unlabeled;
  std::int64_t n_users = 0;

  SizeClass size_class() const { return size_class_of(n_users); }
};

/// Population mean and standard deviation per feature.
struct StandardizerParams {
  std::vector<double> mean;
  std::vector<double> stddev;
};

StandardizerParams fit_standardizer(std::span<const LabeledSample> train);
/// z-score; features with zero spread map to 0.
std::vector<double> standardize(const StandardizerParams& p, std::span<const double> x);
std::vector<LabeledSample> transform(const StandardizerParams& p, std::span<const LabeledSample> samples);

struct TrainOptions {
  double C = 1.0;
  bool balanced = false;  // class weights N / (2 N_class)
  double tolerance = 1e-6;
  int max_iterations = 1000;
};

struct LogisticModel {
  std::vector<double> weights;
  double intercept = 0.0;
  double C = 1.0;
  int iterations = 0;
  bool converged = false;
  /// Objective value before the first step and after every accepted step.
  std::vector<double> objective_trace;

  /// Linear score w.x + b; positive favours disinformation.
  double decision(std::span<const double> x) const;
  /// P(disinformation | x).
  double predict_proba(std::span<const double> x) const;
  NewsClass predict(std::span<const double> x) const;
};

/// L2-penalised logistic loss over parameters theta = [w; b]:
///   0.5 |w|^2 + C sum_i omega_i log(1 + exp(-y_i (w.x_i + b))),  y = +1 for D.
/// The intercept is not penalised.
class LogisticObjective {
 public:
  LogisticObjective(Eigen::MatrixXd x, Eigen::VectorXd y, Eigen::VectorXd omega, double c);

  static LogisticObjective from_samples(std::span<const LabeledSample> samples, double c,
                                        bool balanced);

  Eigen::Index dimension() const { return x_.cols() + 1; }
  double value(const Eigen::VectorXd& theta) const;
  /// value(theta + step) - value(theta), without the cancellation of
  /// subtracting two large values.
  double change(const Eigen::VectorXd& theta, const Eigen::VectorXd& step) const;
  Eigen::VectorXd gradient(const Eigen::VectorXd& theta) const;
  Eigen::MatrixXd hessian(const Eigen::VectorXd& theta) const;
  const Eigen::VectorXd& sample_weights() const { return omega_; }

 private:
  Eigen::VectorXd margins(const Eigen::VectorXd& theta) const;

  Eigen::MatrixXd x_;
  Eigen::VectorXd y_;
  Eigen::VectorXd omega_;
  double c_;
};

/// Damped Newton with Armijo backtracking; stops when the gradient max-norm
/// falls to `tolerance` or after `max_iterations`. Throws InvalidArgument when
/// only one class is present.
LogisticModel train_logistic(std::span<const LabeledSample> samples, const TrainOptions& opts = {});

double sigmoid(double z);

struct ClassificationMetrics {
  double auroc = 0.0;
  double precision = 0.0;  // macro over {D, M}
  double recall = 0.0;
  double f1 = 0.0;
};

/// Mann-Whitney form: fraction of (D, M) pairs where D scores higher, ties
/// counting one half. Throws InvalidArgument unless both classes are present.
double auroc(std::span<const NewsClass> truth, std::span<const double> scores);

ClassificationMetrics compute_metrics(std::span<const NewsClass> truth,
                                      std::span<const NewsClass> predicted,
                                      std::span<const double> scores);

enum class StandardizeScope { TrainOnly, AllSamples };

struct CvConfig {
  int folds = 10;
  double test_fraction = 0.2;
  std::uint64_t seed = 0;
  double C = 1.0;
  bool balanced = false;
  StandardizeScope scope = StandardizeScope::TrainOnly;
  int jobs = 1;
};

struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// Class-stratified random split. Each class contributes
/// round(test_fraction * n_class) test samples, clamped to [1, n_class - 1].
Split stratified_split(std::span<const NewsClass> labels, double test_fraction, std::uint64_t seed);

struct FoldResult {
  ClassificationMetrics metrics;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
};

/// Fit on `train`, score `test`.
FoldResult evaluate_fold(std::span<const LabeledSample> train, std::span<const LabeledSample> test,
                         const CvConfig& cfg);

struct MetricSummary {
  double mean = 0.0;
  double stddev = 0.0;  // population
};

struct EvaluationReport {
  std::string name;
  CvConfig config;
  std::size_t sample_count = 0;
  std::size_t feature_count = 0;
  std::vector<std::string> feature_names;
  std::vector<FoldResult> folds;
  MetricSummary auroc, precision, recall, f1;

  /// Fills the four summaries from `folds`.
  void summarize();
};

/// Repeated stratified shuffle split; fold f uses seed derive_seed(cfg.seed, f).
EvaluationReport stratified_shuffle_cv(std::span<const LabeledSample> samples, const CvConfig& cfg);

/// Human-readable per-fold table and summary.
void write_report_text(std::ostream& out, const EvaluationReport& r);
/// `fold,auroc,precision,recall,f1,train_size,test_size`
void write_report_folds(std::ostream& out, const EvaluationReport& r);
/// `metric,mean,std`
void write_report_summary(std::ostream& out, const EvaluationReport& r);
/// One line: "AUROC 0.9123 ± 0.0101 | P ... | R ... | F1 ..."
std::string summary_line(const EvaluationReport& r);

}  // namespace diffnet
