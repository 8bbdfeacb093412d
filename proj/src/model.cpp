#include "diffnet/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "diffnet/error.hpp"
#include "diffnet/rng.hpp"

namespace diffnet {

std::string_view to_string(SizeClass s) {
  switch (s) {
    case SizeClass::Small: return "0-100";
    case SizeClass::Medium: return "100-1000";
    case SizeClass::Large: return "1000-inf";
    case SizeClass::All: return "all";
  }
  return "all";
}

SizeClass parse_size_class(std::string_view s) {
  for (auto c : {SizeClass::Small, SizeClass::Medium, SizeClass::Large, SizeClass::All}) {
    if (to_string(c) == s) return c;
  }
  fail(ErrorCode::InvalidArgument,
       "size class must be one of 0-100, 100-1000, 1000-inf, all; got '" + std::string(s) + "'");
}

SizeClass size_class_of(std::int64_t n_users) {
  if (n_users < 100) return SizeClass::Small;
  if (n_users < 1000) return SizeClass::Medium;
  return SizeClass::Large;
}

bool in_size_class(std::int64_t n_users, SizeClass s) {
  return s == SizeClass::All || size_class_of(n_users) == s;
}

StandardizerParams fit_standardizer(std::span<const LabeledSample> train) {
  if (train.empty()) fail(ErrorCode::InvalidArgument, "cannot fit standardizer on no samples");
  const auto dim = train.front().features.size();
  StandardizerParams p{std::vector<double>(dim, 0.0), std::vector<double>(dim, 0.0)};
  const double n = static_cast<double>(train.size());
  for (const auto& s : train) {
    if (s.features.size() != dim) fail(ErrorCode::InvalidArgument, "ragged feature vectors");
    for (std::size_t j = 0; j < dim; ++j) p.mean[j] += s.features[j];
  }
  for (auto& m : p.mean) m /= n;
  for (const auto& s : train) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double d = s.features[j] - p.mean[j];
      p.stddev[j] += d * d;
    }
  }
  for (auto& v : p.stddev) v = std::sqrt(v / n);
  return p;
}

std::vector<double> standardize(const StandardizerParams& p, std::span<const double> x) {
  if (x.size() != p.mean.size()) fail(ErrorCode::InvalidArgument, "feature dimension mismatch");
  std::vector<double> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    out[j] = p.stddev[j] > 0.0 ? (x[j] - p.mean[j]) / p.stddev[j] : 0.0;
  }
  return out;
}

std::vector<LabeledSample> transform(const StandardizerParams& p,
                                     std::span<const LabeledSample> samples) {
  std::vector<LabeledSample> out(samples.begin(), samples.end());
  for (auto& s : out) s.features = standardize(p, s.features);
  return out;
}

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

namespace {

double softplus(double t) { return std::max(t, 0.0) + std::log1p(std::exp(-std::abs(t))); }

double sign_of(NewsClass c) { return c == NewsClass::Disinformation ? 1.0 : -1.0; }

double max_abs(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

LogisticObjective::LogisticObjective(Eigen::MatrixXd x, Eigen::VectorXd y, Eigen::VectorXd omega,
                                     double c)
    : x_(std::move(x)), y_(std::move(y)), omega_(std::move(omega)), c_(c) {}

LogisticObjective LogisticObjective::from_samples(std::span<const LabeledSample> samples, double c,
                                                  bool balanced) {
  if (samples.empty()) fail(ErrorCode::InvalidArgument, "no training samples");
  const auto n = static_cast<Eigen::Index>(samples.size());
  const auto dim = static_cast<Eigen::Index>(samples.front().features.size());
  Eigen::MatrixXd x(n, dim);
  Eigen::VectorXd y(n);
  double positives = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& s = samples[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(s.features.size()) != dim) {
      fail(ErrorCode::InvalidArgument, "ragged feature vectors");
    }
    for (Eigen::Index j = 0; j < dim; ++j) x(i, j) = s.features[static_cast<std::size_t>(j)];
    y(i) = sign_of(s.label);
    positives += y(i) > 0;
  }
  const double negatives = static_cast<double>(n) - positives;
  if (positives == 0 || negatives == 0) {
    fail(ErrorCode::InvalidArgument, "logistic regression needs both classes in the training set");
  }
  Eigen::VectorXd omega = Eigen::VectorXd::Ones(n);
  if (balanced) {
    const double wp = static_cast<double>(n) / (2.0 * positives);
    const double wn = static_cast<double>(n) / (2.0 * negatives);
    for (Eigen::Index i = 0; i < n; ++i) omega(i) = y(i) > 0 ? wp : wn;
  }
  return LogisticObjective(std::move(x), std::move(y), std::move(omega), c);
}

Eigen::VectorXd LogisticObjective::margins(const Eigen::VectorXd& theta) const {
  const auto dim = x_.cols();
  Eigen::VectorXd z = x_ * theta.head(dim);
  z.array() += theta(dim);
  return y_.cwiseProduct(z);
}

double LogisticObjective::value(const Eigen::VectorXd& theta) const {
  const auto dim = x_.cols();
  const Eigen::VectorXd m = margins(theta);
  double loss = 0.0;
  for (Eigen::Index i = 0; i < m.size(); ++i) loss += omega_(i) * softplus(-m(i));
  return 0.5 * theta.head(dim).squaredNorm() + c_ * loss;
}

double LogisticObjective::change(const Eigen::VectorXd& theta, const Eigen::VectorXd& step) const {
  const auto dim = x_.cols();
  const Eigen::VectorXd m = margins(theta);
  Eigen::VectorXd dz = x_ * step.head(dim);
  dz.array() += step(dim);
  const Eigen::VectorXd dm = y_.cwiseProduct(dz);
  double loss = 0.0;
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const double a = -m(i), d = -dm(i);
    // softplus(a + d) - softplus(a) = log1p(sigmoid(a) * expm1(d))
    const double diff =
        std::abs(d) <= 1.0 ? std::log1p(sigmoid(a) * std::expm1(d)) : softplus(a + d) - softplus(a);
    loss += omega_(i) * diff;
  }
  const double reg = theta.head(dim).dot(step.head(dim)) + 0.5 * step.head(dim).squaredNorm();
  return reg + c_ * loss;
}

Eigen::VectorXd LogisticObjective::gradient(const Eigen::VectorXd& theta) const {
  const auto dim = x_.cols();
  const Eigen::VectorXd m = margins(theta);
  Eigen::VectorXd r(m.size());  // d loss_i / d z_i
  for (Eigen::Index i = 0; i < m.size(); ++i) r(i) = -c_ * omega_(i) * y_(i) * sigmoid(-m(i));
  Eigen::VectorXd g(dim + 1);
  g.head(dim) = theta.head(dim) + x_.transpose() * r;
  g(dim) = r.sum();
  return g;
}

Eigen::MatrixXd LogisticObjective::hessian(const Eigen::VectorXd& theta) const {
  const auto dim = x_.cols();
  const auto n = x_.rows();
  const Eigen::VectorXd m = margins(theta);
  Eigen::MatrixXd xt(n, dim + 1);
  xt.leftCols(dim) = x_;
  xt.col(dim).setOnes();
  Eigen::VectorXd s(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double p = sigmoid(m(i));
    s(i) = c_ * omega_(i) * p * (1.0 - p);
  }
  Eigen::MatrixXd h = xt.transpose() * s.asDiagonal() * xt;
  h.topLeftCorner(dim, dim).diagonal().array() += 1.0;
  return h;
}

LogisticModel train_logistic(std::span<const LabeledSample> samples, const TrainOptions& opts) {
  const auto obj = LogisticObjective::from_samples(samples, opts.C, opts.balanced);
  const auto dim = obj.dimension();
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(dim);
  double f = obj.value(theta);

  LogisticModel model;
  model.C = opts.C;
  model.objective_trace.push_back(f);
  for (int it = 0; it < opts.max_iterations; ++it) {
    const Eigen::VectorXd g = obj.gradient(theta);
    if (max_abs(g) <= opts.tolerance) {
      model.converged = true;
      break;
    }
    Eigen::VectorXd step = -obj.hessian(theta).ldlt().solve(g);
    double slope = g.dot(step);
    if (!step.allFinite() || !(slope < 0)) {
      step = -g;
      slope = -g.squaredNorm();
    }
    double t = 1.0;
    double delta = obj.change(theta, step);
    while (!(delta <= 1e-4 * t * slope) && t > 1e-20) {
      t *= 0.5;
      delta = obj.change(theta, t * step);
    }
    if (!(delta <= 0.0)) break;  // no descent left at double precision
    theta += t * step;
    f += delta;
    model.objective_trace.push_back(f);
    model.iterations = it + 1;
  }
  if (!model.converged && max_abs(obj.gradient(theta)) <= opts.tolerance) model.converged = true;

  model.weights.assign(theta.data(), theta.data() + dim - 1);
  model.intercept = theta(dim - 1);
  return model;
}

double LogisticModel::decision(std::span<const double> x) const {
  if (x.size() != weights.size()) fail(ErrorCode::InvalidArgument, "feature dimension mismatch");
  double z = intercept;
  for (std::size_t j = 0; j < x.size(); ++j) z += weights[j] * x[j];
  return z;
}

double LogisticModel::predict_proba(std::span<const double> x) const { return sigmoid(decision(x)); }

NewsClass LogisticModel::predict(std::span<const double> x) const {
  return decision(x) >= 0.0 ? NewsClass::Disinformation : NewsClass::Mainstream;
}

double auroc(std::span<const NewsClass> truth, std::span<const double> scores) {
  if (truth.size() != scores.size()) fail(ErrorCode::InvalidArgument, "truth/score length mismatch");
  const auto n = truth.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (double s : scores) {
    if (std::isnan(s)) fail(ErrorCode::InvalidArgument, "NaN score");
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  double rank_sum = 0.0;  // midranks of positives, 1-based
  double positives = 0.0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) ++j;
    const double midrank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) {
      if (truth[order[k]] == NewsClass::Disinformation) {
        rank_sum += midrank;
        positives += 1.0;
      }
    }
    i = j;
  }
  const double negatives = static_cast<double>(n) - positives;
  if (positives == 0 || negatives == 0) {
    fail(ErrorCode::InvalidArgument, "AUROC undefined: truth has a single class");
  }
  return (rank_sum - positives * (positives + 1.0) / 2.0) / (positives * negatives);
}

ClassificationMetrics compute_metrics(std::span<const NewsClass> truth,
                                      std::span<const NewsClass> predicted,
                                      std::span<const double> scores) {
  if (truth.empty()) fail(ErrorCode::InvalidArgument, "no samples to evaluate");
  if (predicted.size() != truth.size()) fail(ErrorCode::InvalidArgument, "prediction length mismatch");
  ClassificationMetrics m;
  m.auroc = auroc(truth, scores);
  auto ratio = [](double a, double b) { return b > 0 ? a / b : 0.0; };
  for (auto c : {NewsClass::Disinformation, NewsClass::Mainstream}) {
    double tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
      const bool is = truth[i] == c, said = predicted[i] == c;
      tp += is && said;
      fp += !is && said;
      fn += is && !said;
    }
    const double p = ratio(tp, tp + fp);
    const double r = ratio(tp, tp + fn);
    m.precision += p / 2.0;
    m.recall += r / 2.0;
    m.f1 += ratio(2.0 * p * r, p + r) / 2.0;
  }
  return m;
}

Split stratified_split(std::span<const NewsClass> labels, double test_fraction, std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    fail(ErrorCode::InvalidArgument, "test fraction must lie in (0, 1)");
  }
  Rng rng(seed);
  Split split;
  for (auto c : {NewsClass::Disinformation, NewsClass::Mainstream}) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == c) idx.push_back(i);
    }
    if (idx.size() < 2) {
      fail(ErrorCode::InvalidArgument, "class " + std::string(to_string(c)) +
                                           " has fewer than 2 samples; cannot stratify");
    }
    const auto n = static_cast<long>(idx.size());
    const long n_test = std::clamp(std::lround(test_fraction * static_cast<double>(n)), 1L, n - 1);
    rng.shuffle(std::span<std::size_t>(idx));
    split.test.insert(split.test.end(), idx.begin(), idx.begin() + n_test);
    split.train.insert(split.train.end(), idx.begin() + n_test, idx.end());
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

FoldResult evaluate_fold(std::span<const LabeledSample> train, std::span<const LabeledSample> test,
                         const CvConfig& cfg) {
  StandardizerParams params;
  if (cfg.scope == StandardizeScope::TrainOnly) {
    params = fit_standardizer(train);
  } else {
    std::vector<LabeledSample> all(train.begin(), train.end());
    all.insert(all.end(), test.begin(), test.end());
    params = fit_standardizer(all);
  }
  const auto train_z = transform(params, train);
  TrainOptions opts;
  opts.C = cfg.C;
  opts.balanced = cfg.balanced;
  const auto model = train_logistic(train_z, opts);

  std::vector<NewsClass> truth, predicted;
  std::vector<double> scores;
  for (const auto& s : test) {
    const auto z = standardize(params, s.features);
    truth.push_back(s.label);
    scores.push_back(model.predict_proba(z));
    predicted.push_back(model.predict(z));
  }
  return {compute_metrics(truth, predicted, scores), train.size(), test.size()};
}

namespace {

MetricSummary summarize_metric(const std::vector<FoldResult>& folds,
                               double ClassificationMetrics::*field) {
  MetricSummary s;
  if (folds.empty()) return s;
  const double n = static_cast<double>(folds.size());
  for (const auto& f : folds) s.mean += f.metrics.*field;
  s.mean /= n;
  double ss = 0.0;
  for (const auto& f : folds) {
    const double d = f.metrics.*field - s.mean;
    ss += d * d;
  }
  s.stddev = std::sqrt(ss / n);
  return s;
}

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

void EvaluationReport::summarize() {
  auroc = summarize_metric(folds, &ClassificationMetrics::auroc);
  precision = summarize_metric(folds, &ClassificationMetrics::precision);
  recall = summarize_metric(folds, &ClassificationMetrics::recall);
  f1 = summarize_metric(folds, &ClassificationMetrics::f1);
}

EvaluationReport stratified_shuffle_cv(std::span<const LabeledSample> samples, const CvConfig& cfg) {
  if (cfg.folds < 1) fail(ErrorCode::InvalidArgument, "need at least one fold");
  std::vector<NewsClass> labels;
  labels.reserve(samples.size());
  for (const auto& s : samples) labels.push_back(s.label);

  EvaluationReport report;
  report.config = cfg;
  report.sample_count = samples.size();
  report.feature_count = samples.empty() ? 0 : samples.front().features.size();
  // Validate stratification up front so errors do not depend on thread timing.
  stratified_split(labels, cfg.test_fraction, cfg.seed);

  report.folds.resize(static_cast<std::size_t>(cfg.folds));
  parallel_for(report.folds.size(), cfg.jobs, [&](std::size_t f) {
    const auto split = stratified_split(labels, cfg.test_fraction, derive_seed(cfg.seed, f));
    std::vector<LabeledSample> train, test;
    for (auto i : split.train) train.push_back(samples[i]);
    for (auto i : split.test) test.push_back(samples[i]);
    report.folds[f] = evaluate_fold(train, test, cfg);
  });
  report.summarize();
  return report;
}

void write_report_text(std::ostream& out, const EvaluationReport& r) {
  const auto& c = r.config;
  out << "report: " << (r.name.empty() ? "-" : r.name) << '\n';
  out << "samples: " << r.sample_count << "  features: " << r.feature_count
      << "  folds: " << r.folds.size() << "  test_fraction: " << format_double(c.test_fraction)
      << "  seed: " << c.seed << "  C: " << format_double(c.C)
      << "  balanced: " << (c.balanced ? "yes" : "no")
      << "  standardize: " << (c.scope == StandardizeScope::TrainOnly ? "train" : "all") << '\n';
  out << "fold\tauroc\tprecision\trecall\tf1\ttrain\ttest\n";
  for (std::size_t i = 0; i < r.folds.size(); ++i) {
    const auto& f = r.folds[i];
    out << i << '\t' << fixed4(f.metrics.auroc) << '\t' << fixed4(f.metrics.precision) << '\t'
        << fixed4(f.metrics.recall) << '\t' << fixed4(f.metrics.f1) << '\t' << f.train_size << '\t'
        << f.test_size << '\n';
  }
  out << "mean\t" << fixed4(r.auroc.mean) << '\t' << fixed4(r.precision.mean) << '\t'
      << fixed4(r.recall.mean) << '\t' << fixed4(r.f1.mean) << '\n';
  out << "std\t" << fixed4(r.auroc.stddev) << '\t' << fixed4(r.precision.stddev) << '\t'
      << fixed4(r.recall.stddev) << '\t' << fixed4(r.f1.stddev) << '\n';
  out << summary_line(r) << '\n';
}

void write_report_folds(std::ostream& out, const EvaluationReport& r) {
  out << "fold,auroc,precision,recall,f1,train_size,test_size\n";
  for (std::size_t i = 0; i < r.folds.size(); ++i) {
    const auto& f = r.folds[i];
    out << i << ',' << format_double(f.metrics.auroc) << ',' << format_double(f.metrics.precision)
        << ',' << format_double(f.metrics.recall) << ',' << format_double(f.metrics.f1) << ','
        << f.train_size << ',' << f.test_size << '\n';
  }
}

void write_report_summary(std::ostream& out, const EvaluationReport& r) {
  out << "metric,mean,std\n";
  const std::pair<const char*, const MetricSummary*> rows[] = {
      {"auroc", &r.auroc}, {"precision", &r.precision}, {"recall", &r.recall}, {"f1", &r.f1}};
  for (const auto& [name, s] : rows) {
    out << name << ',' << format_double(s->mean) << ',' << format_double(s->stddev) << '\n';
  }
}

std::string summary_line(const EvaluationReport& r) {
  auto pm = [](const MetricSummary& s) { return fixed4(s.mean) + " ± " + fixed4(s.stddev); };
  return "AUROC " + pm(r.auroc) + " | Precision " + pm(r.precision) + " | Recall " + pm(r.recall) +
         " | F1 " + pm(r.f1);
}

}  // namespace diffnet
