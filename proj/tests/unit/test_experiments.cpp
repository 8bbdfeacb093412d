#include <random>

#include "diffnet/error.hpp"
#include "diffnet/experiments.hpp"
#include "diffnet/synth.hpp"
#include "doctest.h"

using namespace diffnet;

namespace {

constexpr auto D = NewsClass::Disinformation;
constexpr auto M = NewsClass::Mainstream;

LabeledSample sample(std::vector<double> x, NewsClass y, std::int64_t users = 60,
                     Bias bias = Bias::Unlabeled, std::string source = "s") {
  LabeledSample s;
  s.features = std::move(x);
  s.label = y;
  s.n_users = users;
  s.bias = bias;
  s.source = std::move(source);
  return s;
}

// Max |F_a - F_b| over every observed value.
double ks_brute(const std::vector<double>& a, const std::vector<double>& b) {
  auto cdf = [](const std::vector<double>& s, double v) {
    double c = 0;
    for (double x : s) c += x <= v;
    return c / static_cast<double>(s.size());
  };
  double d = 0;
  for (const auto* s : {&a, &b})
    for (double v : *s) d = std::max(d, std::abs(cdf(a, v) - cdf(b, v)));
  return d;
}

std::vector<LabeledSample> separable(std::size_t per_class, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<LabeledSample> out;
  for (std::size_t i = 0; i < 2 * per_class; ++i) {
    const bool d = i < per_class;
    std::vector<double> x(dim);
    for (auto& v : x) v = g(rng) + (d ? 1.0 : 0.0);
    out.push_back(sample(x, d ? D : M, 60, i % 2 ? Bias::Left : Bias::Right, d ? (i % 4 < 2 ? "d1" : "d2") : "msrc"));
  }
  return out;
}

std::vector<ArticleCascade> small_corpus(std::size_t per_class) {
  auto cfg = default_generator_config();
  cfg.disinformation.articles = per_class;
  cfg.mainstream.articles = per_class;
  cfg.max_cascade_size = 200;
  const auto corpus = generate_corpus(cfg);
  std::map<std::string, ArticleLabel> labels;
  for (const auto& l : corpus.labels) labels[l.article_id] = l;
  return group_by_article(corpus.tweets, labels);
}

}  // namespace

TEST_CASE("size partitions") {
  std::vector<LabeledSample> s;
  for (std::int64_t n : {50, 99, 100, 999, 1000, 5000}) s.push_back(sample({0}, D, n));
  const auto bins = partition_by_size(s);
  CHECK(bins.at(SizeClass::Small).size() == 2);
  CHECK(bins.at(SizeClass::Medium).size() == 2);
  CHECK(bins.at(SizeClass::Large).size() == 2);
  CHECK(bins.at(SizeClass::All).size() == 6);
  CHECK(filter_size(s, SizeClass::Medium).front().n_users == 100);
}

TEST_CASE("chi2 scores") {
  SUBCASE("class-independent feature scores zero") {
    const auto s = chi2_scores({{1.0}, {1.0}, {1.0}, {1.0}}, {D, D, M, M});
    CHECK(s[0] == doctest::Approx(0.0));
  }
  SUBCASE("class indicator on four samples") {
    const auto s = chi2_scores({{1.0}, {1.0}, {0.0}, {0.0}}, {D, D, M, M});
    CHECK(s[0] == doctest::Approx(2.0));
  }
  SUBCASE("all-zero column") {
    CHECK(chi2_scores({{0.0}, {0.0}}, {D, M})[0] == 0.0);
  }
  SUBCASE("negative input rejected") {
    CHECK_THROWS_AS(chi2_scores({{-1.0}, {0.0}}, {D, M}), Error);
  }
}

TEST_CASE("chi2 ranking is invariant to positive affine rescaling") {
  auto s = separable(40, 3, 8);
  // Column 2 carries no signal.
  for (auto& x : s) x.features[2] = static_cast<double>(x.article_id.size());
  const std::vector<std::string> names{"a", "b", "c"};
  CvConfig cfg;
  cfg.seed = 3;
  const auto base = chi2_ranking(s, names, cfg);
  auto scaled = s;
  for (auto& x : scaled) {
    x.features[0] = 10.0 * x.features[0] + 7.0;
    x.features[1] = 0.5 * x.features[1] - 2.0;
  }
  const auto again = chi2_ranking(scaled, names, cfg);
  REQUIRE(base.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(base[i].column == again[i].column);
    CHECK(base[i].mean == doctest::Approx(again[i].mean).epsilon(1e-9));
  }
  CHECK(base.back().column == 2);
  CHECK(base.back().mean == 0.0);
}

TEST_CASE("KS statistic fixtures") {
  CHECK(ks_two_sample({1, 2, 3}, {1, 2, 3}).statistic == 0.0);
  CHECK(ks_two_sample({1, 2, 3}, {1, 2, 3}).p_value == 1.0);
  CHECK(ks_two_sample({1, 2}, {5, 6}).statistic == 1.0);
  CHECK(ks_two_sample({1, 2, 3}, {1, 2, 3, 4}).statistic == doctest::Approx(0.25));
  CHECK_THROWS_AS(ks_two_sample({}, {1}), Error);
}

TEST_CASE("KS statistic matches brute force") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> a(1 + rng() % 30), b(1 + rng() % 30);
    for (auto& v : a) v = static_cast<double>(rng() % 12);
    for (auto& v : b) v = static_cast<double>(rng() % 12) + (trial % 3);
    const auto r = ks_two_sample(a, b);
    CHECK(r.statistic == doctest::Approx(ks_brute(a, b)).epsilon(1e-12));
    CHECK(r.p_value >= 0.0);
    CHECK(r.p_value <= 1.0);
    CHECK(r.rejected == (r.p_value < 0.05));
  }
}

TEST_CASE("Kolmogorov survival function") {
  CHECK(kolmogorov_survival(0.0) == 1.0);
  // Tabulated critical values.
  CHECK(kolmogorov_survival(1.3581) == doctest::Approx(0.05).epsilon(1e-3));
  CHECK(kolmogorov_survival(1.6276) == doctest::Approx(0.01).epsilon(1e-3));
  CHECK(kolmogorov_survival(0.8276) == doctest::Approx(0.5).epsilon(1e-3));
  // Both series agree where they switch.
  CHECK(kolmogorov_survival(1.18 - 1e-9) == doctest::Approx(kolmogorov_survival(1.18)).epsilon(1e-8));
  double prev = 1.0;
  for (double l = 0.05; l < 4.0; l += 0.05) {
    const double p = kolmogorov_survival(l);
    CHECK(p <= prev + 1e-15);
    prev = p;
  }
}

TEST_CASE("KS ranking finds the shifted feature") {
  auto s = separable(60, 2, 21);
  for (auto& x : s) x.features[1] = x.label == D ? x.features[1] - 1.0 : x.features[1];
  const auto r = ks_ranking(s, {"shifted", "flat"});
  REQUIRE(r.size() == 2);
  CHECK(r[0].name == "shifted");
  CHECK(r[0].result.rejected);
  CHECK_FALSE(r[1].result.rejected);
}

TEST_CASE("layer ablation") {
  std::vector<LabeledSample> s = separable(30, kFeatureCount, 2);
  CvConfig cfg;
  cfg.folds = 3;
  const auto r = layer_ablation(s, LayerKind::Mention, cfg);
  CHECK(r.feature_count == kLayerFeatureCount);
  REQUIRE(r.feature_names.size() == 9);
  CHECK(r.feature_names.front() == "M_SCC");
  CHECK_THROWS_AS(parse_layer("X"), Error);
}

TEST_CASE("bias-restricted evaluation") {
  auto s = separable(40, 2, 4);
  CvConfig cfg;
  cfg.folds = 4;
  cfg.seed = 1;
  const auto r = bias_restricted_eval(s, Bias::Left, {}, cfg);
  REQUIRE(r.folds.size() == 4);
  // 40 left samples, 8 held out: test = 80 - 32.
  for (const auto& f : r.folds) {
    CHECK(f.train_size == 32);
    CHECK(f.test_size == 48);
  }
  CHECK(r.config.balanced);

  const auto dropped = bias_restricted_eval(s, Bias::Left, {"d2"}, cfg);
  CHECK(dropped.sample_count == 60);

  std::vector<LabeledSample> right_only;
  for (const auto& x : s)
    if (x.bias == Bias::Right) right_only.push_back(x);
  CHECK_THROWS_AS(bias_restricted_eval(right_only, Bias::Left, {}, cfg), Error);
  // Excluding every M source leaves a single class.
  CHECK_THROWS_AS(bias_restricted_eval(s, Bias::Left, {"msrc"}, cfg), Error);
}

TEST_CASE("temporal sweep and single-layer baseline") {
  const auto cascades = small_corpus(25);
  REQUIRE(cascades.size() == 50);
  CvConfig cfg;
  cfg.folds = 3;
  cfg.seed = 17;
  const auto series = temporal_sweep(cascades, kDefaultLifetimes, cfg);
  REQUIRE(series.size() == 7);
  for (std::size_t i = 1; i < series.size(); ++i) CHECK(series[i].tweets_kept >= series[i - 1].tweets_kept);

  // A lifetime past every cascade reproduces the untruncated evaluation.
  const auto whole = stratified_shuffle_cv(to_samples(featurize_all(cascades)), cfg);
  const auto longest = temporal_sweep(cascades, {365 * kDay}, cfg);
  CHECK(longest[0].report.auroc.mean == whole.auroc.mean);
  CHECK(longest[0].report.f1.mean == whole.f1.mean);

  const auto single = single_layer_samples(cascades);
  CHECK(single.front().features.size() == 11);
  const auto base = single_layer_baseline(single, cfg);
  CHECK(base.feature_count == 11);
  CHECK(base.feature_names.front() == "ALL_SCC");
}
