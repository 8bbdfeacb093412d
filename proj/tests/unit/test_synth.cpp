#include <sstream>

#include "diffnet/error.hpp"
#include "diffnet/features.hpp"
#include "diffnet/synth.hpp"
#include "doctest.h"

using namespace diffnet;

namespace {

GeneratorConfig quiet(std::size_t articles) {
  auto cfg = default_generator_config();
  for (auto* p : {&cfg.disinformation, &cfg.mainstream}) {
    p->articles = articles;
    p->cascades_mean = 1e-9;  // exactly one cascade
    p->mention_rate = p->reply_rate = p->quote_rate = p->pure_tweet_rate = 0.0;
  }
  return cfg;
}

std::vector<ArticleCascade> cascades_of(const SyntheticCorpus& corpus) {
  std::map<std::string, ArticleLabel> labels;
  for (const auto& l : corpus.labels) labels[l.article_id] = l;
  return group_by_article(corpus.tweets, labels);
}

}  // namespace

TEST_CASE("root-only cascades are single pure tweets") {
  auto cfg = quiet(3);
  cfg.max_cascade_size = 1;
  for (const auto& c : cascades_of(generate_corpus(cfg))) {
    const auto v = assemble_vector(build_network(c));
    CHECK(v[36] == 1.0);
    CHECK(v[37] == 1.0);
    for (std::size_t i = 0; i < 36; ++i) CHECK(v[i] == 0.0);
  }
}

TEST_CASE("zero depth bias gives retweet stars") {
  auto cfg = quiet(30);
  cfg.disinformation.depth_bias = cfg.mainstream.depth_bias = 0.0;
  int checked = 0;
  for (const auto& c : cascades_of(generate_corpus(cfg))) {
    const auto f = extract_layer_features(build_network(c).layer(LayerKind::Retweet));
    if (f.lwcc < 3) continue;
    ++checked;
    CHECK(f.dwcc == 2);
    const double n = static_cast<double>(f.lwcc);
    CHECK(f.sv == doctest::Approx(2.0 - 2.0 / n).epsilon(1e-12));
  }
  CHECK(checked > 0);
}

TEST_CASE("generation is deterministic and independent of jobs") {
  auto cfg = default_generator_config();
  cfg.disinformation.articles = cfg.mainstream.articles = 20;
  const auto a = generate_corpus(cfg, 1);
  const auto b = generate_corpus(cfg, 3);
  CHECK(a.tweets == b.tweets);
  CHECK(a.labels == b.labels);
  cfg.seed = 2;
  CHECK(generate_corpus(cfg).tweets != a.tweets);
}

TEST_CASE("invalid parameters are rejected") {
  auto cfg = default_generator_config();
  cfg.mainstream.quote_rate = 1.5;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = default_generator_config();
  cfg.disinformation.size_exponent = 1.0;
  CHECK_THROWS_AS(generate_corpus(cfg), Error);
  cfg = default_generator_config();
  cfg.mainstream.sources.clear();
  CHECK_THROWS_AS(cfg.validate(), Error);
  CHECK_THROWS_AS(parse_generator_config("[1]"), Error);
  CHECK_THROWS_AS(parse_generator_config(R"({"seed":"x"})"), Error);
}

TEST_CASE("config JSON round-trips") {
  auto cfg = default_generator_config();
  cfg.seed = 77;
  cfg.mainstream.depth_bias = 0.123;
  const auto text = to_json(cfg);
  CHECK(to_json(parse_generator_config(text)) == text);
  CHECK(parse_generator_config(R"({"seed":5})").seed == 5);
}

TEST_CASE("generated records survive a serialize and parse cycle") {
  auto cfg = default_generator_config();
  cfg.disinformation.articles = cfg.mainstream.articles = 15;
  const auto corpus = generate_corpus(cfg);
  std::stringstream ss;
  write_records(ss, corpus.tweets);
  const auto parsed = parse_records(ss);
  CHECK(parsed.stats.malformed == 0);
  CHECK(parsed.stats.duplicates == 0);
  CHECK(parsed.records == corpus.tweets);
}

TEST_CASE("default profiles separate the classes structurally") {
  auto cfg = default_generator_config();
  cfg.disinformation.articles = cfg.mainstream.articles = 200;
  const auto cascades = cascades_of(generate_corpus(cfg));
  double sum[2][4] = {};
  double n[2] = {};
  for (const auto& c : cascades) {
    const int k = c.label.label == NewsClass::Disinformation ? 0 : 1;
    const auto net = build_network(c);
    const auto rt = extract_layer_features(net.layer(LayerKind::Retweet));
    const auto m = extract_layer_features(net.layer(LayerKind::Mention));
    sum[k][0] += static_cast<double>(rt.lwcc);
    sum[k][1] += static_cast<double>(rt.dwcc);
    sum[k][2] += static_cast<double>(m.lwcc);
    sum[k][3] += static_cast<double>(m.dwcc);
    n[k] += 1;
  }
  for (int f = 0; f < 4; ++f) {
    CAPTURE(f);
    CHECK(sum[0][f] / n[0] > sum[1][f] / n[1]);
  }
}
