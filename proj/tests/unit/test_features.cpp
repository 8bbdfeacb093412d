#include <random>
#include <sstream>

#include "diffnet/error.hpp"
#include "diffnet/features.hpp"
#include "doctest.h"

using namespace diffnet;

namespace {

LayerGraph layer_of(std::initializer_list<std::pair<const char*, const char*>> edges) {
  LayerGraph g(LayerKind::Retweet);
  for (auto [s, d] : edges) g.add_interaction(s, d);
  return g;
}

TweetRecord tw(std::string id, std::string author) {
  TweetRecord t;
  t.tweet_id = std::move(id);
  t.author_id = std::move(author);
  t.timestamp = 100;
  t.article_id = "a";
  return t;
}

}  // namespace

TEST_CASE("empty layer yields all zeros") {
  CHECK(extract_layer_features(LayerGraph{}) == LayerFeatures{});
  for (double x : LayerFeatures{}.to_array()) CHECK(x == 0.0);
}

TEST_CASE("single retweet edge") {
  const auto f = extract_layer_features(layer_of({{"u1", "u2"}}));
  CHECK(f.scc == 2);
  CHECK(f.lscc == 1);
  CHECK(f.wcc == 1);
  CHECK(f.lwcc == 2);
  CHECK(f.dwcc == 1);
  CHECK(f.cc == 0.0);
  CHECK(f.kc == 1);
  CHECK(f.density == doctest::Approx(0.5));
  CHECK(f.sv == doctest::Approx(1.0));
}

TEST_CASE("directed 3-cycle") {
  const auto f = extract_layer_features(layer_of({{"a", "b"}, {"b", "c"}, {"c", "a"}}));
  CHECK(f.scc == 1);
  CHECK(f.lscc == 3);
  CHECK(f.wcc == 1);
  CHECK(f.lwcc == 3);
  CHECK(f.dwcc == 1);
  CHECK(f.cc == doctest::Approx(1.0));
  CHECK(f.kc == 2);
  CHECK(f.density == doctest::Approx(0.5));
  CHECK(f.sv == doctest::Approx(1.0));
}

TEST_CASE("DWCC and SV come from the largest WCC") {
  // {a,b,c,d} path beats the 2-node component {x,y}.
  const auto f = extract_layer_features(layer_of({{"x", "y"}, {"a", "b"}, {"b", "c"}, {"c", "d"}}));
  CHECK(f.lwcc == 4);
  CHECK(f.dwcc == 3);
  CHECK(f.sv == doctest::Approx(20.0 / 12.0));
}

TEST_CASE("ties for the largest WCC are broken by structure, not by user ids") {
  // Path {a,b,c} (2 edges) and triangle {d,e,f} (3 edges): the triangle wins
  // on edge count whatever the names.
  const auto f = extract_layer_features(
      layer_of({{"a", "b"}, {"b", "c"}, {"x", "y"}, {"d", "e"}, {"d", "f"}, {"e", "f"}}));
  CHECK(f.wcc == 3);
  CHECK(f.lwcc == 3);
  CHECK(f.dwcc == 1);
  CHECK(f.sv == doctest::Approx(1.0));
  const auto g = extract_layer_features(
      layer_of({{"z1", "z2"}, {"z2", "z3"}, {"x", "y"}, {"a", "b"}, {"a", "c"}, {"b", "c"}}));
  CHECK(g == f);

  // Equal edge counts: the longer diameter wins. Star {a,b,c,d} vs path {p,q,r,s}.
  const auto h = extract_layer_features(
      layer_of({{"a", "b"}, {"a", "c"}, {"a", "d"}, {"p", "q"}, {"q", "r"}, {"r", "s"}}));
  CHECK(h.dwcc == 3);
  CHECK(h.sv == doctest::Approx(20.0 / 12.0));
}

TEST_CASE("feature vector layout") {
  const auto& names = feature_names();
  REQUIRE(names.size() == 38);
  CHECK(names.front() == "Q_SCC");
  CHECK(names[9] == "RT_SCC");
  CHECK(names[18 + 3] == "M_LWCC");
  CHECK(names[27 + 8] == "R_SV");
  CHECK(names[36] == "T");
  CHECK(names[37] == "U");
  CHECK(layer_columns(LayerKind::Mention).front() == 18);
}

TEST_CASE("assemble_vector with only pure tweets") {
  ArticleCascade c;
  c.article_id = "a";
  for (int i = 0; i < 5; ++i) c.tweets.push_back(tw("t" + std::to_string(i), i < 2 ? "p" : "q" + std::to_string(i)));
  const auto net = build_network(c);
  const auto v = assemble_vector(net);
  for (std::size_t i = 0; i < 36; ++i) CHECK(v[i] == 0.0);
  CHECK(v[36] == 5.0);
  CHECK(v[37] == 4.0);
}

TEST_CASE("vector is invariant under user relabeling") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    ArticleCascade a, b;
    a.article_id = b.article_id = "a";
    std::vector<std::string> rename(15);
    for (int i = 0; i < 15; ++i) rename[i] = "z" + std::to_string((i * 7 + trial) % 15) + "_x";
    auto pick = [&] { return static_cast<int>(rng() % 15); };
    for (int i = 0; i < 40; ++i) {
      const int au = pick();
      auto t = tw("t" + std::to_string(i), "u" + std::to_string(au));
      auto s = tw("t" + std::to_string(i), rename[au]);
      if (rng() % 2) {
        const int x = pick();
        t.retweet_of = "u" + std::to_string(x);
        s.retweet_of = rename[x];
      }
      if (rng() % 4 == 0) {
        const int x = pick();
        t.mentions = {"u" + std::to_string(x)};
        s.mentions = {rename[x]};
      }
      if (rng() % 5 == 0) {
        const int x = pick();
        t.quote_of = "u" + std::to_string(x);
        s.quote_of = rename[x];
      }
      a.tweets.push_back(t);
      b.tweets.push_back(s);
    }
    const auto va = assemble_vector(build_network(a));
    const auto vb = assemble_vector(build_network(b));
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
      CAPTURE(i);
      CHECK(va[i] == vb[i]);
    }
    const auto net = build_network(a);
    for (auto k : kLayerOrder) {
      const auto f = extract_layer_features(net.layer(k));
      const auto nodes = static_cast<std::int64_t>(net.layer(k).nodes().size());
      CHECK(f.lscc <= f.lwcc);
      CHECK(f.lwcc <= nodes);
      if (f.lwcc <= 1) CHECK(f.dwcc == 0);
    }
  }
}

TEST_CASE("single-layer representation") {
  ArticleCascade c;
  c.article_id = "a";
  auto r = tw("t1", "u2");
  r.retweet_of = "u1";
  auto r2 = tw("t2", "u3");
  r2.retweet_of = "u1";
  c.tweets = {r, r2, tw("t3", "p")};
  const auto net = build_network(c);
  const auto v = single_layer_vector(net);
  REQUIRE(v.size() == 11);
  const auto rt = extract_layer_features(net.layer(LayerKind::Retweet)).to_array();
  for (std::size_t i = 0; i < 9; ++i) CHECK(v[i] == rt[i]);
  CHECK(v[9] == 1.0);
  CHECK(v[10] == 1.0);
  // Aggregated node count = all users minus pure-tweet-only users.
  CHECK(static_cast<std::int64_t>(aggregate_layer(net).nodes().size()) == aggregate_user_count(net) - 1);
}

TEST_CASE("features table round-trip and shape") {
  FeatureRow row;
  row.article_id = "a1";
  row.label = {"a1", NewsClass::Disinformation, "x.com", Bias::Left};
  row.n_users = 42;
  for (std::size_t i = 0; i < kFeatureCount; ++i) row.values[i] = 0.1 * static_cast<double>(i) + 1.0 / 3.0;
  std::stringstream ss;
  write_features(ss, {row});
  std::string header;
  std::getline(std::istringstream(ss.str()), header);
  CHECK(split_fields(header).size() == 43);
  const auto back = read_features(ss);
  REQUIRE(back.size() == 1);
  CHECK(back[0].values == row.values);
  CHECK(back[0].n_users == 42);
  CHECK(back[0].label == row.label);

  std::istringstream bad("article_id,label\n");
  CHECK_THROWS_AS(read_features(bad), Error);
}
