#include "diffnet/synth.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "diffnet/error.hpp"
#include "diffnet/rng.hpp"
#include "json.hpp"

namespace diffnet {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void check_rate(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    fail(ErrorCode::InvalidArgument, std::string(what) + " must lie in [0, 1]");
  }
}

void validate_profile(const ClassProfile& p) {
  if (p.articles < 1) fail(ErrorCode::InvalidArgument, "articles must be at least 1");
  if (!(p.cascades_mean > 0)) fail(ErrorCode::InvalidArgument, "cascades_mean must be positive");
  if (!(p.size_exponent > 1)) fail(ErrorCode::InvalidArgument, "size_exponent must exceed 1");
  check_rate(p.depth_bias, "depth_bias");
  check_rate(p.mention_rate, "mention_rate");
  check_rate(p.reply_rate, "reply_rate");
  check_rate(p.quote_rate, "quote_rate");
  check_rate(p.pure_tweet_rate, "pure_tweet_rate");
  if (p.sources.empty()) fail(ErrorCode::InvalidArgument, "each class needs at least one source");
}

ordered_json profile_json(const ClassProfile& p) {
  ordered_json j;
  j["articles"] = p.articles;
  j["cascades_mean"] = p.cascades_mean;
  j["size_exponent"] = p.size_exponent;
  j["depth_bias"] = p.depth_bias;
  j["mention_rate"] = p.mention_rate;
  j["reply_rate"] = p.reply_rate;
  j["quote_rate"] = p.quote_rate;
  j["pure_tweet_rate"] = p.pure_tweet_rate;
  j["sources"] = ordered_json::array();
  for (const auto& s : p.sources) {
    j["sources"].push_back({{"host", s.host}, {"bias", std::string(to_string(s.bias))}});
  }
  return j;
}

template <typename T>
void read_opt(const json& j, const char* key, T& out) {
  if (const auto it = j.find(key); it != j.end()) out = it->get<T>();
}

ClassProfile profile_from(const json& j, ClassProfile p) {
  read_opt(j, "articles", p.articles);
  read_opt(j, "cascades_mean", p.cascades_mean);
  read_opt(j, "size_exponent", p.size_exponent);
  read_opt(j, "depth_bias", p.depth_bias);
  read_opt(j, "mention_rate", p.mention_rate);
  read_opt(j, "reply_rate", p.reply_rate);
  read_opt(j, "quote_rate", p.quote_rate);
  read_opt(j, "pure_tweet_rate", p.pure_tweet_rate);
  if (const auto it = j.find("sources"); it != j.end()) {
    p.sources.clear();
    for (const auto& s : *it) {
      p.sources.push_back({s.at("host").get<std::string>(),
                           parse_bias(s.value("bias", std::string()))});
    }
  }
  return p;
}

std::string padded(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%05zu", i);
  return buf;
}

struct ArticleOutput {
  std::vector<TweetRecord> tweets;
  ArticleLabel label;
};

ArticleOutput generate_article(const GeneratorConfig& cfg, const ClassProfile& p, NewsClass cls,
                               std::size_t index) {
  const std::uint64_t stream = (static_cast<std::uint64_t>(cls == NewsClass::Mainstream) << 40) | index;
  Rng rng(derive_seed(cfg.seed, stream));

  ArticleOutput out;
  const std::string id = std::string(to_string(cls)) + padded(index);
  const auto& src = p.sources[rng.index(p.sources.size())];
  out.label = {id, cls, src.host, src.bias};

  std::size_t counter = 0;
  std::vector<std::string> participants;
  auto new_user = [&] { return "u" + std::to_string(rng.index(cfg.user_pool)); };
  auto emit = [&](const std::string& author, double t) -> TweetRecord& {
    TweetRecord r;
    r.tweet_id = id + "-" + std::to_string(counter++);
    r.author_id = author;
    r.timestamp = static_cast<Seconds>(std::llround(t));
    r.article_id = id;
    out.tweets.push_back(std::move(r));
    return out.tweets.back();
  };

  const double article_start =
      static_cast<double>(cfg.start) +
      std::floor(rng.uniform() * static_cast<double>(cfg.article_spread));
  const auto n_cascades = std::max<std::uint64_t>(1, rng.poisson(p.cascades_mean));
  for (std::uint64_t c = 0; c < n_cascades; ++c) {
    double t = article_start + rng.exponential(cfg.cascade_start_mean);
    const auto size = rng.power_law(p.size_exponent, cfg.max_cascade_size);
    const std::string root = new_user();
    emit(root, t);
    participants.push_back(root);
    std::vector<std::string> spreaders;  // non-root members of this cascade
    for (std::uint64_t k = 1; k < size; ++k) {
      t += rng.exponential(cfg.inter_arrival_mean);
      std::string parent = root;
      if (!spreaders.empty() && rng.bernoulli(p.depth_bias)) {
        parent = spreaders[rng.index(spreaders.size())];
      }
      const std::string author = new_user();
      // Draw every decision in a fixed order so streams stay aligned.
      const bool quote = rng.bernoulli(p.quote_rate);
      const bool mention = rng.bernoulli(p.mention_rate);
      const auto mention_pick = rng.index(participants.size());
      const bool reply = rng.bernoulli(p.reply_rate);
      const bool pure = rng.bernoulli(p.pure_tweet_rate);

      auto& tw = emit(author, t);
      if (quote) {
        tw.quote_of = parent;
      } else {
        tw.retweet_of = parent;
      }
      if (mention && participants[mention_pick] != author) {
        tw.mentions.push_back(participants[mention_pick]);
      }
      if (reply) emit(author, t + 1.0).reply_to = parent;
      if (pure) emit(new_user(), t + 2.0);
      spreaders.push_back(author);
      participants.push_back(author);
    }
  }
  sort_tweets(out.tweets);
  return out;
}

}  // namespace

void GeneratorConfig::validate() const {
  validate_profile(disinformation);
  validate_profile(mainstream);
  if (start <= 0) fail(ErrorCode::InvalidArgument, "start must be positive");
  if (article_spread < 1) fail(ErrorCode::InvalidArgument, "article_spread must be positive");
  if (!(cascade_start_mean > 0) || !(inter_arrival_mean > 0)) {
    fail(ErrorCode::InvalidArgument, "time means must be positive");
  }
  if (max_cascade_size < 1) fail(ErrorCode::InvalidArgument, "max_cascade_size must be positive");
  if (user_pool < 1) fail(ErrorCode::InvalidArgument, "user_pool must be positive");
}

GeneratorConfig default_generator_config() {
  GeneratorConfig cfg;
  auto& d = cfg.disinformation;
  d.articles = 400;
  d.cascades_mean = 25.0;
  d.size_exponent = 1.8;
  d.depth_bias = 0.5;
  d.mention_rate = 0.18;
  d.reply_rate = 0.05;
  d.quote_rate = 0.18;
  d.pure_tweet_rate = 0.05;
  d.sources = {{"breitbart.com", Bias::Right},
               {"infowars.com", Bias::Right},
               {"thegatewaypundit.com", Bias::Right},
               {"politicususa.com", Bias::Left},
               {"occupydemocrats.com", Bias::Left}};
  auto& m = cfg.mainstream;
  m.articles = 400;
  m.cascades_mean = 25.0;
  m.size_exponent = 2.0;
  m.depth_bias = 0.3;
  m.mention_rate = 0.12;
  m.reply_rate = 0.08;
  m.quote_rate = 0.1;
  m.pure_tweet_rate = 0.1;
  m.sources = {{"nytimes.com", Bias::Left},
               {"washingtonpost.com", Bias::Left},
               {"cnn.com", Bias::Left},
               {"foxnews.com", Bias::Right},
               {"wsj.com", Bias::Right}};
  return cfg;
}

std::string to_json(const GeneratorConfig& cfg) {
  ordered_json j;
  j["seed"] = cfg.seed;
  j["start"] = cfg.start;
  j["article_spread"] = cfg.article_spread;
  j["cascade_start_mean"] = cfg.cascade_start_mean;
  j["inter_arrival_mean"] = cfg.inter_arrival_mean;
  j["max_cascade_size"] = cfg.max_cascade_size;
  j["user_pool"] = cfg.user_pool;
  j["disinformation"] = profile_json(cfg.disinformation);
  j["mainstream"] = profile_json(cfg.mainstream);
  return j.dump(2) + "\n";
}

GeneratorConfig parse_generator_config(const std::string& json_text) {
  const json j = json::parse(json_text, nullptr, false);
  if (!j.is_object()) fail(ErrorCode::Format, "generator config is not a JSON object");
  GeneratorConfig cfg = default_generator_config();
  try {
    read_opt(j, "seed", cfg.seed);
    read_opt(j, "start", cfg.start);
    read_opt(j, "article_spread", cfg.article_spread);
    read_opt(j, "cascade_start_mean", cfg.cascade_start_mean);
    read_opt(j, "inter_arrival_mean", cfg.inter_arrival_mean);
    read_opt(j, "max_cascade_size", cfg.max_cascade_size);
    read_opt(j, "user_pool", cfg.user_pool);
    if (j.contains("disinformation")) cfg.disinformation = profile_from(j["disinformation"], cfg.disinformation);
    if (j.contains("mainstream")) cfg.mainstream = profile_from(j["mainstream"], cfg.mainstream);
  } catch (const json::exception& e) {
    fail(ErrorCode::Format, std::string("generator config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

GeneratorConfig read_generator_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open generator config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_generator_config(ss.str());
}

SyntheticCorpus generate_corpus(const GeneratorConfig& cfg, int jobs) {
  cfg.validate();
  struct Job {
    const ClassProfile* profile;
    NewsClass cls;
    std::size_t index;
  };
  std::vector<Job> work;
  for (std::size_t i = 0; i < cfg.disinformation.articles; ++i) {
    work.push_back({&cfg.disinformation, NewsClass::Disinformation, i});
  }
  for (std::size_t i = 0; i < cfg.mainstream.articles; ++i) {
    work.push_back({&cfg.mainstream, NewsClass::Mainstream, i});
  }
  std::vector<ArticleOutput> articles(work.size());
  parallel_for(work.size(), jobs, [&](std::size_t k) {
    articles[k] = generate_article(cfg, *work[k].profile, work[k].cls, work[k].index);
  });
  SyntheticCorpus corpus;
  for (auto& a : articles) {
    corpus.labels.push_back(a.label);
    for (auto& t : a.tweets) corpus.tweets.push_back(std::move(t));
  }
  return corpus;
}

void write_corpus(const std::string& dir, const SyntheticCorpus& corpus) {
  std::filesystem::create_directories(dir);
  const auto base = std::filesystem::path(dir);
  std::ofstream tweets(base / "tweets.jsonl", std::ios::binary);
  std::ofstream labels(base / "labels.csv", std::ios::binary);
  if (!tweets || !labels) fail(ErrorCode::Io, "cannot write corpus to " + dir);
  write_records(tweets, corpus.tweets);
  write_labels(labels, corpus.labels);
  if (!tweets || !labels) fail(ErrorCode::Io, "write failed in " + dir);
}

}  // namespace diffnet
