#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diffnet/ingest.hpp"

namespace diffnet {

struct SourceSpec {
  std::string host;
  Bias bias = Bias::Unlabeled;
};

/// Generative parameters for the articles of one class.
struct ClassProfile {
  std::size_t articles = 400;
  double cascades_mean = 6.0;   // Poisson mean of cascades per article (at least one is kept)
  double size_exponent = 2.0;   // power-law exponent of cascade sizes, > 1
  double depth_bias = 0.5;      // probability a spreader attaches below the root
  double mention_rate = 0.1;    // per spreader: mention an earlier participant
  double reply_rate = 0.05;     // per spreader: extra reply to the parent
  double quote_rate = 0.1;      // per spreader: quote instead of retweet
  double pure_tweet_rate = 0.1; // per spreader: unrelated standalone tweet
  std::vector<SourceSpec> sources;
};

struct GeneratorConfig {
  ClassProfile disinformation;
  ClassProfile mainstream;
  std::uint64_t seed = 1;
  Seconds start = 1'600'000'000;       // first possible article timestamp
  Seconds article_spread = 2 * kDay;   // article start uniform in [start, start + spread)
  double cascade_start_mean = 7200.0;  // seconds from article start to each cascade root
  double inter_arrival_mean = 600.0;   // seconds between spreaders of a cascade
  std::uint64_t max_cascade_size = 3000;
  std::uint64_t user_pool = 1'000'000;

  /// Throws InvalidArgument on out-of-range parameters.
  void validate() const;
};

/// Domain-gapped defaults: disinformation cascades are larger, deeper, and
/// richer in quotes and mentions.
GeneratorConfig default_generator_config();

GeneratorConfig parse_generator_config(const std::string& json_text);
GeneratorConfig read_generator_config(const std::string& path);
std::string to_json(const GeneratorConfig& cfg);

struct SyntheticCorpus {
  std::vector<TweetRecord> tweets;  // grouped by article, time-ordered within
  std::vector<ArticleLabel> labels;
};

/// Deterministic in `cfg` (each article draws from its own derived stream).
SyntheticCorpus generate_corpus(const GeneratorConfig& cfg, int jobs = 1);

/// Writes `tweets.jsonl` and `labels.csv`, the ingest input formats.
void write_corpus(const std::string& dir, const SyntheticCorpus& corpus);

}  // namespace diffnet
