#pragma once

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "diffnet/util.hpp"

namespace diffnet {

/// One tweet as delivered by upstream extraction. Interaction targets hold
/// author ids, not tweet ids.
struct TweetRecord {
  std::string tweet_id;
  std::string author_id;
  Seconds timestamp = 0;
  std::string article_id;
  std::optional<std::string> retweet_of;
  std::optional<std::string> quote_of;
  std::optional<std::string> reply_to;
  /// Body mentions only. Never contains the reply target; no duplicates.
  std::vector<std::string> mentions;

  bool has_targets() const {
    return retweet_of || quote_of || reply_to || !mentions.empty();
  }

  friend bool operator==(const TweetRecord&, const TweetRecord&) = default;
};

enum class NewsClass { Disinformation, Mainstream };
enum class Bias { Left, Right, Unlabeled };

std::string_view to_string(NewsClass c);  // "D" / "M"
std::string_view to_string(Bias b);       // "left" / "right" / ""
NewsClass parse_news_class(std::string_view s);
Bias parse_bias(std::string_view s);

struct ArticleLabel {
  std::string article_id;
  NewsClass label = NewsClass::Mainstream;
  std::string source;
  Bias bias = Bias::Unlabeled;

  friend bool operator==(const ArticleLabel&, const ArticleLabel&) = default;
};

/// Tweets of one article, sorted by (timestamp, tweet_id).
struct ArticleCascade {
  std::string article_id;
  std::vector<TweetRecord> tweets;
  ArticleLabel label;
};

struct ParseStats {
  std::size_t lines = 0;       // non-blank lines seen
  std::size_t malformed = 0;   // skipped as unparseable or invariant-violating
  std::size_t duplicates = 0;  // repeated tweet_id, later occurrence dropped
};

struct ParsedRecords {
  std::vector<TweetRecord> records;
  ParseStats stats;
};

/// Parses one JSON object per line. Malformed lines are skipped and counted;
/// more than half the non-blank lines malformed is a Format error. Mentions
/// are deduplicated (first occurrence wins) and stripped of the reply target.
ParsedRecords parse_records(std::istream& in);
ParsedRecords read_records_file(const std::string& path);

/// Parses a single line; nullopt when malformed.
std::optional<TweetRecord> parse_record_line(std::string_view line);

/// One JSON line, no trailing newline. Optional fields are omitted when unset.
std::string serialize_record(const TweetRecord& r);
void write_records(std::ostream& out, const std::vector<TweetRecord>& records);

/// Labels table with header `article_id,label,source,bias`.
std::map<std::string, ArticleLabel> parse_labels(std::istream& in);
std::map<std::string, ArticleLabel> read_labels_file(const std::string& path);
void write_labels(std::ostream& out, const std::vector<ArticleLabel>& labels);

struct GroupStats {
  std::size_t unlabeled_tweets = 0;  // tweets whose article has no label row
};

/// Groups records by article, attaching labels. Output is sorted by
/// article_id; tweets within each article by (timestamp, tweet_id).
std::vector<ArticleCascade> group_by_article(std::vector<TweetRecord> records,
                                             const std::map<std::string, ArticleLabel>& labels,
                                             GroupStats* stats = nullptr);

void sort_tweets(std::vector<TweetRecord>& tweets);

/// Keeps tweets with start <= timestamp <= start + window; drops emptied articles.
std::vector<ArticleCascade> apply_censoring(std::vector<ArticleCascade> cascades,
                                            Seconds collection_start, Seconds window);

std::vector<ArticleCascade> filter_min_tweets(std::vector<ArticleCascade> cascades,
                                              std::size_t min_count = 50);

/// Cascades directory: `tweets.jsonl` and `labels.csv`.
void write_cascades_dir(const std::string& dir, const std::vector<ArticleCascade>& cascades);
std::vector<ArticleCascade> read_cascades_dir(const std::string& dir);

}  // namespace diffnet
