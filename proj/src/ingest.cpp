#include "diffnet/ingest.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <unordered_set>

#include "diffnet/error.hpp"
#include "json.hpp"

namespace diffnet {

namespace {

using nlohmann::json;

std::optional<std::string> optional_target(const json& obj, const char* key, bool& ok) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string() || it->get_ref<const std::string&>().empty()) {
    ok = false;
    return std::nullopt;
  }
  return it->get<std::string>();
}

bool required_string(const json& obj, const char* key, std::string& out) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) return false;
  out = it->get<std::string>();
  return !out.empty();
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

std::string_view to_string(NewsClass c) {
  return c == NewsClass::Disinformation ? "D" : "M";
}

std::string_view to_string(Bias b) {
  switch (b) {
    case Bias::Left: return "left";
    case Bias::Right: return "right";
    case Bias::Unlabeled: return "";
  }
  return "";
}

NewsClass parse_news_class(std::string_view s) {
  if (s == "D") return NewsClass::Disinformation;
  if (s == "M") return NewsClass::Mainstream;
  fail(ErrorCode::Format, "class label must be D or M, got '" + std::string(s) + "'");
}

Bias parse_bias(std::string_view s) {
  if (s == "left") return Bias::Left;
  if (s == "right") return Bias::Right;
  if (s.empty()) return Bias::Unlabeled;
  fail(ErrorCode::Format, "bias must be left, right or empty, got '" + std::string(s) + "'");
}

std::optional<TweetRecord> parse_record_line(std::string_view line) {
  const json obj = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (!obj.is_object()) return std::nullopt;

  TweetRecord r;
  if (!required_string(obj, "tweet_id", r.tweet_id)) return std::nullopt;
  if (!required_string(obj, "author_id", r.author_id)) return std::nullopt;
  if (!required_string(obj, "article_id", r.article_id)) return std::nullopt;

  const auto ts = obj.find("timestamp");
  if (ts == obj.end() || !ts->is_number_integer()) return std::nullopt;
  r.timestamp = ts->get<Seconds>();
  if (r.timestamp <= 0) return std::nullopt;

  bool ok = true;
  r.retweet_of = optional_target(obj, "retweet_of", ok);
  r.quote_of = optional_target(obj, "quote_of", ok);
  r.reply_to = optional_target(obj, "reply_to", ok);
  if (!ok) return std::nullopt;

  if (const auto m = obj.find("mentions"); m != obj.end() && !m->is_null()) {
    if (!m->is_array()) return std::nullopt;
    std::unordered_set<std::string> seen;
    for (const auto& item : *m) {
      if (!item.is_string()) return std::nullopt;
      auto name = item.get<std::string>();
      if (name.empty()) return std::nullopt;
      if (r.reply_to && name == *r.reply_to) continue;
      if (seen.insert(name).second) r.mentions.push_back(std::move(name));
    }
  }
  return r;
}

ParsedRecords parse_records(std::istream& in) {
  ParsedRecords out;
  std::unordered_set<std::string> ids;
  std::string line;
  while (std::getline(in, line)) {
    if (is_blank(line)) continue;
    ++out.stats.lines;
    auto rec = parse_record_line(line);
    if (!rec) {
      ++out.stats.malformed;
      continue;
    }
    if (!ids.insert(rec->tweet_id).second) {
      ++out.stats.duplicates;
      continue;
    }
    out.records.push_back(std::move(*rec));
  }
  if (in.bad()) fail(ErrorCode::Io, "read error on tweets stream");
  if (out.stats.malformed * 2 > out.stats.lines) {
    fail(ErrorCode::Format, std::to_string(out.stats.malformed) + " of " +
                                std::to_string(out.stats.lines) + " tweet lines malformed");
  }
  return out;
}

ParsedRecords read_records_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open tweets file " + path);
  return parse_records(in);
}

std::string serialize_record(const TweetRecord& r) {
  nlohmann::ordered_json obj;
  obj["tweet_id"] = r.tweet_id;
  obj["author_id"] = r.author_id;
  obj["timestamp"] = r.timestamp;
  obj["article_id"] = r.article_id;
  if (r.retweet_of) obj["retweet_of"] = *r.retweet_of;
  if (r.quote_of) obj["quote_of"] = *r.quote_of;
  if (r.reply_to) obj["reply_to"] = *r.reply_to;
  obj["mentions"] = r.mentions;
  return obj.dump();
}

void write_records(std::ostream& out, const std::vector<TweetRecord>& records) {
  for (const auto& r : records) out << serialize_record(r) << '\n';
}

std::map<std::string, ArticleLabel> parse_labels(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::Format, "labels file is empty");
  if (split_fields(line) != std::vector<std::string>{"article_id", "label", "source", "bias"}) {
    fail(ErrorCode::Format, "labels header must be article_id,label,source,bias");
  }
  std::map<std::string, ArticleLabel> labels;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (is_blank(line)) continue;
    const auto f = split_fields(line);
    if (f.size() != 4 || f[0].empty()) {
      fail(ErrorCode::Format, "labels row " + std::to_string(row) + " needs 4 fields");
    }
    ArticleLabel l{f[0], parse_news_class(f[1]), f[2], parse_bias(f[3])};
    labels.try_emplace(l.article_id, std::move(l));
  }
  if (in.bad()) fail(ErrorCode::Io, "read error on labels stream");
  return labels;
}

std::map<std::string, ArticleLabel> read_labels_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open labels file " + path);
  return parse_labels(in);
}

void write_labels(std::ostream& out, const std::vector<ArticleLabel>& labels) {
  out << "article_id,label,source,bias\n";
  for (const auto& l : labels) {
    out << l.article_id << ',' << to_string(l.label) << ',' << l.source << ','
        << to_string(l.bias) << '\n';
  }
}

void sort_tweets(std::vector<TweetRecord>& tweets) {
  std::sort(tweets.begin(), tweets.end(), [](const TweetRecord& a, const TweetRecord& b) {
    if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
    return a.tweet_id < b.tweet_id;
  });
}

std::vector<ArticleCascade> group_by_article(std::vector<TweetRecord> records,
                                             const std::map<std::string, ArticleLabel>& labels,
                                             GroupStats* stats) {
  std::map<std::string, std::vector<TweetRecord>> by_article;
  std::size_t unlabeled = 0;
  for (auto& r : records) {
    if (!labels.contains(r.article_id)) {
      ++unlabeled;
      continue;
    }
    by_article[r.article_id].push_back(std::move(r));
  }
  if (stats) stats->unlabeled_tweets = unlabeled;

  std::vector<ArticleCascade> out;
  out.reserve(by_article.size());
  for (auto& [id, tweets] : by_article) {
    sort_tweets(tweets);
    out.push_back({id, std::move(tweets), labels.at(id)});
  }
  return out;
}

std::vector<ArticleCascade> apply_censoring(std::vector<ArticleCascade> cascades,
                                            Seconds collection_start, Seconds window) {
  if (window <= 0) fail(ErrorCode::InvalidArgument, "censoring window must be positive");
  const Seconds end = collection_start + window;
  std::vector<ArticleCascade> out;
  out.reserve(cascades.size());
  for (auto& c : cascades) {
    std::erase_if(c.tweets, [&](const TweetRecord& t) {
      return t.timestamp < collection_start || t.timestamp > end;
    });
    if (!c.tweets.empty()) out.push_back(std::move(c));
  }
  return out;
}

std::vector<ArticleCascade> filter_min_tweets(std::vector<ArticleCascade> cascades,
                                              std::size_t min_count) {
  if (min_count < 1) fail(ErrorCode::InvalidArgument, "min_count must be at least 1");
  std::erase_if(cascades, [&](const ArticleCascade& c) { return c.tweets.size() < min_count; });
  return cascades;
}

void write_cascades_dir(const std::string& dir, const std::vector<ArticleCascade>& cascades) {
  std::filesystem::create_directories(dir);
  const auto base = std::filesystem::path(dir);
  std::ofstream tweets(base / "tweets.jsonl", std::ios::binary);
  std::ofstream labels(base / "labels.csv", std::ios::binary);
  if (!tweets || !labels) fail(ErrorCode::Io, "cannot write cascades to " + dir);
  std::vector<ArticleLabel> rows;
  rows.reserve(cascades.size());
  for (const auto& c : cascades) {
    write_records(tweets, c.tweets);
    rows.push_back(c.label);
  }
  write_labels(labels, rows);
  if (!tweets || !labels) fail(ErrorCode::Io, "write failed in " + dir);
}

std::vector<ArticleCascade> read_cascades_dir(const std::string& dir) {
  const auto base = std::filesystem::path(dir);
  auto parsed = read_records_file((base / "tweets.jsonl").string());
  const auto labels = read_labels_file((base / "labels.csv").string());
  return group_by_article(std::move(parsed.records), labels);
}

}  // namespace diffnet
