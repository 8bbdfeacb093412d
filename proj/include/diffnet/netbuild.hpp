#pragma once

#include <array>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "diffnet/graphops.hpp"
#include "diffnet/ingest.hpp"

namespace diffnet {

/// Interaction layers, in feature-vector order.
enum class LayerKind { Quote = 0, Retweet = 1, Mention = 2, Reply = 3 };

inline constexpr std::array<LayerKind, 4> kLayerOrder = {LayerKind::Quote, LayerKind::Retweet,
                                                         LayerKind::Mention, LayerKind::Reply};

std::string_view layer_tag(LayerKind k);  // "Q", "RT", "M", "R"
LayerKind parse_layer(std::string_view tag);

using Edge = std::pair<std::string, std::string>;

/// Weighted directed graph of one interaction type. Nodes are exactly the
/// endpoints of edges, so no node is isolated.
class LayerGraph {
 public:
  explicit LayerGraph(LayerKind kind = LayerKind::Retweet) : kind_(kind) {}

  LayerKind kind() const { return kind_; }

  /// Adds src->dst or bumps its weight. Self-interactions are ignored and
  /// reported by returning false.
  bool add_interaction(const std::string& src, const std::string& dst, std::int64_t weight = 1);

  const std::map<Edge, std::int64_t>& edges() const { return edges_; }
  std::set<std::string> nodes() const;
  bool empty() const { return edges_.empty(); }

  /// Weight-free view with nodes numbered by sorted author id.
  DirectedGraph to_directed() const;

  friend bool operator==(const LayerGraph&, const LayerGraph&) = default;

 private:
  LayerKind kind_;
  std::map<Edge, std::int64_t> edges_;
};

struct MultiLayerNetwork {
  std::string article_id;
  std::array<LayerGraph, 4> layers{LayerGraph(LayerKind::Quote), LayerGraph(LayerKind::Retweet),
                                   LayerGraph(LayerKind::Mention), LayerGraph(LayerKind::Reply)};
  std::int64_t pure_tweets = 0;  // T
  std::set<std::string> pure_authors;

  std::int64_t pure_users() const { return static_cast<std::int64_t>(pure_authors.size()); }  // U

  const LayerGraph& layer(LayerKind k) const { return layers[static_cast<std::size_t>(k)]; }
  LayerGraph& layer(LayerKind k) { return layers[static_cast<std::size_t>(k)]; }

  friend bool operator==(const MultiLayerNetwork&, const MultiLayerNetwork&) = default;
};

/// Builds the four layers:
///   retweet_of b  -> RT edge b->a
///   reply_to b    -> R  edge a->b
///   quote_of b    -> Q  edge b->a
///   mention of b  -> M  edge a->b
/// for a tweet authored by a. A tweet that yields no edge (no targets, or
/// only self-targets) is a pure tweet.
MultiLayerNetwork build_network(const ArticleCascade& cascade);

/// Union of all layer nodes and pure-tweet authors.
std::int64_t aggregate_user_count(const MultiLayerNetwork& net);

/// All layer edges collapsed into one graph (weights summed).
LayerGraph aggregate_layer(const MultiLayerNetwork& net);

/// Keeps tweets no later than earliest + lifetime. Throws on empty cascade.
ArticleCascade truncate_by_lifetime(const ArticleCascade& cascade, Seconds lifetime);

/// Text form, per article:
///   # article <id>
///   <layer> <src> <dst> <weight>     (layers in Q, RT, M, R order)
///   P <author>                       (one per pure-tweet author)
///   T=<n> U=<n>
/// Ids must not contain whitespace.
void write_networks(std::ostream& out, const std::vector<MultiLayerNetwork>& nets);
std::vector<MultiLayerNetwork> read_networks(std::istream& in);

}  // namespace diffnet
