#include "diffnet/netbuild.hpp"

#include <algorithm>
#include <sstream>

#include "diffnet/error.hpp"

namespace diffnet {

std::string_view layer_tag(LayerKind k) {
  switch (k) {
    case LayerKind::Quote: return "Q";
    case LayerKind::Retweet: return "RT";
    case LayerKind::Mention: return "M";
    case LayerKind::Reply: return "R";
  }
  return "?";
}

LayerKind parse_layer(std::string_view tag) {
  for (auto k : kLayerOrder) {
    if (layer_tag(k) == tag) return k;
  }
  fail(ErrorCode::InvalidArgument, "unknown layer '" + std::string(tag) + "' (expected Q, RT, M or R)");
}

bool LayerGraph::add_interaction(const std::string& src, const std::string& dst,
                                 std::int64_t weight) {
  if (src == dst) return false;
  if (weight < 1) fail(ErrorCode::InvalidArgument, "edge weight must be positive");
  edges_[{src, dst}] += weight;
  return true;
}

std::set<std::string> LayerGraph::nodes() const {
  std::set<std::string> out;
  for (const auto& [e, w] : edges_) {
    out.insert(e.first);
    out.insert(e.second);
  }
  return out;
}

DirectedGraph LayerGraph::to_directed() const {
  const auto names = nodes();
  const std::vector<std::string> sorted(names.begin(), names.end());
  auto id = [&](const std::string& s) {
    return static_cast<NodeId>(std::lower_bound(sorted.begin(), sorted.end(), s) - sorted.begin());
  };
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(edges_.size());
  for (const auto& [e, w] : edges_) pairs.emplace_back(id(e.first), id(e.second));
  return DirectedGraph(sorted.size(), pairs);
}

MultiLayerNetwork build_network(const ArticleCascade& cascade) {
  MultiLayerNetwork net;
  net.article_id = cascade.article_id;
  for (const auto& t : cascade.tweets) {
    const auto& a = t.author_id;
    bool interacted = false;
    if (t.retweet_of) interacted |= net.layer(LayerKind::Retweet).add_interaction(*t.retweet_of, a);
    if (t.reply_to) interacted |= net.layer(LayerKind::Reply).add_interaction(a, *t.reply_to);
    if (t.quote_of) interacted |= net.layer(LayerKind::Quote).add_interaction(*t.quote_of, a);
    for (const auto& b : t.mentions) {
      interacted |= net.layer(LayerKind::Mention).add_interaction(a, b);
    }
    if (!interacted) {
      ++net.pure_tweets;
      net.pure_authors.insert(a);
    }
  }
  return net;
}

std::int64_t aggregate_user_count(const MultiLayerNetwork& net) {
  std::set<std::string> users = net.pure_authors;
  for (const auto& layer : net.layers) {
    for (const auto& [e, w] : layer.edges()) {
      users.insert(e.first);
      users.insert(e.second);
    }
  }
  return static_cast<std::int64_t>(users.size());
}

LayerGraph aggregate_layer(const MultiLayerNetwork& net) {
  LayerGraph all(LayerKind::Retweet);
  for (const auto& layer : net.layers) {
    for (const auto& [e, w] : layer.edges()) all.add_interaction(e.first, e.second, w);
  }
  return all;
}

ArticleCascade truncate_by_lifetime(const ArticleCascade& cascade, Seconds lifetime) {
  if (lifetime <= 0) fail(ErrorCode::InvalidArgument, "lifetime must be positive");
  if (cascade.tweets.empty()) {
    fail(ErrorCode::InvalidArgument, "cannot truncate empty cascade " + cascade.article_id);
  }
  Seconds first = cascade.tweets.front().timestamp;
  for (const auto& t : cascade.tweets) first = std::min(first, t.timestamp);
  ArticleCascade out{cascade.article_id, {}, cascade.label};
  for (const auto& t : cascade.tweets) {
    if (t.timestamp <= first + lifetime) out.tweets.push_back(t);
  }
  return out;
}

namespace {

void check_token(const std::string& s) {
  if (s.empty() || s.find_first_of(" \t\r\n") != std::string::npos) {
    fail(ErrorCode::Format, "id '" + s + "' cannot be written in network format");
  }
}

}  // namespace

void write_networks(std::ostream& out, const std::vector<MultiLayerNetwork>& nets) {
  for (const auto& net : nets) {
    check_token(net.article_id);
    out << "# article " << net.article_id << '\n';
    for (auto k : kLayerOrder) {
      for (const auto& [e, w] : net.layer(k).edges()) {
        check_token(e.first);
        check_token(e.second);
        out << layer_tag(k) << ' ' << e.first << ' ' << e.second << ' ' << w << '\n';
      }
    }
    for (const auto& a : net.pure_authors) {
      check_token(a);
      out << "P " << a << '\n';
    }
    out << "T=" << net.pure_tweets << " U=" << net.pure_users() << '\n';
  }
}

std::vector<MultiLayerNetwork> read_networks(std::istream& in) {
  std::vector<MultiLayerNetwork> nets;
  MultiLayerNetwork* cur = nullptr;
  std::string line;
  std::size_t lineno = 0;
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::Format, "network line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head == "#") {
      std::string word, id;
      ss >> word >> id;
      if (word != "article" || id.empty()) bad("expected '# article <id>'");
      nets.emplace_back();
      cur = &nets.back();
      cur->article_id = id;
      continue;
    }
    if (!cur) bad("record before article header");
    if (head == "P") {
      std::string a;
      ss >> a;
      if (a.empty()) bad("missing pure-tweet author");
      cur->pure_authors.insert(a);
    } else if (head.rfind("T=", 0) == 0) {
      std::string u;
      ss >> u;
      if (u.rfind("U=", 0) != 0) bad("expected T=<n> U=<n>");
      try {
        cur->pure_tweets = std::stoll(head.substr(2));
        const auto users = std::stoll(u.substr(2));
        if (users != cur->pure_users()) bad("U does not match listed pure-tweet authors");
      } catch (const std::logic_error&) {
        bad("bad counter");
      }
      cur = nullptr;
    } else {
      const auto kind = parse_layer(head);
      std::string src, dst;
      std::int64_t w = 0;
      if (!(ss >> src >> dst >> w) || w < 1 || src == dst) bad("expected '<layer> <src> <dst> <weight>'");
      cur->layer(kind).add_interaction(src, dst, w);
    }
  }
  if (cur) fail(ErrorCode::Format, "network for " + cur->article_id + " lacks T=/U= trailer");
  return nets;
}

}  // namespace diffnet
