#include "diffnet/features.hpp"

#include <charconv>
#include <fstream>
#include <tuple>

#include "diffnet/error.hpp"

namespace diffnet {

std::array<double, kLayerFeatureCount> LayerFeatures::to_array() const {
  return {static_cast<double>(scc),  static_cast<double>(lscc), static_cast<double>(wcc),
          static_cast<double>(lwcc), static_cast<double>(dwcc), cc,
          static_cast<double>(kc),   density,                   sv};
}

LayerFeatures extract_layer_features(const DirectedGraph& g) {
  LayerFeatures f;
  if (g.node_count() == 0) return f;
  const auto sccs = strongly_connected_components(g);
  const auto wccs = weakly_connected_components(g);
  const auto lwcc = largest_component(wccs).size();
  f.scc = static_cast<std::int64_t>(sccs.size());
  f.lscc = static_cast<std::int64_t>(largest_component(sccs).size());
  f.wcc = static_cast<std::int64_t>(wccs.size());
  f.lwcc = static_cast<std::int64_t>(lwcc);
  f.cc = average_clustering(g);
  f.kc = main_kcore_number(g);
  f.density = density(g);

  // Among equally large WCCs prefer more edges, then larger diameter, then
  // larger SV; only a full tie falls back to the smallest member id, and then
  // DWCC and SV do not depend on the choice.
  bool first = true;
  std::size_t best_edges = 0;
  for (const auto& c : wccs) {
    if (c.size() != lwcc) continue;
    std::size_t edges = 0;
    for (NodeId v : c) edges += g.out_neighbors(v).size();
    if (!first && edges < best_edges) continue;
    const auto d = diameter_undirected(g, c);
    const double sv = structural_virality(g, c);
    if (first || std::tie(edges, d, sv) > std::tie(best_edges, f.dwcc, f.sv)) {
      best_edges = edges;
      f.dwcc = d;
      f.sv = sv;
      first = false;
    }
  }
  return f;
}

LayerFeatures extract_layer_features(const LayerGraph& layer) {
  if (layer.empty()) return {};
  return extract_layer_features(layer.to_directed());
}

FeatureVector assemble_vector(const MultiLayerNetwork& net) {
  FeatureVector v{};
  std::size_t at = 0;
  for (auto k : kLayerOrder) {
    for (double x : extract_layer_features(net.layer(k)).to_array()) v[at++] = x;
  }
  v[at++] = static_cast<double>(net.pure_tweets);
  v[at++] = static_cast<double>(net.pure_users());
  return v;
}

const std::vector<std::string>& feature_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (auto k : kLayerOrder) {
      for (auto m : kLayerMetricNames) out.push_back(std::string(layer_tag(k)) + "_" + std::string(m));
    }
    out.emplace_back("T");
    out.emplace_back("U");
    return out;
  }();
  return names;
}

std::vector<std::size_t> layer_columns(LayerKind k) {
  std::vector<std::size_t> cols;
  const auto base = static_cast<std::size_t>(k) * kLayerFeatureCount;
  for (std::size_t i = 0; i < kLayerFeatureCount; ++i) cols.push_back(base + i);
  return cols;
}

std::vector<double> single_layer_vector(const MultiLayerNetwork& net) {
  const auto f = extract_layer_features(aggregate_layer(net)).to_array();
  std::vector<double> v(f.begin(), f.end());
  v.push_back(static_cast<double>(net.pure_tweets));
  v.push_back(static_cast<double>(net.pure_users()));
  return v;
}

std::vector<std::string> single_layer_names() {
  std::vector<std::string> out;
  for (auto m : kLayerMetricNames) out.push_back("ALL_" + std::string(m));
  out.emplace_back("T");
  out.emplace_back("U");
  return out;
}

FeatureRow featurize(const ArticleCascade& cascade) {
  const auto net = build_network(cascade);
  return {cascade.article_id, cascade.label, aggregate_user_count(net), assemble_vector(net)};
}

std::vector<FeatureRow> featurize_all(const std::vector<ArticleCascade>& cascades, int jobs) {
  std::vector<FeatureRow> rows(cascades.size());
  parallel_for(cascades.size(), jobs, [&](std::size_t i) { rows[i] = featurize(cascades[i]); });
  return rows;
}

void write_features(std::ostream& out, const std::vector<FeatureRow>& rows) {
  out << "article_id,label,source,bias,n_users";
  for (const auto& n : feature_names()) out << ',' << n;
  out << '\n';
  for (const auto& r : rows) {
    out << r.article_id << ',' << to_string(r.label.label) << ',' << r.label.source << ','
        << to_string(r.label.bias) << ',' << r.n_users;
    for (double x : r.values) out << ',' << format_double(x);
    out << '\n';
  }
}

namespace {

double parse_real(const std::string& s, std::size_t row) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    fail(ErrorCode::Format, "features row " + std::to_string(row) + ": bad number '" + s + "'");
  }
  return v;
}

}  // namespace

std::vector<FeatureRow> read_features(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::Format, "features file is empty");
  std::vector<std::string> expected{"article_id", "label", "source", "bias", "n_users"};
  for (const auto& n : feature_names()) expected.push_back(n);
  if (split_fields(line) != expected) fail(ErrorCode::Format, "unexpected features header");

  std::vector<FeatureRow> rows;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const auto f = split_fields(line);
    if (f.size() != expected.size()) {
      fail(ErrorCode::Format, "features row " + std::to_string(row) + " has " +
                                  std::to_string(f.size()) + " columns");
    }
    FeatureRow r;
    r.article_id = f[0];
    r.label = {f[0], parse_news_class(f[1]), f[2], parse_bias(f[3])};
    r.n_users = static_cast<std::int64_t>(parse_real(f[4], row));
    for (std::size_t i = 0; i < kFeatureCount; ++i) r.values[i] = parse_real(f[5 + i], row);
    rows.push_back(std::move(r));
  }
  if (in.bad()) fail(ErrorCode::Io, "read error on features stream");
  return rows;
}

std::vector<FeatureRow> read_features_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open features file " + path);
  return read_features(in);
}

}  // namespace diffnet
