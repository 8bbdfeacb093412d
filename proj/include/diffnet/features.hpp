#pragma once

#include <array>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "diffnet/ingest.hpp"
#include "diffnet/netbuild.hpp"

namespace diffnet {

inline constexpr std::size_t kLayerFeatureCount = 9;
inline constexpr std::size_t kFeatureCount = kLayerFeatureCount * 4 + 2;  // 38

/// Metric suffixes in per-layer order.
inline constexpr std::array<std::string_view, kLayerFeatureCount> kLayerMetricNames = {
    "SCC", "LSCC", "WCC", "LWCC", "DWCC", "CC", "KC", "D", "SV"};

/// Global properties of one layer. All zero for an empty layer.
struct LayerFeatures {
  std::int64_t scc = 0;   // number of strongly connected components
  std::int64_t lscc = 0;  // size of the largest one
  std::int64_t wcc = 0;   // number of weakly connected components
  std::int64_t lwcc = 0;  // size of the largest one
  std::int64_t dwcc = 0;  // undirected diameter of the largest WCC
  double cc = 0.0;        // average clustering, whole layer
  std::int64_t kc = 0;    // main k-core number, whole layer
  double density = 0.0;   // whole layer
  double sv = 0.0;        // structural virality of the largest WCC

  std::array<double, kLayerFeatureCount> to_array() const;

  friend bool operator==(const LayerFeatures&, const LayerFeatures&) = default;
};

LayerFeatures extract_layer_features(const DirectedGraph& g);
LayerFeatures extract_layer_features(const LayerGraph& layer);

/// [Q 9, RT 9, M 9, R 9, T, U].
using FeatureVector = std::array<double, kFeatureCount>;

FeatureVector assemble_vector(const MultiLayerNetwork& net);

/// "Q_SCC", ..., "R_SV", "T", "U".
const std::vector<std::string>& feature_names();

/// Column indices of one layer's nine features in a FeatureVector.
std::vector<std::size_t> layer_columns(LayerKind k);

/// Single-layer representation: 9 properties of the aggregated graph, T, U.
std::vector<double> single_layer_vector(const MultiLayerNetwork& net);
std::vector<std::string> single_layer_names();

/// One row of the features table.
struct FeatureRow {
  std::string article_id;
  ArticleLabel label;
  std::int64_t n_users = 0;
  FeatureVector values{};
};

FeatureRow featurize(const ArticleCascade& cascade);
std::vector<FeatureRow> featurize_all(const std::vector<ArticleCascade>& cascades, int jobs = 1);

/// Header `article_id,label,source,bias,n_users,<38 names>`.
void write_features(std::ostream& out, const std::vector<FeatureRow>& rows);
std::vector<FeatureRow> read_features(std::istream& in);
std::vector<FeatureRow> read_features_file(const std::string& path);

}  // namespace diffnet
