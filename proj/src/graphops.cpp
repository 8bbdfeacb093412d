#include "diffnet/graphops.hpp"

#include <algorithm>
#include <numeric>

#include "diffnet/error.hpp"

namespace diffnet {

namespace {

void sort_unique(std::vector<NodeId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void normalize(std::vector<Component>& comps) {
  for (auto& c : comps) std::sort(c.begin(), c.end());
  std::sort(comps.begin(), comps.end(),
            [](const Component& a, const Component& b) { return a.front() < b.front(); });
}

// Undirected BFS distances from `source`, confined to nodes with mask set.
// Returns number of nodes reached; fills `dist` (must be pre-sized, -1 = unseen).
std::size_t bfs(const DirectedGraph& g, NodeId source, const std::vector<char>& mask,
                std::vector<std::int64_t>& dist, std::vector<NodeId>& queue) {
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (NodeId w : g.neighbors(v)) {
      if (mask[w] && dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return queue.size();
}

struct DistanceSummary {
  std::int64_t max = 0;
  std::int64_t sum = 0;  // over ordered pairs
};

DistanceSummary all_pairs(const DirectedGraph& g, std::span<const NodeId> nodes) {
  std::vector<char> mask(g.node_count(), 0);
  for (NodeId v : nodes) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.node_count() || mask[v]) {
      fail(ErrorCode::InvalidArgument, "node set has out-of-range or repeated ids");
    }
    mask[v] = 1;
  }
  DistanceSummary s;
  std::vector<std::int64_t> dist(g.node_count(), -1);
  std::vector<NodeId> queue;
  queue.reserve(nodes.size());
  for (NodeId src : nodes) {
    if (bfs(g, src, mask, dist, queue) != nodes.size()) {
      fail(ErrorCode::Invariant, "node set does not induce a connected subgraph");
    }
    for (NodeId v : queue) {
      s.max = std::max(s.max, dist[v]);
      s.sum += dist[v];
      dist[v] = -1;
    }
  }
  return s;
}

}  // namespace

DirectedGraph::DirectedGraph(std::size_t node_count,
                             std::span<const std::pair<NodeId, NodeId>> edges)
    : out_(node_count), in_(node_count), undirected_(node_count) {
  const auto n = static_cast<NodeId>(node_count);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      fail(ErrorCode::InvalidArgument, "edge endpoint out of range");
    }
    if (u == v) fail(ErrorCode::InvalidArgument, "self-loop");
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (std::size_t v = 0; v < node_count; ++v) {
    sort_unique(out_[v]);
    sort_unique(in_[v]);
    edge_count_ += out_[v].size();
    auto& und = undirected_[v];
    und.reserve(out_[v].size() + in_[v].size());
    std::set_union(out_[v].begin(), out_[v].end(), in_[v].begin(), in_[v].end(),
                   std::back_inserter(und));
  }
}

bool DirectedGraph::has_edge(NodeId u, NodeId v) const {
  const auto& adj = out_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Component> strongly_connected_components(const DirectedGraph& g) {
  // Iterative Tarjan.
  const auto n = static_cast<NodeId>(g.node_count());
  std::vector<NodeId> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<NodeId> stack;
  std::vector<std::pair<NodeId, std::size_t>> call;  // (node, next out-edge)
  std::vector<Component> comps;
  NodeId counter = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      const auto adj = g.out_neighbors(v);
      if (next < adj.size()) {
        const NodeId w = adj[next++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const NodeId done = v;
      call.pop_back();
      if (!call.empty()) {
        const NodeId parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        Component c;
        NodeId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          c.push_back(w);
        } while (w != done);
        comps.push_back(std::move(c));
      }
    }
  }
  normalize(comps);
  return comps;
}

std::vector<Component> weakly_connected_components(const DirectedGraph& g) {
  const auto n = static_cast<NodeId>(g.node_count());
  std::vector<NodeId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](NodeId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.out_neighbors(u)) {
      const NodeId a = find(u), b = find(v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  // Roots are component minima because unions keep the smaller id as root
  // and nodes are scanned in increasing order.
  std::vector<NodeId> slot(n, -1);
  std::vector<Component> comps;
  for (NodeId v = 0; v < n; ++v) {
    const NodeId r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<NodeId>(comps.size());
      comps.emplace_back();
    }
    comps[slot[r]].push_back(v);
  }
  return comps;
}

const Component& largest_component(const std::vector<Component>& components) {
  if (components.empty()) fail(ErrorCode::InvalidArgument, "no components");
  const Component* best = &components.front();
  for (const auto& c : components) {
    if (c.size() > best->size()) best = &c;
  }
  return *best;
}

std::int64_t diameter_undirected(const DirectedGraph& g, std::span<const NodeId> nodes) {
  if (nodes.empty()) fail(ErrorCode::InvalidArgument, "diameter of an empty node set");
  return all_pairs(g, nodes).max;
}

double structural_virality(const DirectedGraph& g, std::span<const NodeId> nodes) {
  if (nodes.empty()) fail(ErrorCode::InvalidArgument, "structural virality of an empty node set");
  const auto s = all_pairs(g, nodes);
  if (nodes.size() == 1) return 0.0;
  const double n = static_cast<double>(nodes.size());
  return static_cast<double>(s.sum) / (n * (n - 1.0));
}

double average_clustering(const DirectedGraph& g) {
  const auto n = g.node_count();
  if (n == 0) return 0.0;
  std::vector<char> mark(n, 0);
  std::vector<double> local;
  for (std::size_t v = 0; v < n; ++v) {
    const auto nb = g.neighbors(static_cast<NodeId>(v));
    const auto k = nb.size();
    if (k < 2) continue;
    for (NodeId w : nb) mark[w] = 1;
    std::size_t links = 0;  // each triangle edge seen from both ends
    for (NodeId w : nb) {
      for (NodeId x : g.neighbors(w)) links += mark[x];
    }
    for (NodeId w : nb) mark[w] = 0;
    local.push_back(static_cast<double>(links) / static_cast<double>(k * (k - 1)));
  }
  // Summing in sorted order makes the result independent of node numbering.
  std::sort(local.begin(), local.end());
  double total = 0.0;
  for (double c : local) total += c;
  return total / static_cast<double>(n);
}

std::vector<std::int64_t> core_numbers(const DirectedGraph& g) {
  // Batagelj-Zaversnik bucket peeling. A mutual pair appears in both the in-
  // and out-list, so removing a node lowers that neighbour's degree by two.
  const auto n = g.node_count();
  std::vector<std::int64_t> deg(n);
  std::int64_t max_deg = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto id = static_cast<NodeId>(v);
    deg[v] = static_cast<std::int64_t>(g.out_neighbors(id).size() + g.in_neighbors(id).size());
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::size_t> bin(max_deg + 2, 0);
  for (auto d : deg) ++bin[d];
  std::size_t start = 0;
  for (auto& b : bin) {
    const auto count = b;
    b = start;
    start += count;
  }
  std::vector<NodeId> vert(n);
  std::vector<std::size_t> pos(n);
  for (std::size_t v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = static_cast<NodeId>(v);
  }
  for (std::int64_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  auto lower = [&](NodeId u, std::int64_t floor) {
    if (deg[u] <= floor) return;
    const auto du = deg[u];
    const auto pu = pos[u];
    const auto pw = bin[du];
    const NodeId w = vert[pw];
    if (u != w) {
      pos[u] = pw;
      vert[pu] = w;
      pos[w] = pu;
      vert[pw] = u;
    }
    ++bin[du];
    --deg[u];
  };
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId v = vert[i];
    for (NodeId u : g.out_neighbors(v)) lower(u, deg[v]);
    for (NodeId u : g.in_neighbors(v)) lower(u, deg[v]);
  }
  return deg;
}

std::int64_t main_kcore_number(const DirectedGraph& g) {
  const auto cores = core_numbers(g);
  return cores.empty() ? 0 : *std::max_element(cores.begin(), cores.end());
}

double density(const DirectedGraph& g) {
  const double n = static_cast<double>(g.node_count());
  if (g.node_count() < 2) return 0.0;
  return static_cast<double>(g.edge_count()) / (n * (n - 1.0));
}

}  // namespace diffnet
