#include "ggt/graph_ball.hpp"

#include <algorithm>
#include <queue>

#include "ggt/errors.hpp"

namespace ggt {

std::size_t GraphBall::num_edges() const {
  std::size_t twice = 0;
  for (const auto& nb : adj) twice += nb.size();
  return twice / 2;
}

const std::string& GraphBall::label(int v) const {
  static const std::string empty;
  return labels.empty() ? empty : labels[v];
}

std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int src) {
  std::vector<int> d(adj.size(), -1);
  std::queue<int> q;
  d[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (d[w] < 0) {
        d[w] = d[v] + 1;
        q.push(w);
      }
  }
  return d;
}

std::vector<std::uint16_t> all_pairs_distances(
    const std::vector<std::vector<int>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::uint16_t> m(n * n, 0xffff);
  std::vector<int> q;
  q.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    auto* row = &m[s * n];
    row[s] = 0;
    q.clear();
    q.push_back(static_cast<int>(s));
    for (std::size_t head = 0; head < q.size(); ++head) {
      int v = q[head];
      std::uint16_t dv = row[v];
      for (int w : adj[v])
        if (row[w] == 0xffff) {
          row[w] = static_cast<std::uint16_t>(dv + 1);
          q.push_back(w);
        }
    }
  }
  return m;
}

void GraphBall::validate() {
  const int n = num_vertices();
  if (n == 0) throw Error("EmptyBall", "ball has no vertices");
  if (base < 0 || base >= n) throw Error("BadBase", "base vertex out of range");
  for (int v = 0; v < n; ++v) {
    std::vector<int> nb = adj[v];
    std::sort(nb.begin(), nb.end());
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] == v)
        throw Error("NotSimple", "loop at vertex " + std::to_string(v));
      if (i > 0 && nb[i] == nb[i - 1])
        throw Error("NotSimple", "multi-edge at vertex " + std::to_string(v));
      if (nb[i] < 0 || nb[i] >= n)
        throw Error("BadAdjacency", "neighbor out of range at " + std::to_string(v));
    }
    for (int w : adj[v])
      if (std::find(adj[w].begin(), adj[w].end(), v) == adj[w].end())
        throw Error("BadAdjacency", "asymmetric edge " + std::to_string(v) + "-" +
                                        std::to_string(w));
  }
  dist = bfs_distances(adj, base);
  for (int v = 0; v < n; ++v) {
    if (dist[v] < 0)
      throw Error("Disconnected", "vertex " + std::to_string(v) + " unreachable");
    if (dist[v] > radius)
      throw Error("RadiusExceeded", "vertex " + std::to_string(v) + " at distance " +
                                        std::to_string(dist[v]));
  }
}

std::vector<int> GraphBall::sphere(int r) const {
  std::vector<int> out;
  for (int v = 0; v < num_vertices(); ++v)
    if (dist[v] == r) out.push_back(v);
  return out;
}

GraphBall make_path_ball(int num_vertices) {
  if (num_vertices <= 0) throw Error("EmptyBall", "path needs vertices");
  GraphBall b;
  b.adj.assign(num_vertices, {});
  for (int v = 0; v + 1 < num_vertices; ++v) {
    b.adj[v].push_back(v + 1);
    b.adj[v + 1].push_back(v);
  }
  b.base = 0;
  b.radius = num_vertices - 1;
  b.complete_radius = b.radius;
  b.saturated = true;
  b.metric_exact = true;
  b.labels.resize(num_vertices);
  for (int v = 0; v < num_vertices; ++v) b.labels[v] = std::to_string(v);
  b.validate();
  return b;
}

GraphBall make_cycle_ball(int num_vertices) {
  if (num_vertices < 3) throw Error("EmptyBall", "cycle needs >= 3 vertices");
  GraphBall b;
  b.adj.assign(num_vertices, {});
  for (int v = 0; v < num_vertices; ++v) {
    int w = (v + 1) % num_vertices;
    b.adj[v].push_back(w);
    b.adj[w].push_back(v);
  }
  for (auto& nb : b.adj) std::sort(nb.begin(), nb.end());
  b.base = 0;
  b.radius = num_vertices / 2;
  b.complete_radius = b.radius;
  b.saturated = true;
  b.metric_exact = true;
  b.labels.resize(num_vertices);
  for (int v = 0; v < num_vertices; ++v) b.labels[v] = std::to_string(v);
  b.validate();
  return b;
}

GraphBall relabel(const GraphBall& b, const std::vector<int>& perm) {
  GraphBall out = b;
  const int n = b.num_vertices();
  out.adj.assign(n, {});
  for (int v = 0; v < n; ++v) {
    out.adj[perm[v]].reserve(b.adj[v].size());
    for (int w : b.adj[v]) out.adj[perm[v]].push_back(perm[w]);
    std::sort(out.adj[perm[v]].begin(), out.adj[perm[v]].end());
  }
  out.base = perm[b.base];
  if (!b.labels.empty()) {
    out.labels.assign(n, {});
    for (int v = 0; v < n; ++v) out.labels[perm[v]] = b.labels[v];
  }
  if (!b.tags.empty()) {
    out.tags.assign(n, {});
    for (int v = 0; v < n; ++v) out.tags[perm[v]] = b.tags[v];
  }
  out.dist = bfs_distances(out.adj, out.base);
  return out;
}

}  // namespace ggt
