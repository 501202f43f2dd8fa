#include "ggt/horoball.hpp"

#include <algorithm>

#include "ggt/errors.hpp"

namespace ggt {

namespace {

int ceil_log2(int x) {
  int k = 0;
  while ((1 << k) < x) ++k;
  return k;
}

}  // namespace

HoroballGraph horoball(const GraphBall& base, int depth) {
  if (depth < 0) throw ConfigError("horoball depth must be non-negative");
  if (!base.metric_exact)
    throw CurtailedBase("base distances unreliable for the level-edge rule");
  const int n = base.num_vertices();
  auto dm = all_pairs_distances(base.adj);

  HoroballGraph h;
  h.depth = depth;
  h.base_size = n;
  const int total = n * (depth + 1);
  h.graph.adj.assign(total, {});
  h.coords.reserve(total);
  for (int k = 0; k <= depth; ++k)
    for (int v = 0; v < n; ++v) h.coords.push_back({v, k});

  auto add_edge = [&](int a, int b) {
    h.graph.adj[a].push_back(b);
    h.graph.adj[b].push_back(a);
  };
  // (a) level 0 = base graph
  for (int v = 0; v < n; ++v)
    for (int w : base.adj[v])
      if (w > v) add_edge(h.vertex_at(v, 0), h.vertex_at(w, 0));
  // (b) level k >= 1: single edge when 0 < d(v,w) <= 2^k
  for (int k = 1; k <= depth; ++k) {
    const long long reach = 1LL << std::min(k, 30);
    for (int v = 0; v < n; ++v)
      for (int w = v + 1; w < n; ++w) {
        int d = dm[static_cast<std::size_t>(v) * n + w];
        if (d > 0 && d <= reach) add_edge(h.vertex_at(v, k), h.vertex_at(w, k));
      }
  }
  // (c) vertical edges
  for (int k = 0; k < depth; ++k)
    for (int v = 0; v < n; ++v) add_edge(h.vertex_at(v, k), h.vertex_at(v, k + 1));

  for (auto& nb : h.graph.adj) std::sort(nb.begin(), nb.end());
  h.graph.base = h.vertex_at(base.base, 0);
  h.graph.radius = 0;
  h.graph.dist = bfs_distances(h.graph.adj, h.graph.base);
  h.graph.radius = *std::max_element(h.graph.dist.begin(), h.graph.dist.end());
  h.graph.complete_radius = h.graph.radius;
  h.graph.saturated = true;  // the truncated horoball is materialized in full
  h.graph.metric_exact = false;
  h.graph.tags.assign(total, VertexTag{});
  for (int k = 1; k <= depth; ++k)
    for (int v = 0; v < n; ++v) {
      VertexTag t;
      t.kind = VertexTag::Kind::Horoball;
      t.level = static_cast<std::int16_t>(k);
      h.graph.tags[h.vertex_at(v, k)] = t;
    }
  if (!base.labels.empty()) {
    h.graph.labels.resize(total);
    for (int k = 0; k <= depth; ++k)
      for (int v = 0; v < n; ++v)
        h.graph.labels[h.vertex_at(v, k)] =
            "(" + base.labels[v] + "," + std::to_string(k) + ")";
  }
  h.graph.validate();
  return h;
}

int default_horoball_depth(const GraphBall& base) {
  auto dm = all_pairs_distances(base.adj);
  int diam = 0;
  for (auto d : dm)
    if (d != 0xffff) diam = std::max(diam, static_cast<int>(d));
  return ceil_log2(std::max(diam, 1)) + 2;
}

DistanceProfile horoball_distance_profile(const HoroballGraph& h) {
  const int n = h.base_size;
  // base distances = level-0 induced subgraph distances (isomorphic to base)
  std::vector<std::vector<int>> level0(n);
  for (int v = 0; v < n; ++v)
    for (int w : h.graph.adj[v])
      if (w < n) level0[v].push_back(w);
  auto dbase = all_pairs_distances(level0);
  int diam = 0;
  for (auto d : dbase)
    if (d != 0xffff) diam = std::max(diam, static_cast<int>(d));
  if (h.depth < ceil_log2(std::max(diam, 1)))
    throw DepthTooSmall("depth " + std::to_string(h.depth) +
                        " < ceil(log2(diam)) = " +
                        std::to_string(ceil_log2(std::max(diam, 1))));

  DistanceProfile p;
  p.by_base_distance.assign(diam + 1, {});
  for (int v = 0; v < n; ++v) {
    auto dh = bfs_distances(h.graph.adj, v);
    for (int w = v + 1; w < n; ++w) {
      int db = dbase[static_cast<std::size_t>(v) * n + w];
      if (db == 0xffff) continue;
      p.by_base_distance[db].push_back(dh[w]);
    }
  }
  for (auto& v : p.by_base_distance) std::sort(v.begin(), v.end());
  return p;
}

AugmentedBall augmented(const GraphBall& core, std::vector<CopyWithMetric> copies,
                        int depth) {
  if (depth < 0) throw ConfigError("horoball depth must be non-negative");
  std::sort(copies.begin(), copies.end(),
            [](const CopyWithMetric& a, const CopyWithMetric& b) {
              return a.copy.label < b.copy.label;
            });
  AugmentedBall out;
  out.depth = depth;
  out.core_size = core.num_vertices();
  out.graph = core;
  if (out.graph.tags.empty()) out.graph.tags.assign(core.num_vertices(), VertexTag{});

  for (int ci = 0; ci < static_cast<int>(copies.size()); ++ci) {
    const auto& cm = copies[ci];
    const GraphBall& Y = cm.intrinsic;
    const int n = Y.num_vertices();
    if (static_cast<int>(cm.core_vertex_of.size()) != n)
      throw CopyMetricMissing("copy '" + cm.copy.label +
                              "': level-0 identification size mismatch");
    if (!Y.metric_exact)
      throw CurtailedBase("copy '" + cm.copy.label + "': intrinsic metric not exact");
    for (int v : cm.core_vertex_of)
      if (v < 0 || v >= out.core_size)
        throw CopyMetricMissing("copy '" + cm.copy.label +
                                "': identification target out of range");
    auto dm = all_pairs_distances(Y.adj);
    // Horoball vertices at levels 1..depth; level 0 is the copy in the core.
    std::vector<int> id(static_cast<std::size_t>(n) * (depth + 1), -1);
    auto vid = [&](int v, int k) -> int& { return id[k * n + v]; };
    for (int v = 0; v < n; ++v) vid(v, 0) = cm.core_vertex_of[v];
    for (int k = 1; k <= depth; ++k)
      for (int v = 0; v < n; ++v) {
        int fresh = out.graph.num_vertices();
        vid(v, k) = fresh;
        out.graph.adj.emplace_back();
        VertexTag t;
        t.kind = VertexTag::Kind::Horoball;
        t.copy = ci;
        t.family = static_cast<std::int16_t>(cm.copy.family);
        t.level = static_cast<std::int16_t>(k);
        out.graph.tags.push_back(t);
        out.graph.dist.push_back(0);  // recomputed below
        if (!out.graph.labels.empty())
          out.graph.labels.push_back("horo(" + cm.copy.label + "," +
                                     (Y.labels.empty() ? std::to_string(v)
                                                       : Y.labels[v]) +
                                     "," + std::to_string(k) + ")");
        out.horo_coords.push_back({ci, v, k});
      }
    auto add_edge = [&](int a, int b) {
      if (std::find(out.graph.adj[a].begin(), out.graph.adj[a].end(), b) ==
          out.graph.adj[a].end()) {
        out.graph.adj[a].push_back(b);
        out.graph.adj[b].push_back(a);
      }
    };
    for (int k = 1; k <= depth; ++k) {
      const long long reach = 1LL << std::min(k, 30);
      for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) {
          int d = dm[static_cast<std::size_t>(v) * n + w];
          if (d != 0xffff && d > 0 && d <= reach) add_edge(vid(v, k), vid(w, k));
        }
    }
    for (int k = 0; k < depth; ++k)
      for (int v = 0; v < n; ++v) add_edge(vid(v, k), vid(v, k + 1));
  }
  for (auto& nb : out.graph.adj) std::sort(nb.begin(), nb.end());
  out.graph.dist = bfs_distances(out.graph.adj, out.graph.base);
  out.graph.radius =
      *std::max_element(out.graph.dist.begin(), out.graph.dist.end());
  out.graph.complete_radius = core.complete_radius;
  out.graph.has_adjoined_vertices = core.has_adjoined_vertices;
  out.graph.metric_exact = false;
  return out;
}

}  // namespace ggt
