#include "ggt/tessellation.hpp"

#include <algorithm>
#include <map>

#include "ggt/errors.hpp"

namespace ggt {

namespace {

// Corona growth state.  Boundary is a circular doubly-linked list; closing a
// vertex attaches its remaining faces, splices it out, and creates the next
// ring of vertices.  A boundary vertex of degree d has d-1 incident faces,
// so it still needs q - d + 1.
struct Corona {
  int p, q, R;
  const std::function<void(std::uint32_t, int)>& on_vertex;
  const std::function<void(std::uint32_t, std::uint32_t)>& on_edge;

  std::vector<std::uint32_t> nxt, prv;
  std::vector<std::uint8_t> deg;
  std::vector<std::uint8_t> dist;
  std::vector<std::vector<std::uint32_t>> buckets;  // closure queue by dist

  Corona(int p_, int q_, int R_, const std::function<void(std::uint32_t, int)>& ov,
         const std::function<void(std::uint32_t, std::uint32_t)>& oe)
      : p(p_), q(q_), R(R_), on_vertex(ov), on_edge(oe) {
    buckets.resize(R + 2);
  }

  std::uint32_t new_vertex(int d) {
    auto id = static_cast<std::uint32_t>(deg.size());
    nxt.push_back(0);
    prv.push_back(0);
    deg.push_back(0);
    dist.push_back(static_cast<std::uint8_t>(std::min(d, 255)));
    if (d <= R - 1) buckets[d].push_back(id);
    on_vertex(id, d);
    return id;
  }

  void edge(std::uint32_t u, std::uint32_t v) {
    ++deg[u];
    ++deg[v];
    on_edge(u, v);
  }

  void link(std::uint32_t a, std::uint32_t b) {
    nxt[a] = b;
    prv[b] = a;
  }

  void seed() {
    std::uint32_t center = new_vertex(0);
    // q faces pinwheel around the center: spokes at distance 1 separated by
    // chains of p-3 vertices; the j-th chain vertex sits at distance
    // 1 + min(j, p-2-j).
    std::vector<std::uint32_t> ring;
    std::vector<std::uint32_t> spokes;
    for (int i = 0; i < q; ++i) spokes.push_back(new_vertex(1));
    for (int i = 0; i < q; ++i) {
      ring.push_back(spokes[i]);
      for (int j = 1; j <= p - 3; ++j)
        ring.push_back(new_vertex(1 + std::min(j, p - 2 - j)));
    }
    for (int i = 0; i < q; ++i) edge(center, spokes[i]);
    const int n = static_cast<int>(ring.size());
    for (int i = 0; i < n; ++i) {
      edge(ring[i], ring[(i + 1) % n]);
      link(ring[i], ring[(i + 1) % n]);
    }
  }

  void close(std::uint32_t v) {
    const int m = q - deg[v] + 1;
    if (m < 1)
      throw Error("CoronaInvariant", "overfull boundary vertex " + std::to_string(v));
    const std::uint32_t x = prv[v];
    const std::uint32_t b = nxt[v];
    const int dv = dist[v];
    const int dx = dist[x];
    const int db = dist[b];

    // Replacement boundary arc between x and b: m chains of p-3 fresh
    // vertices separated by m-1 spokes joined to v.  Distances are fixed by
    // the arc pattern alone, so compute them before creating anything.
    const int n = m * (p - 3) + (m - 1);
    std::vector<int> d(n, 1 << 20);
    std::vector<char> is_spoke(n, 0);
    {
      int i = 0;
      for (int f = 0; f < m; ++f) {
        i += p - 3;
        if (f + 1 < m) {
          is_spoke[i] = 1;
          d[i] = dv + 1;
          ++i;
        }
      }
    }
    if (n > 0) {
      d[0] = std::min(d[0], dx + 1);
      d[n - 1] = std::min(d[n - 1], db + 1);
      for (int i = 1; i < n; ++i) d[i] = std::min(d[i], d[i - 1] + 1);
      for (int i = n - 2; i >= 0; --i) d[i] = std::min(d[i], d[i + 1] + 1);
    }

    std::vector<std::uint32_t> arc(n);
    for (int i = 0; i < n; ++i) arc[i] = new_vertex(d[i]);

    if (n == 0) {
      // Only possible for p == 3, which is rejected upfront.
      edge(x, b);
      link(x, b);
      return;
    }
    edge(x, arc[0]);
    for (int i = 0; i + 1 < n; ++i) edge(arc[i], arc[i + 1]);
    edge(arc[n - 1], b);
    for (int i = 0; i < n; ++i)
      if (is_spoke[i]) edge(v, arc[i]);
    link(x, arc[0]);
    for (int i = 0; i + 1 < n; ++i) link(arc[i], arc[i + 1]);
    link(arc[n - 1], b);
  }

  void run() {
    seed();
    for (int d = 1; d <= R - 1; ++d) {
      // Closing distance-d vertices only creates vertices at distance > d,
      // so each bucket is complete when reached.
      for (std::size_t i = 0; i < buckets[d].size(); ++i) close(buckets[d][i]);
      buckets[d].clear();
      buckets[d].shrink_to_fit();
    }
  }
};

}  // namespace

void tessellation_stream(int p, int q, int R,
                         const std::function<void(std::uint32_t, int)>& on_vertex,
                         const std::function<void(std::uint32_t, std::uint32_t)>& on_edge) {
  if (p < 4 || q < 4)
    throw ConfigError("tessellation requires p >= 4 and q >= 4, got {" +
                      std::to_string(p) + "," + std::to_string(q) + "}");
  if (R > 250) throw ConfigError("tessellation radius too large");
  if (R < 0) throw ConfigError("radius must be non-negative");
  if (R == 0) {
    on_vertex(0, 0);
    return;
  }
  Corona c(p, q, R, on_vertex, on_edge);
  c.run();
}

TessellationModel::TessellationModel(int p, int q) : p_(p), q_(q) {
  if (p < 4 || q < 4)
    throw ConfigError("tessellation requires p >= 4 and q >= 4");
}

std::string TessellationModel::name() const {
  return "tessellation_" + std::to_string(p_) + "_" + std::to_string(q_);
}

GraphBall TessellationModel::ball(int radius, bool with_labels) const {
  std::vector<int> layer_of;
  std::vector<std::vector<int>> adj;
  tessellation_stream(
      p_, q_, radius,
      [&](std::uint32_t, int layer) {
        layer_of.push_back(layer);
        adj.emplace_back();
      },
      [&](std::uint32_t u, std::uint32_t v) {
        adj[u].push_back(static_cast<int>(v));
        adj[v].push_back(static_cast<int>(u));
      });
  // Generation can create vertices one step past R (long-face chain
  // interiors); drop anything beyond the radius and compact ids.
  std::vector<int> keep(layer_of.size(), -1);
  int n = 0;
  for (std::size_t v = 0; v < layer_of.size(); ++v)
    if (layer_of[v] <= radius) keep[v] = n++;
  GraphBall out;
  out.radius = radius;
  out.base = 0;
  out.adj.assign(n, {});
  out.dist.assign(n, 0);
  for (std::size_t v = 0; v < layer_of.size(); ++v) {
    if (keep[v] < 0) continue;
    out.dist[keep[v]] = layer_of[v];
    for (int w : adj[v])
      if (keep[w] >= 0) out.adj[keep[v]].push_back(keep[w]);
  }
  for (auto& nb : out.adj) std::sort(nb.begin(), nb.end());
  out.complete_radius = radius;
  out.metric_exact = true;
  if (with_labels) {
    out.labels.resize(n);
    for (int v = 0; v < n; ++v) out.labels[v] = std::to_string(v);
  }
  out.validate();
  return out;
}

std::vector<std::string> TessellationModel::neighbors(const std::string& label) const {
  // Deterministic rule realized by growing a shared planar map until the
  // requested vertex is closed, then reading off its neighbors.
  struct Memo {
    int built_radius = -1;
    std::vector<std::vector<int>> adj;
    std::vector<int> layer;
  };
  static std::map<std::pair<int, int>, Memo> memos;
  auto& memo = memos[{p_, q_}];
  const int v = std::stoi(label);
  auto grown_enough = [&] {
    return v < static_cast<int>(memo.layer.size()) &&
           memo.layer[v] + 1 <= memo.built_radius;
  };
  int r = std::max(memo.built_radius + 2, 3);
  while (!grown_enough()) {
    Memo fresh;
    fresh.built_radius = r;
    tessellation_stream(
        p_, q_, r,
        [&](std::uint32_t, int layer) {
          fresh.layer.push_back(layer);
          fresh.adj.emplace_back();
        },
        [&](std::uint32_t a, std::uint32_t b) {
          fresh.adj[a].push_back(static_cast<int>(b));
          fresh.adj[b].push_back(static_cast<int>(a));
        });
    memo = std::move(fresh);
    if (r > 200) throw ConfigError("tessellation label out of reach: " + label);
    r += 2;
  }
  std::vector<int> nb = memo.adj[v];
  std::sort(nb.begin(), nb.end());
  std::vector<std::string> out;
  out.reserve(nb.size());
  for (int w : nb) out.push_back(std::to_string(w));
  return out;
}

}  // namespace ggt
