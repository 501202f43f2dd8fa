#include "ggt/builders.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "ggt/errors.hpp"

namespace ggt {

SubgroupEngine::SubgroupEngine(const AmbientGroup& amb, const SubgroupSpec& spec)
    : amb_(amb), spec_(spec) {
  switch (spec.kind) {
    case SubgroupSpec::Kind::Trivial:
      elems_ = {amb.id()};
      break;
    case SubgroupSpec::Kind::VertexSubgroup: {
      if (spec.vertex < 0 || spec.vertex >= amb.gog().num_vertices())
        throw NotASubgroup("vertex id out of range in subgroup spec");
      check_subgroup(amb.gog().vertex_group(spec.vertex), spec.elements);
      for (int h : spec.elements) {
        if (h == amb.gog().vertex_group(spec.vertex).identity())
          elems_.push_back(amb.id());
        else
          elems_.push_back(amb.elem({Letter::vertex(spec.vertex, h)}));
      }
      std::sort(elems_.begin(), elems_.end());
      break;
    }
    case SubgroupSpec::Kind::Cyclic: {
      gen_ = amb.elem(spec.generator);
      // Finite order shows up as a power collapsing to the identity.
      NormalForm acc = gen_;
      int k = 1;
      const int probe = 512;
      while (k <= probe && !acc.reduced_letters.empty()) {
        acc = amb_.mul(acc, gen_);
        ++k;
      }
      if (acc.reduced_letters.empty()) {
        finite_ = true;
        NormalForm x = amb.id();
        for (int i = 0; i < k; ++i) {
          elems_.push_back(x);
          x = amb_.mul(x, gen_);
        }
        std::sort(elems_.begin(), elems_.end());
      } else {
        finite_ = false;
      }
      break;
    }
  }
}

NormalForm SubgroupEngine::coset_rep(const NormalForm& g) const {
  if (finite_) {
    NormalForm best;
    bool first = true;
    for (const auto& h : elems_) {
      NormalForm cand = amb_.mul(g, h);
      if (first || cand < best) {
        best = std::move(cand);
        first = false;
      }
    }
    return best;
  }
  // Infinite cyclic: minimize g * w^k over a window wide enough that every
  // candidate beyond it is strictly longer than the best seen.
  const int guard = static_cast<int>(gen_.reduced_letters.size()) + 2;
  NormalForm best = g;
  for (int dir : {1, -1}) {
    NormalForm cur = g;
    NormalForm step = dir > 0 ? gen_ : amb_.inv(gen_);
    int stall = 0;
    for (int k = 0; stall <= guard + 8; ++k) {
      cur = amb_.mul(cur, step);
      if (cur < best) {
        best = cur;
        stall = 0;
      } else if (cur.reduced_letters.size() > best.reduced_letters.size()) {
        ++stall;
      }
      if (k > 4096) throw Error("CosetWindow", "cyclic coset scan did not stabilize");
    }
  }
  return best;
}

bool SubgroupEngine::contains(const NormalForm& g) const {
  if (finite_) return std::binary_search(elems_.begin(), elems_.end(), g);
  return coset_rep(g).reduced_letters.empty() ||
         nf_key(coset_rep(g)) == nf_key(coset_rep(amb_.id()));
}

std::vector<NormalForm> SubgroupEngine::elements() const {
  if (!finite_) throw Error("InfiniteSubgroup", "cannot enumerate infinite subgroup");
  return elems_;
}

namespace {

void check_symmetric(const AmbientGroup& amb, const std::vector<NormalForm>& S) {
  std::set<std::string> keys;
  for (const auto& s : S) keys.insert(nf_key(s));
  for (const auto& s : S) {
    if (!keys.count(nf_key(amb.inv(s))))
      throw NotSymmetricGeneratingSet("inverse of generator '" + amb.label(s) +
                                      "' is not in S");
  }
}

}  // namespace

GroupBall cayley_abels_ball(const AmbientGroup& amb, const SubgroupSpec& U,
                            const std::vector<NormalForm>& S, int r,
                            const BallOptions& opts) {
  if (r < 0) throw ConfigError("radius must be non-negative");
  SubgroupEngine u(amb, U);
  if (!u.finite()) throw NotASubgroup("U must be a finite (compact proxy) subgroup");
  check_symmetric(amb, S);

  GroupBall out;
  GraphBall& b = out.graph;
  b.radius = r;
  std::map<std::string, int> id;
  auto intern = [&](const NormalForm& rep) {
    auto [it, fresh] = id.try_emplace(nf_key(rep), static_cast<int>(out.reps.size()));
    if (fresh) {
      out.reps.push_back(rep);
      b.adj.emplace_back();
      b.dist.push_back(-1);
    }
    return it->second;
  };
  int base = intern(u.coset_rep(amb.id()));
  b.base = base;
  b.dist[base] = 0;
  std::queue<int> q;
  q.push(base);
  bool frontier_open = false;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    bool at_rim = b.dist[v] == r;
    for (const auto& s : S) {
      NormalForm nb_rep = u.coset_rep(amb.mul(out.reps[v], s));
      int w;
      if (at_rim) {
        auto it = id.find(nf_key(nb_rep));
        if (it == id.end()) {
          frontier_open = true;
          continue;
        }
        w = it->second;
      } else {
        w = intern(nb_rep);
      }
      if (b.dist[w] < 0) {
        b.dist[w] = b.dist[v] + 1;
        q.push(w);
      }
      if (w != v && std::find(b.adj[v].begin(), b.adj[v].end(), w) == b.adj[v].end()) {
        b.adj[v].push_back(w);
        b.adj[w].push_back(v);
      }
    }
  }
  for (auto& nb : b.adj) std::sort(nb.begin(), nb.end());
  b.complete_radius = r;
  b.saturated = !frontier_open;
  b.metric_exact = b.saturated || opts.convex_hint;
  if (opts.with_labels) {
    b.labels.reserve(out.reps.size());
    for (const auto& rep : out.reps) b.labels.push_back(amb.label(rep));
  }
  out.num_core = b.num_vertices();
  b.validate();
  return out;
}

GroupBall relative_cayley_abels_ball(const AmbientGroup& amb, const SubgroupSpec& U,
                                     const std::vector<NormalForm>& S,
                                     const std::vector<SubgroupSpec>& H, int r,
                                     const BallOptions& opts) {
  GroupBall out = cayley_abels_ball(amb, U, S, r, opts);
  if (H.empty()) return out;
  GraphBall& b = out.graph;
  SubgroupEngine u(amb, U);
  auto u_elems = u.elements();

  b.tags.assign(b.num_vertices(), VertexTag{});
  int copy_counter = 0;
  for (int i = 0; i < static_cast<int>(H.size()); ++i) {
    SubgroupEngine h(amb, H[i]);
    std::map<std::string, int> coset_vertex;
    for (int v = 0; v < out.num_core; ++v) {
      // gU is adjacent to guH for every u in U.
      for (const auto& uu : u_elems) {
        NormalForm rep = h.coset_rep(amb.mul(out.reps[v], uu));
        std::string key = nf_key(rep);
        auto [it, fresh] = coset_vertex.try_emplace(key, b.num_vertices());
        if (fresh) {
          b.adj.emplace_back();
          b.dist.push_back(b.dist[v] + 1);
          out.reps.push_back(rep);
          VertexTag t;
          t.kind = VertexTag::Kind::Peripheral;
          t.family = static_cast<std::int16_t>(i);
          t.copy = copy_counter++;
          b.tags.push_back(t);
          if (!b.labels.empty())
            b.labels.push_back(H[i].name + "-coset:" + amb.label(rep));
        }
        int pw = it->second;
        if (std::find(b.adj[v].begin(), b.adj[v].end(), pw) == b.adj[v].end()) {
          b.adj[v].push_back(pw);
          b.adj[pw].push_back(v);
        }
        b.dist[pw] = std::min(b.dist[pw], b.dist[v] + 1);
      }
    }
  }
  b.has_adjoined_vertices = true;
  return out;
}

std::vector<PeripheralCopy> discover_peripheral_copies(
    const AmbientGroup& amb, const GroupBall& ball,
    const std::vector<SubgroupSpec>& H) {
  std::vector<PeripheralCopy> copies;
  for (int i = 0; i < static_cast<int>(H.size()); ++i) {
    SubgroupEngine h(amb, H[i]);
    std::map<std::string, PeripheralCopy> by_coset;
    for (int v = 0; v < ball.num_core; ++v) {
      NormalForm rep = h.coset_rep(ball.reps[v]);
      auto [it, fresh] = by_coset.try_emplace(nf_key(rep));
      if (fresh) {
        it->second.family = i;
        it->second.label = H[i].name + ":" + amb.label(rep);
      }
      it->second.vertices.push_back(v);
    }
    for (auto& [key, copy] : by_coset) {
      copy.copy = static_cast<int>(copies.size());
      copies.push_back(std::move(copy));
    }
  }
  return copies;
}

GraphBall coned_off(const GraphBall& X, const std::vector<PeripheralCopy>& copies) {
  GraphBall out = X;
  if (out.tags.empty()) out.tags.assign(out.num_vertices(), VertexTag{});
  for (const auto& copy : copies) {
    if (copy.vertices.empty())
      throw EmptyPeripheralCopy("peripheral copy '" + copy.label + "' is empty");
    int cone = out.num_vertices();
    out.adj.emplace_back();
    VertexTag t;
    t.kind = VertexTag::Kind::Cone;
    t.family = static_cast<std::int16_t>(copy.family);
    t.copy = copy.copy;
    out.tags.push_back(t);
    int dmin = X.num_vertices();
    for (int v : copy.vertices) {
      out.adj[cone].push_back(v);
      out.adj[v].push_back(cone);
      dmin = std::min(dmin, X.dist[v]);
    }
    out.dist.push_back(dmin + 1);
    if (!out.labels.empty()) out.labels.push_back("cone(" + copy.label + ")");
  }
  out.has_adjoined_vertices = true;
  return out;
}

std::vector<int> embedding_distortion(const GraphBall& Y, const GraphBall& X,
                                      const std::vector<int>& inclusion, int n_max) {
  if (static_cast<int>(inclusion.size()) != Y.num_vertices())
    throw NotInjective("inclusion map size mismatch");
  std::vector<char> hit(X.num_vertices(), 0);
  for (int x : inclusion) {
    if (x < 0 || x >= X.num_vertices()) throw NotInjective("image out of range");
    if (hit[x]) throw NotInjective("inclusion repeats vertex " + std::to_string(x));
    hit[x] = 1;
  }
  if (inclusion[Y.base] != X.base)
    throw NotInjective("inclusion must send base to base");
  if (n_max > X.radius)
    throw RadiusTooSmall("ambient ball radius " + std::to_string(X.radius) +
                         " < n_max " + std::to_string(n_max));

  std::vector<int> dX = bfs_distances(X.adj, X.base);
  std::vector<int> dY = bfs_distances(Y.adj, Y.base);
  std::vector<int> eta(n_max + 1, 0);
  for (int y = 0; y < Y.num_vertices(); ++y) {
    int a = dX[inclusion[y]];
    if (a <= n_max && dY[y] > eta[a]) eta[a] = dY[y];
  }
  for (int n = 1; n <= n_max; ++n) eta[n] = std::max(eta[n], eta[n - 1]);
  // Curtailment check: if the extremal witness sits on Y's rim and Y is not
  // the whole graph, a larger ball could raise eta.
  if (!Y.saturated && eta[n_max] >= Y.radius)
    throw RadiusTooSmall("distortion witness on the rim of Y; enlarge Y");
  return eta;
}

}  // namespace ggt
