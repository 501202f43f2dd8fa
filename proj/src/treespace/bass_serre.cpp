#include <algorithm>
#include <map>
#include <queue>

#include "ggt/errors.hpp"
#include "ggt/treespace.hpp"

namespace ggt {

namespace {

SubgroupSpec full_vertex_subgroup(const GraphOfFiniteGroups& G, int v) {
  std::vector<int> all(G.vertex_group(v).order());
  for (int i = 0; i < G.vertex_group(v).order(); ++i) all[i] = i;
  return SubgroupSpec::vertex_subgroup(G.vertex_name(v), v, std::move(all));
}

SubgroupSpec edge_image_subgroup(const GraphOfFiniteGroups& G, int e, bool from_side,
                                 const std::string& name) {
  const auto& E = G.edge(e);
  const Monomorphism& m = from_side ? E.into_from : E.into_to;
  std::vector<int> elems(E.group.order());
  for (int c = 0; c < E.group.order(); ++c) elems[c] = m.apply(c);
  std::sort(elems.begin(), elems.end());
  return SubgroupSpec::vertex_subgroup(name, from_side ? E.from : E.to,
                                       std::move(elems));
}

}  // namespace

BassSerreBall bass_serre_ball(const AmbientGroup& amb, int tree_radius) {
  const auto& G = amb.gog();
  if (tree_radius < 0) throw ConfigError("tree radius must be non-negative");
  const bool amalgam = G.is_amalgam_shape();
  const bool hnn = G.is_hnn_shape();
  if (!amalgam && !hnn)
    throw UnsupportedShape(
        "Bass-Serre ball needs a single-edge (amalgam) or single-loop (HNN) "
        "graph of groups; assemble general graphs by iterated two-vertex steps");

  // Vertex stabilizer engines (one per graph-of-groups vertex) and the
  // edge-group image for edge labels.
  std::vector<SubgroupEngine> stab;
  for (int v = 0; v < G.num_vertices(); ++v)
    stab.emplace_back(amb, full_vertex_subgroup(G, v));
  SubgroupEngine edge_stab(amb, edge_image_subgroup(G, 0, true, "C"));

  BassSerreBall out;
  GraphBall& b = out.graph;
  b.radius = tree_radius;
  std::map<std::string, int> id;
  auto intern = [&](int type, const NormalForm& rep) {
    auto [it, fresh] = id.try_emplace(std::to_string(type) + "|" + nf_key(rep),
                                      static_cast<int>(out.reps.size()));
    if (fresh) {
      out.reps.push_back(rep);
      out.vertex_type.push_back(type);
      b.adj.emplace_back();
      b.dist.push_back(-1);
    }
    return it->second;
  };

  int base = intern(0, stab[0].coset_rep(amb.id()));
  b.base = base;
  b.dist[base] = 0;
  std::queue<int> q;
  q.push(base);
  std::map<std::pair<int, int>, NormalForm> edge_rep;
  NormalForm stable;  // HNN stable letter
  if (hnn) stable = amb.elem({Letter::edge(0, 1)});

  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (b.dist[v] == tree_radius) continue;
    const NormalForm& g = out.reps[v];
    const int type = out.vertex_type[v];
    const FiniteGroup& Gv = G.vertex_group(type);
    struct Move {
      NormalForm target_rep;
      int target_type;
      NormalForm edge_elem;  // h with the edge = {hA, htA} / {hA, hB}
    };
    std::vector<Move> moves;
    for (int a = 0; a < Gv.order(); ++a) {
      NormalForm ga = a == Gv.identity()
                          ? g
                          : amb.mul(g, amb.elem({Letter::vertex(type, a)}));
      if (amalgam) {
        int other = 1 - type;
        moves.push_back({stab[other].coset_rep(ga), other, ga});
      } else {
        moves.push_back({stab[0].coset_rep(amb.mul(ga, stable)), 0, ga});
        NormalForm gat = amb.mul(ga, amb.inv(stable));
        moves.push_back({stab[0].coset_rep(gat), 0, gat});
      }
    }
    for (const auto& mv : moves) {
      auto key = std::to_string(mv.target_type) + "|" + nf_key(mv.target_rep);
      auto it = id.find(key);
      int w = it != id.end() ? it->second : intern(mv.target_type, mv.target_rep);
      if (b.dist[w] < 0) {
        b.dist[w] = b.dist[v] + 1;
        q.push(w);
      }
      if (w != v && std::find(b.adj[v].begin(), b.adj[v].end(), w) == b.adj[v].end()) {
        b.adj[v].push_back(w);
        b.adj[w].push_back(v);
        edge_rep[{std::min(v, w), std::max(v, w)}] = edge_stab.coset_rep(mv.edge_elem);
      }
    }
  }
  for (auto& nb : b.adj) std::sort(nb.begin(), nb.end());
  for (const auto& [vw, rep] : edge_rep)
    out.edges.push_back({vw.first, vw.second, amb.label(rep), rep});
  b.complete_radius = tree_radius;
  b.saturated = false;
  b.metric_exact = true;  // balls of trees are convex
  b.labels.reserve(out.reps.size());
  for (std::size_t i = 0; i < out.reps.size(); ++i)
    b.labels.push_back(amb.label(out.reps[i]) + "*" +
                       G.vertex_name(out.vertex_type[i]));
  b.validate();
  return out;
}

}  // namespace ggt
