#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "ggt/errors.hpp"
#include "ggt/treespace.hpp"

namespace ggt {

namespace {

SubgroupSpec edge_from_image(const GraphOfFiniteGroups& G) {
  const auto& E = G.edge(0);
  std::vector<int> elems(E.group.order());
  for (int c = 0; c < E.group.order(); ++c) elems[c] = E.into_from.apply(c);
  std::sort(elems.begin(), elems.end());
  return SubgroupSpec::vertex_subgroup("C", E.from, std::move(elems));
}

std::vector<NormalForm> full_generators(const AmbientGroup& amb, int v) {
  const auto& Gv = amb.gog().vertex_group(v);
  std::vector<NormalForm> S;
  for (int a = 0; a < Gv.order(); ++a)
    if (a != Gv.identity()) S.push_back(amb.elem({Letter::vertex(v, a)}));
  return S;
}

}  // namespace

TreeOfSpacesBall tree_of_spaces_ball(const AmbientGroup& amb, int tree_radius,
                                     const FiniteSpaceOptions& opts) {
  const auto& G = amb.gog();
  const bool amalgam = G.is_amalgam_shape();
  const bool hnn = G.is_hnn_shape();
  if (!amalgam && !hnn)
    throw UnsupportedShape("tree of spaces needs an amalgam edge or an HNN loop");
  const auto& E = G.edge(0);
  if (amalgam && E.group.order() == G.vertex_group(0).order() &&
      E.group.order() == G.vertex_group(1).order())
    throw UnsupportedShape("trivial amalgam: edge group equals both vertex groups");
  if (hnn) {
    // alpha must identify two subgroups of A of equal order; monomorphism
    // validation already guarantees injectivity into the same vertex group.
    if (E.into_from.image().size() != E.into_to.image().size())
      throw NotIsomorphic("HNN attachments have different orders");
  }

  TreeOfSpacesBall out;
  out.tree = bass_serre_ball(amb, tree_radius);
  const int T = out.tree.graph.num_vertices();
  SubgroupEngine c_img(amb, edge_from_image(G));

  std::vector<std::vector<NormalForm>> S(G.num_vertices());
  S[0] = opts.S_A.empty() ? full_generators(amb, 0) : opts.S_A;
  if (G.num_vertices() > 1) S[1] = opts.S_B.empty() ? full_generators(amb, 1) : opts.S_B;

  // Space vertices are cosets gC, tagged by side for the amalgam (the coset
  // gC lies in both factors' copies; the side tag separates the two glued
  // endpoints of the lift edge).
  std::map<std::string, int> id;
  GraphBall& b = out.space;
  auto intern = [&](int type, const NormalForm& rep) {
    auto [it, fresh] = id.try_emplace(std::to_string(type) + "|" + nf_key(rep),
                                      static_cast<int>(out.space_reps.size()));
    if (fresh) {
      out.space_reps.push_back(rep);
      b.adj.emplace_back();
      out.projection.push_back(-1);
    }
    return it->second;
  };
  auto add_edge = [&](int u, int v) {
    if (u != v && std::find(b.adj[u].begin(), b.adj[u].end(), v) == b.adj[u].end()) {
      b.adj[u].push_back(v);
      b.adj[v].push_back(u);
    }
  };

  // Materialize each (finite) vertex space: the cosets of C inside the coset
  // w*G_type, edges from the generator set of that side.
  std::vector<SubgroupEngine> stab;
  for (int v = 0; v < G.num_vertices(); ++v) {
    std::vector<int> all(G.vertex_group(v).order());
    for (int i = 0; i < G.vertex_group(v).order(); ++i) all[i] = i;
    stab.emplace_back(amb,
                      SubgroupSpec::vertex_subgroup(G.vertex_name(v), v, std::move(all)));
  }
  out.tree_vertex_base.assign(T, -1);
  for (int w = 0; w < T; ++w) {
    const int type = out.tree.vertex_type[w];
    const NormalForm& wrep = out.tree.reps[w];
    const FiniteGroup& Gv = G.vertex_group(type);
    std::vector<int> members;
    std::set<std::string> seen;
    for (int a = 0; a < Gv.order(); ++a) {
      NormalForm ga = a == Gv.identity()
                          ? wrep
                          : amb.mul(wrep, amb.elem({Letter::vertex(type, a)}));
      NormalForm rep = c_img.coset_rep(ga);
      if (!seen.insert(nf_key(rep)).second) continue;
      int vtx = intern(type, rep);
      out.projection[vtx] = w;
      members.push_back(vtx);
    }
    out.tree_vertex_base[w] = intern(type, c_img.coset_rep(wrep));
    for (int vtx : members)
      for (const auto& s : S[type])
        add_edge(vtx, intern(type, c_img.coset_rep(amb.mul(out.space_reps[vtx], s))));
  }

  // Lift edges: one per tree edge, attached at the canonical representative
  // h of the edge coset: vertices hC and (amalgam) hC on the other side /
  // (HNN) htC.
  NormalForm stable;
  if (hnn) stable = amb.elem({Letter::edge(0, 1)});
  for (int ei = 0; ei < static_cast<int>(out.tree.edges.size()); ++ei) {
    const auto& te = out.tree.edges[ei];
    int tu = te.u, tv = te.v;
    int a_end, b_end;
    if (amalgam) {
      int type_u = out.tree.vertex_type[tu];
      int type_v = out.tree.vertex_type[tv];
      a_end = intern(type_u, c_img.coset_rep(te.rep));
      b_end = intern(type_v, c_img.coset_rep(te.rep));
    } else {
      // te.rep = h with the edge {hA, htA}; hA is whichever endpoint holds h
      NormalForm h = te.rep;
      NormalForm ht = amb.mul(h, stable);
      a_end = intern(0, c_img.coset_rep(h));
      b_end = intern(0, c_img.coset_rep(ht));
    }
    add_edge(a_end, b_end);
    out.lift_edges.push_back({a_end, b_end});
    out.lift_tree_edge.push_back(ei);
  }

  // Base, distances, tags, labels.
  b.base = out.tree_vertex_base[out.tree.graph.base];
  b.dist = bfs_distances(b.adj, b.base);
  for (auto& nb : b.adj) std::sort(nb.begin(), nb.end());
  b.radius = *std::max_element(b.dist.begin(), b.dist.end());
  out.tree_depth = out.tree.graph.dist;
  // Vertices inside rim copies may miss lift edges to unbuilt copies.
  int rim_min = b.radius;
  for (int v = 0; v < b.num_vertices(); ++v)
    if (out.tree_depth[out.projection[v]] == tree_radius)
      rim_min = std::min(rim_min, b.dist[v]);
  b.complete_radius = std::max(0, rim_min - 1);
  b.metric_exact = false;
  b.tags.assign(b.num_vertices(), VertexTag{});
  for (int v = 0; v < b.num_vertices(); ++v) b.tags[v].copy = out.projection[v];
  if (opts.with_labels) {
    b.labels.reserve(b.num_vertices());
    for (int v = 0; v < b.num_vertices(); ++v)
      b.labels.push_back(amb.label(out.space_reps[v]) + "C@" +
                         G.vertex_name(out.tree.vertex_type[out.projection[v]]));
  }
  b.validate();
  return out;
}

TreeOfSpacesBall explicit_amalgam_space_ball(const ExplicitGraphModel& A,
                                             const ExplicitGraphModel& B,
                                             int tree_radius, int space_radius,
                                             const ExplicitAmalgamOptions& opts) {
  if (tree_radius < 0 || space_radius < 0)
    throw ConfigError("radii must be non-negative");
  const int metric_radius =
      opts.metric_radius > 0 ? opts.metric_radius
                             : std::max(space_radius, 2 * tree_radius + 1);

  TreeOfSpacesBall out;
  GraphBall& b = out.space;

  // Copies: id -> (type, depth, parent attach vertex, base space vertex).
  struct Copy {
    int type, depth, parent_vertex, base_vertex;
  };
  std::vector<Copy> copies;
  // Space vertices: (copy, local label) with the local distance to the copy
  // base tracked for the per-copy radius cap.
  struct SpaceVertex {
    int copy;
    std::string label;
    int local_dist;
    int child_copy = -1;
  };
  std::vector<SpaceVertex> verts;
  std::map<std::pair<int, std::string>, int> id;
  auto intern = [&](int copy, const std::string& label, int local_dist) {
    auto [it, fresh] = id.try_emplace({copy, label}, static_cast<int>(verts.size()));
    if (fresh) {
      verts.push_back({copy, label, local_dist, -1});
      b.adj.emplace_back();
      b.dist.push_back(-1);
      out.projection.push_back(copy);
    }
    return it->second;
  };
  auto model_of = [&](int type) -> const ExplicitGraphModel& {
    return type == 0 ? A : B;
  };
  auto add_edge = [&](int u, int v) {
    if (u != v && std::find(b.adj[u].begin(), b.adj[u].end(), v) == b.adj[u].end()) {
      b.adj[u].push_back(v);
      b.adj[v].push_back(u);
    }
  };

  copies.push_back({0, 0, -1, 0});
  int base = intern(0, A.base_label(), 0);
  copies[0].base_vertex = base;
  b.base = base;
  b.dist[base] = 0;
  std::queue<int> q;
  q.push(base);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (b.dist[v] == metric_radius) continue;
    const auto sv = verts[v];  // copy: expansion may reallocate verts
    const Copy cp = copies[sv.copy];
    // Intra-copy edges under the per-copy radius cap.
    if (sv.local_dist < space_radius) {
      for (const auto& nl : model_of(cp.type).neighbors(sv.label)) {
        int w = intern(sv.copy, nl, sv.local_dist + 1);
        if (verts[w].local_dist > sv.local_dist + 1)
          verts[w].local_dist = sv.local_dist + 1;
        if (b.dist[w] < 0) {
          b.dist[w] = b.dist[v] + 1;
          q.push(w);
        }
        add_edge(v, w);
      }
    }
    // The lift edge: back to the parent for a copy base, else to the base of
    // a fresh child copy (each vertex carries exactly one lift edge).
    int lift_target = -1;
    if (sv.label == model_of(cp.type).base_label() && cp.parent_vertex >= 0) {
      lift_target = cp.parent_vertex;  // edge already added from the parent side
    } else if (cp.depth + 1 <= tree_radius) {
      if (verts[v].child_copy < 0) {
        int child = static_cast<int>(copies.size());
        copies.push_back({1 - cp.type, cp.depth + 1, v, -1});
        int cbase = intern(child, model_of(1 - cp.type).base_label(), 0);
        copies[child].base_vertex = cbase;
        verts[v].child_copy = child;
        out.lift_edges.push_back({v, cbase});
      }
      lift_target = copies[verts[v].child_copy].base_vertex;
    }
    if (lift_target >= 0) {
      add_edge(v, lift_target);
      if (b.dist[lift_target] < 0) {
        b.dist[lift_target] = b.dist[v] + 1;
        q.push(lift_target);
      }
    }
  }
  for (auto& nb : b.adj) std::sort(nb.begin(), nb.end());
  b.radius = metric_radius;
  b.complete_radius = metric_radius - 1;
  b.metric_exact = false;
  b.tags.assign(b.num_vertices(), VertexTag{});
  for (int v = 0; v < b.num_vertices(); ++v) b.tags[v].copy = out.projection[v];
  if (opts.with_labels) {
    b.labels.reserve(b.num_vertices());
    for (const auto& sv : verts)
      b.labels.push_back("c" + std::to_string(sv.copy) + ":" +
                         (sv.label.empty() ? "<base>" : sv.label));
  }
  b.validate();

  // The Bass-Serre tree ball restricted to materialized copies.
  BassSerreBall& tree = out.tree;
  tree.graph.adj.assign(copies.size(), {});
  tree.graph.base = 0;
  tree.vertex_type.reserve(copies.size());
  out.tree_vertex_base.reserve(copies.size());
  out.tree_depth.reserve(copies.size());
  for (const auto& cp : copies) {
    tree.vertex_type.push_back(cp.type);
    out.tree_vertex_base.push_back(cp.base_vertex);
    out.tree_depth.push_back(cp.depth);
  }
  for (int c = 1; c < static_cast<int>(copies.size()); ++c) {
    int parent = out.projection[copies[c].parent_vertex];
    tree.graph.adj[c].push_back(parent);
    tree.graph.adj[parent].push_back(c);
    tree.edges.push_back({parent, c,
                          "v" + std::to_string(copies[c].parent_vertex), NormalForm{}});
  }
  // lift_tree_edge: lift edges were created in copy order 1..n-1
  out.lift_tree_edge.resize(out.lift_edges.size());
  for (std::size_t i = 0; i < out.lift_edges.size(); ++i)
    out.lift_tree_edge[i] = static_cast<int>(i);
  for (auto& nb : tree.graph.adj) std::sort(nb.begin(), nb.end());
  tree.graph.radius = tree_radius;
  tree.graph.dist = bfs_distances(tree.graph.adj, 0);
  tree.graph.complete_radius = tree_radius;
  tree.graph.metric_exact = true;
  tree.graph.labels.reserve(copies.size());
  for (std::size_t c = 0; c < copies.size(); ++c)
    tree.graph.labels.push_back("copy" + std::to_string(c) +
                                (copies[c].type == 0 ? "A" : "B"));
  tree.graph.validate();
  return out;
}

TreeOfSpacesBall augmented_tree_space(
    const AmbientGroup& amb, const TreeOfSpacesBall& t,
    const std::vector<std::vector<SubgroupSpec>>& peripherals_per_vertex, int depth) {
  bool any = false;
  for (const auto& fam : peripherals_per_vertex) any = any || !fam.empty();
  TreeOfSpacesBall out = t;
  out.horoball_depth = depth;
  out.core_size = t.space.num_vertices();
  if (!any) return out;
  if (t.space_reps.empty())
    throw NotATreeOfSpaces("augmentation needs a finite-model tree of spaces");

  // Peripheral copies inside each vertex space: cosets of H met by the copy.
  // Each copy's intrinsic ball is the Cayley-Abels ball of H over U = H/\C
  // (the subgroup's own graph, embedded along level 0).
  std::vector<CopyWithMetric> cms;
  int copy_counter = 0;
  const auto& G = amb.gog();
  SubgroupSpec c_spec = [&] {
    const auto& E = G.edge(0);
    std::vector<int> elems(E.group.order());
    for (int c = 0; c < E.group.order(); ++c) elems[c] = E.into_from.apply(c);
    std::sort(elems.begin(), elems.end());
    return SubgroupSpec::vertex_subgroup("C", E.from, std::move(elems));
  }();

  for (int w = 0; w < t.tree.graph.num_vertices(); ++w) {
    const int type = t.tree.vertex_type[w];
    if (type >= static_cast<int>(peripherals_per_vertex.size())) continue;
    for (int hi = 0; hi < static_cast<int>(peripherals_per_vertex[type].size()); ++hi) {
      const SubgroupSpec& H = peripherals_per_vertex[type][hi];
      SubgroupEngine h_eng(amb, H);
      if (!h_eng.finite())
        throw NotATreeOfSpaces("peripheral subgroups of finite models must be finite");
      // Intrinsic model: U = H /\ C inside H, S = all of H.
      std::vector<NormalForm> SH;
      for (const auto& h : h_eng.elements())
        if (!h.reduced_letters.empty()) SH.push_back(h);
      SubgroupEngine c_eng(amb, c_spec);
      std::vector<int> uh;  // H /\ C as elements of the vertex group
      for (const auto& h : h_eng.elements())
        if (c_eng.contains(h)) {
          if (h.reduced_letters.empty())
            uh.push_back(G.vertex_group(H.vertex).identity());
          else
            uh.push_back(h.reduced_letters[0].payload);
        }
      std::sort(uh.begin(), uh.end());
      auto U = SubgroupSpec::vertex_subgroup("UH", H.vertex, uh);
      GroupBall intrinsic =
          cayley_abels_ball(amb, U, SH, static_cast<int>(h_eng.elements().size()));

      // Bucket this copy's space vertices by H-coset.
      std::map<std::string, std::vector<int>> buckets;
      std::map<std::string, NormalForm> bucket_rep;
      for (int v = 0; v < t.space.num_vertices(); ++v) {
        if (t.projection[v] != w) continue;
        NormalForm rep = h_eng.coset_rep(t.space_reps[v]);
        buckets[nf_key(rep)].push_back(v);
        bucket_rep.try_emplace(nf_key(rep), rep);
      }
      for (auto& [key, members] : buckets) {
        CopyWithMetric cm;
        cm.copy.family = hi;
        cm.copy.copy = copy_counter++;
        cm.copy.label = "w" + std::to_string(w) + ":" + H.name + ":" +
                        amb.label(bucket_rep[key]);
        cm.copy.vertices = members;
        cm.intrinsic = intrinsic.graph;
        // Identify intrinsic vertex tU_H with the member in the same C-coset
        // translated by the bucket representative.
        cm.core_vertex_of.assign(intrinsic.graph.num_vertices(), -1);
        const NormalForm& trep = bucket_rep[key];
        SubgroupEngine c_local(amb, c_spec);
        for (int yi = 0; yi < intrinsic.graph.num_vertices(); ++yi) {
          NormalForm target = c_local.coset_rep(amb.mul(trep, intrinsic.reps[yi]));
          for (int v : members)
            if (c_local.coset_rep(t.space_reps[v]) == target) {
              cm.core_vertex_of[yi] = v;
              break;
            }
          if (cm.core_vertex_of[yi] < 0)
            throw CopyMetricMissing("intrinsic vertex of copy '" + cm.copy.label +
                                    "' missing from the space ball");
        }
        cms.push_back(std::move(cm));
      }
    }
  }
  auto aug = augmented(t.space, std::move(cms), depth);
  out.space = std::move(aug.graph);
  out.horo_coords = std::move(aug.horo_coords);
  out.core_size = aug.core_size;
  // Horoball vertices project to their copy's tree vertex; find it through
  // the copy's level-0 members recorded in horo_coords' copy index.
  out.projection.resize(out.space.num_vertices(), -1);
  for (int x = aug.core_size; x < out.space.num_vertices(); ++x) {
    // level-1 vertices touch level 0; walk down through the vertical edge
    int column_base = -1;
    for (int y : out.space.adj[x])
      if (y < aug.core_size) column_base = y;
    if (column_base < 0) {
      // deeper levels: copy projection from the vertex below (created earlier)
      for (int y : out.space.adj[x])
        if (y < x && out.projection[y] >= 0) column_base = y;
    }
    out.projection[x] = column_base >= 0 ? out.projection[column_base] : -1;
  }
  return out;
}

TreeSpaceChecks validate_tree_of_spaces(const TreeOfSpacesBall& t) {
  TreeSpaceChecks c;
  const GraphBall& s = t.space;
  const GraphBall& tree = t.tree.graph;

  c.projection_one_lipschitz = true;
  for (int v = 0; v < s.num_vertices() && c.projection_one_lipschitz; ++v)
    for (int w : s.adj[v]) {
      int pv = t.projection[v], pw = t.projection[w];
      if (pv == pw) continue;
      if (std::find(tree.adj[pv].begin(), tree.adj[pv].end(), pw) == tree.adj[pv].end()) {
        c.projection_one_lipschitz = false;
        c.detail += "edge " + std::to_string(v) + "-" + std::to_string(w) +
                    " projects to non-adjacent tree vertices; ";
        break;
      }
    }

  c.tree_acyclic = tree.num_edges() + 1 == static_cast<std::size_t>(tree.num_vertices());
  if (!c.tree_acyclic) c.detail += "tree ball has a cycle; ";

  c.lift_edges_biject_with_tree_edges = t.lift_edges.size() == t.tree.edges.size();
  if (c.lift_edges_biject_with_tree_edges) {
    std::set<int> seen;
    for (std::size_t i = 0; i < t.lift_edges.size(); ++i) {
      int te = t.lift_tree_edge[i];
      seen.insert(te);
      auto [u, v] = t.lift_edges[i];
      int pu = t.projection[u], pv = t.projection[v];
      const auto& e = t.tree.edges[te];
      if (!((pu == e.u && pv == e.v) || (pu == e.v && pv == e.u))) {
        c.lift_edges_biject_with_tree_edges = false;
        c.detail += "lift edge " + std::to_string(i) + " does not cover its tree edge; ";
        break;
      }
      if (t.core_size >= 0 && (u >= t.core_size || v >= t.core_size)) {
        c.lift_edges_biject_with_tree_edges = false;
        c.detail += "lift edge attaches above level 0; ";
        break;
      }
    }
    if (seen.size() != t.tree.edges.size())
      c.lift_edges_biject_with_tree_edges = false;
  } else {
    c.detail += "lift edge count " + std::to_string(t.lift_edges.size()) +
                " != tree edge count " + std::to_string(t.tree.edges.size()) + "; ";
  }

  c.every_vertex_in_a_copy = true;
  for (int v = 0; v < s.num_vertices(); ++v)
    if (t.projection[v] < 0 || t.projection[v] >= tree.num_vertices()) {
      c.every_vertex_in_a_copy = false;
      c.detail += "vertex " + std::to_string(v) + " has no copy; ";
      break;
    }

  // Horoball tags of distinct copies never share a vertex, and horoballs
  // attached in different vertex spaces are disjoint above level 0.
  c.peripheral_tags_disjoint = true;
  if (t.core_size >= 0)
    for (int x = t.core_size; x < s.num_vertices(); ++x)
      for (int y : s.adj[x])
        if (y >= t.core_size &&
            t.horo_coords[x - t.core_size].copy != t.horo_coords[y - t.core_size].copy) {
          c.peripheral_tags_disjoint = false;
          c.detail += "horoballs of distinct copies touch; ";
          break;
        }
  return c;
}

}  // namespace ggt
