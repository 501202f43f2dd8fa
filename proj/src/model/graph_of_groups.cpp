#include "ggt/graph_of_groups.hpp"

#include <algorithm>
#include <queue>

#include "ggt/errors.hpp"

namespace ggt {

GraphOfFiniteGroups::GraphOfFiniteGroups(std::vector<FiniteGroup> vertex_groups,
                                         std::vector<std::string> vertex_names,
                                         std::vector<Edge> edges)
    : vertex_groups_(std::move(vertex_groups)),
      vertex_names_(std::move(vertex_names)),
      edges_(std::move(edges)) {
  const int V = num_vertices();
  if (V == 0) throw MalformedWord("graph of groups needs at least one vertex");
  if (vertex_names_.empty())
    for (int v = 0; v < V; ++v) vertex_names_.push_back("v" + std::to_string(v));
  if (static_cast<int>(vertex_names_.size()) != V)
    throw MalformedWord("vertex name count mismatch");

  for (auto& e : edges_) {
    if (e.from < 0 || e.from >= V || e.to < 0 || e.to >= V)
      throw MalformedWord("edge endpoint out of range");
  }

  // BFS spanning tree from vertex 0, edges scanned in id order.
  std::vector<int> parent_edge(V, -1);
  std::vector<char> seen(V, 0);
  seen[0] = 1;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int ei = 0; ei < num_edges(); ++ei) {
      auto& e = edges_[ei];
      if (is_loop(ei)) continue;
      int other = -1;
      if (e.from == v && !seen[e.to]) other = e.to;
      if (e.to == v && !seen[e.from]) other = e.from;
      if (other < 0) continue;
      seen[other] = 1;
      parent_edge[other] = ei;
      e.in_tree = true;
      q.push(other);
    }
  }
  for (int v = 0; v < V; ++v)
    if (!seen[v]) throw MalformedWord("underlying graph is not connected");

  // Precompute tree paths for all ordered vertex pairs.
  // Path to root first, then join through the common prefix.
  std::vector<std::vector<std::pair<int, int>>> to_root(V);
  for (int v = 0; v < V; ++v) {
    int cur = v;
    while (parent_edge[cur] >= 0) {
      int ei = parent_edge[cur];
      const auto& e = edges_[ei];
      // Traverse toward the root: if cur == e.to we go backwards (to->from).
      if (e.to == cur) {
        to_root[v].push_back({ei, -1});
        cur = e.from;
      } else {
        to_root[v].push_back({ei, +1});
        cur = e.to;
      }
    }
  }
  tree_paths_.resize(static_cast<size_t>(V) * V);
  for (int u = 0; u < V; ++u)
    for (int v = 0; v < V; ++v) {
      auto up = to_root[u];    // u -> root
      auto down = to_root[v];  // v -> root
      // Strip common suffix (shared path to root).
      while (!up.empty() && !down.empty() && up.back() == down.back()) {
        up.pop_back();
        down.pop_back();
      }
      auto& path = tree_paths_[static_cast<size_t>(u) * V + v];
      path = up;
      for (auto it = down.rbegin(); it != down.rend(); ++it)
        path.push_back({it->first, -it->second});
    }
}

const std::vector<std::pair<int, int>>& GraphOfFiniteGroups::tree_path(int from,
                                                                       int to) const {
  return tree_paths_[static_cast<size_t>(from) * num_vertices() + to];
}

GraphOfFiniteGroups GraphOfFiniteGroups::amalgam(FiniteGroup A, FiniteGroup B,
                                                 FiniteGroup C, std::vector<int> c_into_a,
                                                 std::vector<int> c_into_b,
                                                 std::string a_name, std::string b_name) {
  Edge e;
  e.from = 0;
  e.to = 1;
  e.into_from = Monomorphism::validate(C, A, std::move(c_into_a));
  e.into_to = Monomorphism::validate(C, B, std::move(c_into_b));
  e.group = std::move(C);
  e.name = "c";
  return GraphOfFiniteGroups({std::move(A), std::move(B)},
                             {std::move(a_name), std::move(b_name)}, {std::move(e)});
}

GraphOfFiniteGroups GraphOfFiniteGroups::hnn(FiniteGroup A, FiniteGroup C,
                                             std::vector<int> c_into_a,
                                             std::vector<int> c_into_a_twisted,
                                             std::string a_name) {
  Edge e;
  e.from = 0;
  e.to = 0;
  e.into_from = Monomorphism::validate(C, A, std::move(c_into_a));
  e.into_to = Monomorphism::validate(C, A, std::move(c_into_a_twisted));
  e.group = std::move(C);
  e.name = "t";
  return GraphOfFiniteGroups({std::move(A)}, {std::move(a_name)}, {std::move(e)});
}

GraphOfFiniteGroups GraphOfFiniteGroups::single(FiniteGroup A, std::string a_name) {
  return GraphOfFiniteGroups({std::move(A)}, {std::move(a_name)}, {});
}

}  // namespace ggt
