#ifndef GGT_GRAPH_OF_GROUPS_HPP
#define GGT_GRAPH_OF_GROUPS_HPP

#include <string>
#include <vector>

#include "ggt/finite_group.hpp"

namespace ggt {

// A finite connected graph of finite groups.  Loops are allowed (HNN
// letters); every edge carries an edge group and two monomorphisms into the
// endpoint vertex groups.  A spanning tree (BFS from vertex 0, edges in id
// order) is fixed at construction; tree edges have their stable letters
// killed in the fundamental group, non-tree edges contribute stable letters.
class GraphOfFiniteGroups {
 public:
  struct Edge {
    int from = 0;
    int to = 0;
    FiniteGroup group;
    Monomorphism into_from;  // G_e -> G_from
    Monomorphism into_to;    // G_e -> G_to
    std::string name;
    bool in_tree = false;
  };

  GraphOfFiniteGroups(std::vector<FiniteGroup> vertex_groups,
                      std::vector<std::string> vertex_names, std::vector<Edge> edges);

  int num_vertices() const { return static_cast<int>(vertex_groups_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const FiniteGroup& vertex_group(int v) const { return vertex_groups_[v]; }
  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }

  // Tree path between vertices as a list of (edge id, +1 forward / -1 back).
  const std::vector<std::pair<int, int>>& tree_path(int from, int to) const;

  // Shape predicates used by the Bass-Serre builders.
  bool is_single_vertex() const { return num_vertices() == 1 && num_edges() == 0; }
  bool is_amalgam_shape() const {
    return num_vertices() == 2 && num_edges() == 1 && !is_loop(0);
  }
  bool is_hnn_shape() const { return num_vertices() == 1 && num_edges() == 1 && is_loop(0); }
  bool is_loop(int e) const { return edges_[e].from == edges_[e].to; }

  // Convenience constructors.
  static GraphOfFiniteGroups amalgam(FiniteGroup A, FiniteGroup B, FiniteGroup C,
                                     std::vector<int> c_into_a, std::vector<int> c_into_b,
                                     std::string a_name = "A", std::string b_name = "B");
  static GraphOfFiniteGroups hnn(FiniteGroup A, FiniteGroup C, std::vector<int> c_into_a,
                                 std::vector<int> c_into_a_twisted,
                                 std::string a_name = "A");
  static GraphOfFiniteGroups single(FiniteGroup A, std::string a_name = "A");

 private:
  std::vector<FiniteGroup> vertex_groups_;
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  // tree_paths_[u * V + v]
  std::vector<std::vector<std::pair<int, int>>> tree_paths_;
};

}  // namespace ggt

#endif
