#ifndef GGT_TREESPACE_HPP
#define GGT_TREESPACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "ggt/builders.hpp"
#include "ggt/explicit_models.hpp"
#include "ggt/graph_ball.hpp"
#include "ggt/horoball.hpp"

namespace ggt {

// Ball of the Bass-Serre tree of an amalgam (single edge) or HNN extension
// (single loop).  Vertices are cosets gA / gB with canonical labels; edges
// carry coset-of-C labels.
struct BassSerreBall {
  GraphBall graph;
  std::vector<NormalForm> reps;  // canonical coset minimum per vertex
  std::vector<int> vertex_type;  // graph-of-groups vertex id (amalgam: 0/1)
  struct TreeEdge {
    int u, v;
    std::string coset_label;
    NormalForm rep;  // canonical representative h of the edge coset hC
  };
  std::vector<TreeEdge> edges;
};

// Throws UnsupportedShape unless G is a single edge (amalgam) or a single
// loop (HNN); general finite graphs of groups are assembled by iterating
// these two moves (see tree_of_spaces_ball).
BassSerreBall bass_serre_ball(const AmbientGroup& amb, int tree_radius);

// Tree of spaces: one vertex-space copy per Bass-Serre tree vertex, glued
// along lift edges, with the 1-Lipschitz projection to the tree.
struct TreeOfSpacesBall {
  GraphBall space;
  BassSerreBall tree;
  std::vector<int> projection;                 // space vertex -> tree vertex
  std::vector<std::pair<int, int>> lift_edges; // endpoints in the space
  std::vector<int> lift_tree_edge;             // aligned: index into tree.edges
  std::vector<int> tree_vertex_base;           // tree vertex -> entry vertex in space
  std::vector<int> tree_depth;                 // tree vertex -> depth from base copy
  std::vector<NormalForm> space_reps;          // finite models only
  // Augmentation bookkeeping (set by augmented_tree_space).
  int horoball_depth = -1;
  std::vector<AugmentedBall::HoroCoord> horo_coords;  // vertices >= core_size
  int core_size = -1;
};

// Amalgam / HNN tree of spaces over finite vertex groups, built exactly to
// the given tree radius.  Vertex spaces are the (finite) Cayley-Abels graphs
// of the vertex groups with U = the edge-group image, so every space vertex
// carries exactly one lift edge.  S defaults to the full vertex groups.
struct FiniteSpaceOptions {
  std::vector<NormalForm> S_A;  // empty = all nontrivial elements of A
  std::vector<NormalForm> S_B;
  bool with_labels = true;
};
TreeOfSpacesBall tree_of_spaces_ball(const AmbientGroup& amb, int tree_radius,
                                     const FiniteSpaceOptions& opts = {});

// Tree of spaces over explicit one-point-stabilizer proxies: vertex spaces
// are balls of the models, every space vertex sprouts one lift edge to the
// base of the adjacent copy.  The build is the metric ball of the capped
// ideal space: copy depth <= tree_radius, per-copy radius <= space_radius,
// global BFS radius = metric_radius (default max(space_radius,
// 2*tree_radius + 1)).
struct ExplicitAmalgamOptions {
  int metric_radius = -1;
  bool with_labels = false;
};
TreeOfSpacesBall explicit_amalgam_space_ball(const ExplicitGraphModel& A,
                                             const ExplicitGraphModel& B,
                                             int tree_radius, int space_radius,
                                             const ExplicitAmalgamOptions& opts = {});

// Replace every vertex space by its augmented Cayley-Abels ball: horoballs
// of depth D over the peripheral copies inside each vertex space.  The
// peripheral family is given per graph-of-groups vertex as subgroups of the
// vertex groups; lift edges attach at level 0 and are untouched.
TreeOfSpacesBall augmented_tree_space(const AmbientGroup& amb,
                                      const TreeOfSpacesBall& t,
                                      const std::vector<std::vector<SubgroupSpec>>&
                                          peripherals_per_vertex,
                                      int depth);

// Finite-scale structure checks (projection 1-Lipschitz, lift bijection,
// tree acyclicity, copy covering, tag disjointness across vertex spaces).
struct TreeSpaceChecks {
  bool projection_one_lipschitz = false;
  bool lift_edges_biject_with_tree_edges = false;
  bool tree_acyclic = false;
  bool every_vertex_in_a_copy = false;
  bool peripheral_tags_disjoint = false;
  bool ok() const {
    return projection_one_lipschitz && lift_edges_biject_with_tree_edges &&
           tree_acyclic && every_vertex_in_a_copy && peripheral_tags_disjoint;
  }
  std::string detail;
};
TreeSpaceChecks validate_tree_of_spaces(const TreeOfSpacesBall& t);

}  // namespace ggt

#endif
