#ifndef GGT_GRAPH_BALL_HPP
#define GGT_GRAPH_BALL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ggt {

// Per-vertex annotation: which construction produced the vertex.
struct VertexTag {
  enum class Kind : std::uint8_t {
    Plain = 0,      // ordinary coset of U / explicit-model vertex
    Peripheral,     // coset-of-H vertex of a relative Cayley-Abels graph
    Cone,           // cone point over a peripheral copy
    Horoball,       // horoball vertex at level >= 1
  };
  Kind kind = Kind::Plain;
  std::int32_t copy = -1;    // peripheral copy / cone copy / tree vertex id
  std::int16_t family = -1;  // peripheral subgroup index
  std::int16_t level = -1;   // horoball level

  friend bool operator==(const VertexTag& a, const VertexTag& b) {
    return a.kind == b.kind && a.copy == b.copy && a.family == b.family &&
           a.level == b.level;
  }
};

// A finite radius-R ball of a locally finite graph: canonical vertex labels,
// base vertex, exact adjacency.  Simple graph, connected, every vertex within
// BFS distance `radius` of the base, and every vertex strictly inside has its
// full neighborhood present.
//
// `complete_radius` is the largest radius at which neighborhoods are known
// complete (= radius for a plain ball, larger semantics irrelevant).  When a
// construction adjoins non-locally-finite vertices (peripheral cosets, cone
// points), the radius refers to the core metric and `has_adjoined_vertices`
// is set; the completeness invariant then applies to core vertices only.
//
// `metric_exact` records that internal BFS distances equal the distances of
// the ideal infinite graph (true for saturated balls and for bases built as
// explicitly convex pieces; false in general).
class GraphBall {
 public:
  int base = 0;
  int radius = 0;
  int complete_radius = 0;
  bool metric_exact = false;
  bool saturated = false;  // the ball exhausted the graph
  bool has_adjoined_vertices = false;
  std::vector<std::vector<int>> adj;
  std::vector<std::string> labels;  // empty when labels are suppressed
  std::vector<VertexTag> tags;      // empty means all Plain
  std::vector<int> dist;            // BFS distance from base

  int num_vertices() const { return static_cast<int>(adj.size()); }
  std::size_t num_edges() const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  const std::string& label(int v) const;
  VertexTag tag(int v) const {
    return tags.empty() ? VertexTag{} : tags[v];
  }

  // Recomputes `dist` and checks: simple graph, connected, radius bound.
  // Throws Error subclasses on violation.
  void validate();

  // Vertices at exact BFS distance r from the base.
  std::vector<int> sphere(int r) const;
};

// BFS from a single source over an adjacency list; -1 for unreachable.
std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int src);

// All-pairs BFS packed into a flat n*n matrix of uint16 (graph must be
// connected and small; 0xffff = unreachable).
std::vector<std::uint16_t> all_pairs_distances(const std::vector<std::vector<int>>& adj);

// Relabeling helper used by isomorphism-invariance tests: permutes vertices.
GraphBall relabel(const GraphBall& b, const std::vector<int>& perm);

// Small explicit graphs with exact metrics (calibration bases, test inputs).
GraphBall make_path_ball(int num_vertices);   // based at one end
GraphBall make_cycle_ball(int num_vertices);  // C_n

}  // namespace ggt

#endif
