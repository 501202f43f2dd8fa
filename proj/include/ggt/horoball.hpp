#ifndef GGT_HOROBALL_HPP
#define GGT_HOROBALL_HPP

#include <utility>
#include <vector>

#include "ggt/builders.hpp"
#include "ggt/graph_ball.hpp"

namespace ggt {

// Combinatorial horoball over a finite base graph, truncated at level D.
// Vertices are pairs (v, k), 0 <= k <= D.  Level 0 carries the base edges;
// at level k >= 1 two distinct columns are joined iff their base distance is
// at most 2^k; vertical edges join (v,k) and (v,k+1).
struct HoroballGraph {
  GraphBall graph;  // base vertex = (base.base, 0)
  int depth = 0;
  std::vector<std::pair<int, int>> coords;  // vertex -> (base vertex, level)
  int vertex_at(int base_vertex, int level) const {
    return level * base_size + base_vertex;
  }
  int base_size = 0;
};

// Throws CurtailedBase if the base's internal metric is not exact (the level
// edge rule needs true distances).
HoroballGraph horoball(const GraphBall& base, int depth);

// All level-0 pairs: (base distance, horoball distance).  Requires the depth
// to clear ceil(log2(diam)) so no profile entry is truncation-limited
// (DepthTooSmall otherwise).
struct DistanceProfile {
  // profile[d] = set of observed horoball distances for base distance d
  std::vector<std::vector<int>> by_base_distance;  // index: base distance
};
DistanceProfile horoball_distance_profile(const HoroballGraph& h);

// A peripheral copy equipped with its own intrinsic ball (the subgroup's
// Cayley-Abels ball embedded per the distortion lemma), identified with core
// vertices along level 0.
struct CopyWithMetric {
  PeripheralCopy copy;
  GraphBall intrinsic;
  std::vector<int> core_vertex_of;  // intrinsic vertex id -> core vertex id
};

struct AugmentedBall {
  GraphBall graph;  // core graph with horoball vertices appended
  int depth = 0;
  int core_size = 0;
  // horoball vertex -> (copy index, intrinsic vertex, level >= 1)
  struct HoroCoord {
    int copy, column, level;
  };
  std::vector<HoroCoord> horo_coords;  // for vertices >= core_size
};

// Augmented Cayley-Abels ball: the core plus one depth-D horoball per copy,
// glued along level 0.  Level edges use each copy's intrinsic metric, not
// the ambient one.  Copies are processed in label order.
AugmentedBall augmented(const GraphBall& core, std::vector<CopyWithMetric> copies,
                        int depth);

// Default truncation depth: ceil(log2(base diameter)) + 2 (deeper levels are
// cliques and cannot shorten level-0 distances).
int default_horoball_depth(const GraphBall& base);

}  // namespace ggt

#endif
