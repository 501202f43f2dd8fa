#ifndef GGT_TESSELLATION_HPP
#define GGT_TESSELLATION_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "ggt/explicit_models.hpp"
#include "ggt/graph_ball.hpp"

namespace ggt {

// Regular tessellation {p,q}: p-gon faces, q around every vertex.  Requires
// p >= 4 and q >= 4 (layered disks then have simple boundary cycles, which
// the corona construction relies on); {4,4} is the square grid, anything with
// (p-2)(q-2) > 4 is hyperbolic.
//
// Construction grows coronas: vertices are closed (all q faces attached) in
// BFS order, so a vertex's creation layer is its graph distance from the
// base.  Balls are exact disks of the ideal tessellation.
class TessellationModel : public ExplicitGraphModel {
 public:
  TessellationModel(int p, int q);
  std::string name() const override;
  std::string base_label() const override { return "0"; }
  std::vector<std::string> neighbors(const std::string& label) const override;
  int degree_bound() const override { return q_; }
  GraphBall ball(int radius, bool with_labels = true) const override;

 private:
  int p_, q_;
};

// Streaming generation for balls too large to materialize: emits each vertex
// (id, layer) once and each edge (u, v) once, ids in creation order, base = 0.
// Edges are emitted only after both endpoints exist.  Generation stops once
// every vertex of layer < R is closed, so the emitted graph is exactly B(R).
void tessellation_stream(int p, int q, int R,
                         const std::function<void(std::uint32_t, int)>& on_vertex,
                         const std::function<void(std::uint32_t, std::uint32_t)>& on_edge);

}  // namespace ggt

#endif
