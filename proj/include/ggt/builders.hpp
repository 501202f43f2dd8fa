#ifndef GGT_BUILDERS_HPP
#define GGT_BUILDERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ggt/graph_ball.hpp"
#include "ggt/graph_of_groups.hpp"
#include "ggt/words.hpp"

namespace ggt {

// The ambient group for ball building: the fundamental group of a graph of
// finite groups.  A plain finite group is the single-vertex case.  Elements
// are canonical normal forms.
class AmbientGroup {
 public:
  explicit AmbientGroup(GraphOfFiniteGroups g) : G_(std::move(g)) {}
  explicit AmbientGroup(FiniteGroup g)
      : G_(GraphOfFiniteGroups::single(std::move(g))) {}

  const GraphOfFiniteGroups& gog() const { return G_; }
  NormalForm id() const { return nf_identity(); }
  NormalForm mul(const NormalForm& a, const NormalForm& b) const {
    return nf_multiply(a, b, G_);
  }
  NormalForm inv(const NormalForm& a) const { return nf_inverse(a, G_); }
  NormalForm pow(const NormalForm& a, int k) const { return nf_power(a, k, G_); }
  NormalForm elem(const Word& w) const { return reduce(w, G_); }
  std::string label(const NormalForm& a) const { return render(a, G_); }

 private:
  GraphOfFiniteGroups G_;
};

// A finitely describable subgroup usable as U (compact open proxy) or as a
// peripheral H: either a verified subgroup of one vertex group, or the
// cyclic subgroup generated by a word.
struct SubgroupSpec {
  enum class Kind { Trivial, VertexSubgroup, Cyclic };
  Kind kind = Kind::Trivial;
  std::string name;
  int vertex = 0;
  std::vector<int> elements;  // VertexSubgroup
  Word generator;             // Cyclic

  static SubgroupSpec trivial(std::string name = "1") {
    SubgroupSpec s;
    s.kind = Kind::Trivial;
    s.name = std::move(name);
    return s;
  }
  static SubgroupSpec vertex_subgroup(std::string name, int vertex,
                                      std::vector<int> elements) {
    SubgroupSpec s;
    s.kind = Kind::VertexSubgroup;
    s.name = std::move(name);
    s.vertex = vertex;
    s.elements = std::move(elements);
    return s;
  }
  static SubgroupSpec cyclic(std::string name, Word generator) {
    SubgroupSpec s;
    s.kind = Kind::Cyclic;
    s.name = std::move(name);
    s.generator = std::move(generator);
    return s;
  }
};

// Coset bookkeeping for a SubgroupSpec inside an ambient group.  Verifies the
// spec at construction (NotASubgroup).  Cyclic subgroups of infinite order
// are handled through a scan window wide enough for every query actually
// made (window grows with the element's length).
class SubgroupEngine {
 public:
  SubgroupEngine(const AmbientGroup& amb, const SubgroupSpec& spec);

  // Canonical minimum of the left coset g*H, and its map key.
  NormalForm coset_rep(const NormalForm& g) const;
  std::string coset_key(const NormalForm& g) const { return nf_key(coset_rep(g)); }
  bool contains(const NormalForm& g) const;
  // All elements for finite subgroups; throws for infinite cyclic.
  std::vector<NormalForm> elements() const;
  bool finite() const { return finite_; }
  int order() const { return static_cast<int>(elems_.size()); }
  const SubgroupSpec& spec() const { return spec_; }

 private:
  const AmbientGroup& amb_;
  SubgroupSpec spec_;
  bool finite_ = true;
  std::vector<NormalForm> elems_;  // finite case
  NormalForm gen_;                 // cyclic case
};

// A Cayley-Abels ball together with the group elements representing its
// coset vertices (index-aligned with the graph).
struct GroupBall {
  GraphBall graph;
  std::vector<NormalForm> reps;
  // For relative balls: first index that is a peripheral coset vertex.
  int num_core = 0;
};

struct BallOptions {
  bool with_labels = true;
  // Declares that balls of this group with these generators are geodesically
  // convex pieces of the ideal graph (lines, cycles, trees), making internal
  // distances exact.
  bool convex_hint = false;
};

// Ball of the Cayley-Abels graph X(K,U,S): vertices are left cosets gU
// reachable within r steps of U, edges {gU, gsU} for s in S.  S must be
// symmetric (NotSymmetricGeneratingSet names the witness); S need not
// generate (the ball is then a ball of the component of the base).
GroupBall cayley_abels_ball(const AmbientGroup& amb, const SubgroupSpec& U,
                            const std::vector<NormalForm>& S, int r,
                            const BallOptions& opts = {});

// Relative version: adjoins one coset-of-H vertex per peripheral subgroup
// coset met by the core, with edges {gU, guH}.  The radius refers to the
// S-metric on the core; peripheral vertices are adjoined (the relative graph
// is not locally finite, so they do not carry completeness claims).
GroupBall relative_cayley_abels_ball(const AmbientGroup& amb, const SubgroupSpec& U,
                                     const std::vector<NormalForm>& S,
                                     const std::vector<SubgroupSpec>& H, int r,
                                     const BallOptions& opts = {});

// A peripheral copy Y_{i,t}: the vertices of one coset of H_i inside a ball.
struct PeripheralCopy {
  int family = 0;            // index of H_i
  int copy = 0;              // id within the family
  std::string label;         // transversal representative label
  std::vector<int> vertices; // core vertex ids, in ball order
};

// Copies are orbits of coset labels sharing a transversal representative.
std::vector<PeripheralCopy> discover_peripheral_copies(
    const AmbientGroup& amb, const GroupBall& ball,
    const std::vector<SubgroupSpec>& H);

// Coned-off graph: one new cone vertex per copy, joined to every member.
GraphBall coned_off(const GraphBall& X, const std::vector<PeripheralCopy>& copies);

// Distortion table eta(1..n_max) for an embedded subgraph ball Y inside X:
// eta(n) = max intrinsic distance d_Y(base, y) over y with ambient distance
// d_X(base, iota(y)) <= n.  iota must be injective and base-preserving.
std::vector<int> embedding_distortion(const GraphBall& Y, const GraphBall& X,
                                      const std::vector<int>& inclusion, int n_max);

}  // namespace ggt

#endif
