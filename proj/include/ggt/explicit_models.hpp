#ifndef GGT_EXPLICIT_MODELS_HPP
#define GGT_EXPLICIT_MODELS_HPP

#include <memory>
#include <string>
#include <vector>

#include "ggt/graph_ball.hpp"

namespace ggt {

// A deterministic rule producing the neighbor list of any vertex label.
// The rule is symmetric (u in N(v) iff v in N(u)) and degree-bounded; balls
// of these models are exact pieces of the ideal infinite graph, so their
// internal metric is exact.
class ExplicitGraphModel {
 public:
  virtual ~ExplicitGraphModel() = default;
  virtual std::string name() const = 0;
  virtual std::string base_label() const = 0;
  virtual std::vector<std::string> neighbors(const std::string& label) const = 0;
  virtual int degree_bound() const = 0;

  // Materializes the radius-r ball around the base by BFS on labels.
  virtual GraphBall ball(int radius, bool with_labels = true) const;
};

// Regular tree T_d: the root has d children, every other vertex d-1.
// Labels are child-paths like "2.0.1" ("" is the root).
class RegularTreeModel : public ExplicitGraphModel {
 public:
  explicit RegularTreeModel(int degree);
  std::string name() const override;
  std::string base_label() const override { return ""; }
  std::vector<std::string> neighbors(const std::string& label) const override;
  int degree_bound() const override { return d_; }

 private:
  int d_;
};

// Square grid Z^2 with labels "x,y".
class SquareGridModel : public ExplicitGraphModel {
 public:
  std::string name() const override { return "grid"; }
  std::string base_label() const override { return "0,0"; }
  std::vector<std::string> neighbors(const std::string& label) const override;
  int degree_bound() const override { return 4; }
};

std::unique_ptr<ExplicitGraphModel> make_preset_model(const std::string& spec);

}  // namespace ggt

#endif
