#include "ggt/explicit_models.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "ggt/errors.hpp"
#include "ggt/tessellation.hpp"

namespace ggt {

GraphBall ExplicitGraphModel::ball(int radius, bool with_labels) const {
  if (radius < 0) throw ConfigError("radius must be non-negative");
  GraphBall b;
  b.radius = radius;
  std::map<std::string, int> id;
  std::vector<std::string> lab;
  std::queue<int> q;
  auto intern = [&](const std::string& l) {
    auto [it, fresh] = id.try_emplace(l, static_cast<int>(lab.size()));
    if (fresh) {
      lab.push_back(l);
      b.adj.emplace_back();
      b.dist.push_back(-1);
    }
    return it->second;
  };
  int base = intern(base_label());
  b.base = base;
  b.dist[base] = 0;
  q.push(base);
  bool frontier_open = false;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    bool at_rim = b.dist[v] == radius;
    for (const auto& nl : neighbors(lab[v])) {
      int w;
      if (at_rim) {
        // Keep sphere-to-sphere edges but do not grow past the radius.
        auto it = id.find(nl);
        if (it == id.end()) {
          frontier_open = true;
          continue;
        }
        w = it->second;
      } else {
        w = intern(nl);
      }
      if (b.dist[w] < 0) {
        b.dist[w] = b.dist[v] + 1;
        q.push(w);
      }
      if (w > v &&
          std::find(b.adj[v].begin(), b.adj[v].end(), w) == b.adj[v].end()) {
        b.adj[v].push_back(w);
        b.adj[w].push_back(v);
      }
    }
  }
  for (auto& nb : b.adj) std::sort(nb.begin(), nb.end());
  b.complete_radius = radius;
  b.saturated = !frontier_open;
  b.metric_exact = true;  // balls of these models are convex disks
  if (with_labels) b.labels = std::move(lab);
  b.validate();
  return b;
}

RegularTreeModel::RegularTreeModel(int degree) : d_(degree) {
  if (degree < 3) throw ConfigError("regular tree needs degree >= 3");
}

std::string RegularTreeModel::name() const { return "tree_" + std::to_string(d_); }

std::vector<std::string> RegularTreeModel::neighbors(const std::string& label) const {
  std::vector<std::string> out;
  if (label.empty()) {
    for (int c = 0; c < d_; ++c) out.push_back(std::to_string(c));
    return out;
  }
  auto dot = label.rfind('.');
  out.push_back(dot == std::string::npos ? "" : label.substr(0, dot));
  for (int c = 0; c < d_ - 1; ++c) out.push_back(label + "." + std::to_string(c));
  return out;
}

std::vector<std::string> SquareGridModel::neighbors(const std::string& label) const {
  auto comma = label.find(',');
  if (comma == std::string::npos) throw ConfigError("bad grid label: " + label);
  long x = std::stol(label.substr(0, comma));
  long y = std::stol(label.substr(comma + 1));
  auto mk = [](long a, long b) { return std::to_string(a) + "," + std::to_string(b); };
  return {mk(x + 1, y), mk(x - 1, y), mk(x, y + 1), mk(x, y - 1)};
}

std::unique_ptr<ExplicitGraphModel> make_preset_model(const std::string& spec) {
  // "tree:3", "grid", "tessellation:4,5"
  if (spec == "grid") return std::make_unique<SquareGridModel>();
  auto colon = spec.find(':');
  std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "tree") {
    if (args.empty()) throw UnknownPreset("tree needs a degree, e.g. tree:3");
    return std::make_unique<RegularTreeModel>(std::stoi(args));
  }
  if (kind == "tessellation") {
    auto comma = args.find(',');
    if (comma == std::string::npos)
      throw UnknownPreset("tessellation needs p,q, e.g. tessellation:4,5");
    return std::make_unique<TessellationModel>(std::stoi(args.substr(0, comma)),
                                               std::stoi(args.substr(comma + 1)));
  }
  throw UnknownPreset("unknown preset graph '" + spec + "'");
}

}  // namespace ggt
