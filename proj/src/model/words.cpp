#include "ggt/words.hpp"

#include <algorithm>

#include "ggt/errors.hpp"

namespace ggt {

void check_word(const Word& w, const GraphOfFiniteGroups& G) {
  for (const auto& l : w) {
    if (l.kind == Letter::Kind::VertexElement) {
      if (l.id < 0 || l.id >= G.num_vertices())
        throw MalformedWord("vertex id " + std::to_string(l.id) + " out of range");
      if (l.payload < 0 || l.payload >= G.vertex_group(l.id).order())
        throw MalformedWord("element " + std::to_string(l.payload) +
                            " out of range for vertex " + std::to_string(l.id));
    } else {
      if (l.id < 0 || l.id >= G.num_edges())
        throw MalformedWord("edge id " + std::to_string(l.id) + " out of range");
      if (l.payload != 1 && l.payload != -1)
        throw MalformedWord("edge exponent must be +-1, got " +
                            std::to_string(l.payload));
    }
  }
}

namespace {

// One traversal of an edge followed by a vertex-group element at the arrival
// vertex.  A word becomes a loop at vertex 0: a leading element g0 and a
// sequence of steps whose traversals form a closed edge path.
struct PathStep {
  int edge;
  int dir;   // +1: from -> to, -1: to -> from
  int elem;  // element of the arrival vertex group
};

int arrival_vertex(const GraphOfFiniteGroups& G, const PathStep& s) {
  return s.dir > 0 ? G.edge(s.edge).to : G.edge(s.edge).from;
}

struct PathWord {
  const GraphOfFiniteGroups& G;
  int g0;
  std::vector<PathStep> steps;
  int cur = 0;

  explicit PathWord(const GraphOfFiniteGroups& g)
      : G(g), g0(g.vertex_group(0).identity()) {}

  void mul_here(int v, int x) {
    if (steps.empty())
      g0 = G.vertex_group(0).op(g0, x);
    else
      steps.back().elem = G.vertex_group(v).op(steps.back().elem, x);
  }

  void walk_tree_to(int v) {
    for (auto [e, dir] : G.tree_path(cur, v)) {
      int arr = dir > 0 ? G.edge(e).to : G.edge(e).from;
      steps.push_back({e, dir, G.vertex_group(arr).identity()});
    }
    cur = v;
  }

  void append_vertex(int v, int g) {
    walk_tree_to(v);
    mul_here(v, g);
  }

  void append_edge(int e, int exp) {
    int start = exp > 0 ? G.edge(e).from : G.edge(e).to;
    int end = exp > 0 ? G.edge(e).to : G.edge(e).from;
    walk_tree_to(start);
    steps.push_back({e, exp, G.vertex_group(end).identity()});
    cur = end;
  }

  void close_loop() { walk_tree_to(0); }
};

// Remove backtracks e^eps (c in image) e^-eps, cascading until reduced.
void reduce_backtracks(PathWord& p) {
  auto& steps = p.steps;
  const auto& G = p.G;
  size_t i = 0;
  while (!steps.empty() && i + 1 < steps.size()) {
    PathStep& s1 = steps[i];
    PathStep& s2 = steps[i + 1];
    if (s1.edge == s2.edge && s1.dir == -s2.dir) {
      const auto& E = G.edge(s1.edge);
      const Monomorphism& at_mid = s1.dir > 0 ? E.into_to : E.into_from;
      int c = at_mid.preimage(s1.elem);
      if (c >= 0) {
        const Monomorphism& at_out = s1.dir > 0 ? E.into_from : E.into_to;
        int outer_v = s1.dir > 0 ? E.from : E.to;
        const FiniteGroup& Gv = G.vertex_group(outer_v);
        int combined = Gv.op(at_out.apply(c), s2.elem);
        steps.erase(steps.begin() + i, steps.begin() + i + 2);
        if (i == 0)
          p.g0 = G.vertex_group(0).op(p.g0, combined);
        else
          steps[i - 1].elem = Gv.op(steps[i - 1].elem, combined);
        if (i > 0) --i;
        continue;
      }
    }
    ++i;
  }
}

// Pin each step element to the index-minimal right-coset representative of
// the relevant edge-group image, pushing the remainder leftward through the
// traversal into the previous element (ultimately into g0).
void canonicalize(PathWord& p) {
  const auto& G = p.G;
  for (int i = static_cast<int>(p.steps.size()) - 1; i >= 0; --i) {
    PathStep& s = p.steps[i];
    const auto& E = G.edge(s.edge);
    const Monomorphism& at_w = s.dir > 0 ? E.into_to : E.into_from;
    const Monomorphism& at_other = s.dir > 0 ? E.into_from : E.into_to;
    int w = arrival_vertex(G, s);
    const FiniteGroup& Gw = G.vertex_group(w);
    int rep = s.elem;
    for (int c = 0; c < E.group.order(); ++c)
      rep = std::min(rep, Gw.op(at_w.apply(c), s.elem));
    int c = at_w.preimage(Gw.op(s.elem, Gw.inv(rep)));
    s.elem = rep;
    int carry = at_other.apply(c);
    if (i == 0) {
      p.g0 = G.vertex_group(0).op(p.g0, carry);
    } else {
      int prev_v = arrival_vertex(G, p.steps[i - 1]);
      p.steps[i - 1].elem = G.vertex_group(prev_v).op(p.steps[i - 1].elem, carry);
    }
  }
}

NormalForm render_letters(const PathWord& p) {
  NormalForm nf;
  const auto& G = p.G;
  if (p.g0 != G.vertex_group(0).identity())
    nf.reduced_letters.push_back(Letter::vertex(0, p.g0));
  for (const auto& s : p.steps) {
    if (!G.edge(s.edge).in_tree)
      nf.reduced_letters.push_back(Letter::edge(s.edge, s.dir));
    int v = arrival_vertex(G, s);
    if (s.elem != G.vertex_group(v).identity())
      nf.reduced_letters.push_back(Letter::vertex(v, s.elem));
  }
  nf.canonical = true;
  return nf;
}

}  // namespace

NormalForm reduce(const Word& w, const GraphOfFiniteGroups& G) {
  check_word(w, G);
  PathWord p(G);
  for (const auto& l : w) {
    if (l.kind == Letter::Kind::VertexElement)
      p.append_vertex(l.id, l.payload);
    else if (!G.edge(l.id).in_tree)
      p.append_edge(l.id, l.payload);
    // stable letters of tree edges are the identity
  }
  p.close_loop();
  reduce_backtracks(p);
  canonicalize(p);
  return render_letters(p);
}

bool equal(const Word& w1, const Word& w2, const GraphOfFiniteGroups& G) {
  return reduce(w1, G) == reduce(w2, G);
}

NormalForm nf_identity() {
  NormalForm nf;
  nf.canonical = true;
  return nf;
}

NormalForm nf_multiply(const NormalForm& a, const NormalForm& b,
                       const GraphOfFiniteGroups& G) {
  Word w = a.reduced_letters;
  w.insert(w.end(), b.reduced_letters.begin(), b.reduced_letters.end());
  return reduce(w, G);
}

NormalForm nf_inverse(const NormalForm& a, const GraphOfFiniteGroups& G) {
  Word w;
  for (auto it = a.reduced_letters.rbegin(); it != a.reduced_letters.rend(); ++it) {
    if (it->kind == Letter::Kind::VertexElement)
      w.push_back(Letter::vertex(it->id, G.vertex_group(it->id).inv(it->payload)));
    else
      w.push_back(Letter::edge(it->id, -it->payload));
  }
  return reduce(w, G);
}

NormalForm nf_power(const NormalForm& a, int k, const GraphOfFiniteGroups& G) {
  NormalForm base = k < 0 ? nf_inverse(a, G) : a;
  int n = k < 0 ? -k : k;
  NormalForm acc = nf_identity();
  for (int i = 0; i < n; ++i) acc = nf_multiply(acc, base, G);
  return acc;
}

std::string render(const NormalForm& nf, const GraphOfFiniteGroups& G) {
  if (nf.reduced_letters.empty()) return "1";
  std::string out;
  for (const auto& l : nf.reduced_letters) {
    if (!out.empty()) out += "*";
    if (l.kind == Letter::Kind::VertexElement) {
      if (G.num_vertices() > 1) out += G.vertex_name(l.id) + ".";
      out += G.vertex_group(l.id).name_of(l.payload);
    } else {
      out += G.edge(l.id).name;
      if (l.payload < 0) out += "~";
    }
  }
  return out;
}

std::string nf_key(const NormalForm& nf) {
  std::string key;
  key.reserve(nf.reduced_letters.size() * 6);
  for (const auto& l : nf.reduced_letters) {
    key.push_back(l.kind == Letter::Kind::VertexElement ? 'v' : 'e');
    key += std::to_string(l.id);
    key.push_back(l.payload < 0 ? '-' : '.');
    key += std::to_string(l.payload < 0 ? -l.payload : l.payload);
  }
  return key;
}

}  // namespace ggt
