#ifndef GGT_TESTS_REWRITING_ORACLE_HPP
#define GGT_TESTS_REWRITING_ORACLE_HPP

// Independent word-problem oracle: congruence closure of the presentation
// relations by exhaustive rewriting.  States are "locally reduced" words (no
// identity letters, no adjacent same-vertex letters, no spanning-tree stable
// letters); moves are the elementary relation applications.  Two words are
// oracle-equal iff they lie in the same component of the move graph explored
// within a length cap.  Nothing here calls reduce(); the closure is the
// ground truth the implementation is compared against.

#include <functional>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "ggt/graph_of_groups.hpp"
#include "ggt/words.hpp"

namespace ggt_test {

using ggt::GraphOfFiniteGroups;
using ggt::Letter;
using ggt::Word;

class RewritingOracle {
 public:
  RewritingOracle(const GraphOfFiniteGroups& G, int max_state_len)
      : G_(G), cap_(max_state_len) {}

  // Locally reduced representative of a raw word.
  Word normalize(const Word& w) const {
    Word out;
    for (const auto& l : w) {
      if (l.kind == Letter::Kind::EdgeLetter && G_.edge(l.id).in_tree) continue;
      push_merged(out, l);
    }
    return out;
  }

  // All successors under one elementary move, normalized, within the cap.
  std::vector<Word> moves(const Word& w) const {
    std::vector<Word> out;
    const int n = static_cast<int>(w.size());
    // M1: peel an edge-group piece off a syllable and transfer it across a
    // spanning-tree edge (whole-letter transfer is the trivial-remainder case).
    for (int i = 0; i < n; ++i) {
      if (w[i].kind != Letter::Kind::VertexElement) continue;
      for (int ei = 0; ei < G_.num_edges(); ++ei) {
        const auto& E = G_.edge(ei);
        if (!E.in_tree) continue;
        for (int side = 0; side < 2; ++side) {
          int v = side == 0 ? E.from : E.to;
          if (w[i].id != v) continue;
          int other = side == 0 ? E.to : E.from;
          const ggt::Monomorphism& here = side == 0 ? E.into_from : E.into_to;
          const ggt::Monomorphism& there = side == 0 ? E.into_to : E.into_from;
          const auto& Gv = G_.vertex_group(v);
          for (int c = 0; c < E.group.order(); ++c) {
            if (c == E.group.identity()) continue;
            int cinv = E.group.inv(c);
            {  // right peel: x = y * i_v(c)  ->  y, i_other(c)
              Word m;
              m.insert(m.end(), w.begin(), w.begin() + i);
              m.push_back(Letter::vertex(v, Gv.op(w[i].payload, here.apply(cinv))));
              m.push_back(Letter::vertex(other, there.apply(c)));
              m.insert(m.end(), w.begin() + i + 1, w.end());
              add(out, renorm(m));
            }
            {  // left peel: x = i_v(c) * y  ->  i_other(c), y
              Word m;
              m.insert(m.end(), w.begin(), w.begin() + i);
              m.push_back(Letter::vertex(other, there.apply(c)));
              m.push_back(Letter::vertex(v, Gv.op(here.apply(cinv), w[i].payload)));
              m.insert(m.end(), w.begin() + i + 1, w.end());
              add(out, renorm(m));
            }
          }
        }
      }
    }
    // M2: slide an edge-group element through a stable letter.
    for (int i = 0; i < n; ++i) {
      if (w[i].kind != Letter::Kind::EdgeLetter) continue;
      const auto& E = G_.edge(w[i].id);
      for (int c = 0; c < E.group.order(); ++c) {
        if (c == E.group.identity()) continue;
        Word m;
        m.reserve(w.size() + 2);
        m.insert(m.end(), w.begin(), w.begin() + i);
        int cinv = E.group.inv(c);
        if (w[i].payload > 0) {
          m.push_back(Letter::vertex(E.from, E.into_from.apply(c)));
          m.push_back(w[i]);
          m.push_back(Letter::vertex(E.to, E.into_to.apply(cinv)));
        } else {
          m.push_back(Letter::vertex(E.to, E.into_to.apply(c)));
          m.push_back(w[i]);
          m.push_back(Letter::vertex(E.from, E.into_from.apply(cinv)));
        }
        m.insert(m.end(), w.begin() + i + 1, w.end());
        add(out, renorm(m));
      }
    }
    // M3: delete an adjacent stable-letter pair.
    for (int i = 0; i + 1 < n; ++i) {
      if (w[i].kind == Letter::Kind::EdgeLetter &&
          w[i + 1].kind == Letter::Kind::EdgeLetter && w[i].id == w[i + 1].id &&
          w[i].payload == -w[i + 1].payload) {
        Word m = w;
        m.erase(m.begin() + i, m.begin() + i + 2);
        add(out, renorm(m));
      }
    }
    // M4: insert a cancelling stable-letter pair.
    for (int i = 0; i <= n; ++i) {
      for (int ei = 0; ei < G_.num_edges(); ++ei) {
        if (G_.edge(ei).in_tree) continue;
        for (int exp : {1, -1}) {
          Word m = w;
          m.insert(m.begin() + i, {Letter::edge(ei, exp), Letter::edge(ei, -exp)});
          add(out, renorm(m));
        }
      }
    }
    return out;
  }

  // Component ids for the given (raw) words under the bounded closure.
  std::vector<int> components(const std::vector<Word>& universe) {
    std::unordered_map<std::string, int> id;
    std::vector<int> parent;
    std::vector<Word> state_of;
    auto intern = [&](const Word& w) {
      auto [it, fresh] = id.try_emplace(key(w), static_cast<int>(parent.size()));
      if (fresh) {
        parent.push_back(it->second);
        state_of.push_back(w);
      }
      return it->second;
    };
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    std::queue<int> bfs;
    std::vector<int> universe_state;
    universe_state.reserve(universe.size());
    for (const auto& w : universe) {
      Word s = normalize(w);
      int before = static_cast<int>(parent.size());
      int sid = intern(s);
      universe_state.push_back(sid);
      if (sid >= before) bfs.push(sid);
    }
    while (!bfs.empty()) {
      int sid = bfs.front();
      bfs.pop();
      Word s = state_of[sid];
      for (const auto& m : moves(s)) {
        int before = static_cast<int>(parent.size());
        int mid = intern(m);
        unite(sid, mid);
        if (mid >= before) bfs.push(mid);
      }
    }
    std::vector<int> comp(universe.size());
    for (size_t i = 0; i < universe.size(); ++i) comp[i] = find(universe_state[i]);
    return comp;
  }

 private:
  void push_merged(Word& out, Letter l) const {
    if (l.kind == Letter::Kind::VertexElement) {
      const auto& Gv = G_.vertex_group(l.id);
      while (!out.empty() && out.back().kind == Letter::Kind::VertexElement &&
             out.back().id == l.id) {
        l.payload = Gv.op(out.back().payload, l.payload);
        out.pop_back();
      }
      if (l.payload != Gv.identity()) out.push_back(l);
    } else {
      out.push_back(l);
    }
  }

  Word renorm(const Word& w) const {
    Word out;
    for (const auto& l : w) push_merged(out, l);
    return out;
  }

  void add(std::vector<Word>& out, Word m) const {
    if (static_cast<int>(m.size()) <= cap_) out.push_back(std::move(m));
  }

  static std::string key(const Word& w) {
    std::string k;
    for (const auto& l : w) {
      k.push_back(l.kind == Letter::Kind::VertexElement ? 'v' : 'e');
      k += std::to_string(l.id);
      k.push_back(l.payload < 0 ? '-' : '.');
      k += std::to_string(l.payload < 0 ? -l.payload : l.payload);
    }
    return k;
  }

  const GraphOfFiniteGroups& G_;
  int cap_;
};

// Every word over the full letter alphabet (nontrivial vertex elements and
// stable letters of non-tree edges), lengths 0..max_len.
inline std::vector<Word> enumerate_words(const GraphOfFiniteGroups& G, int max_len) {
  std::vector<Letter> alphabet;
  for (int v = 0; v < G.num_vertices(); ++v)
    for (int g = 0; g < G.vertex_group(v).order(); ++g)
      if (g != G.vertex_group(v).identity()) alphabet.push_back(Letter::vertex(v, g));
  for (int e = 0; e < G.num_edges(); ++e)
    if (!G.edge(e).in_tree) {
      alphabet.push_back(Letter::edge(e, 1));
      alphabet.push_back(Letter::edge(e, -1));
    }
  std::vector<Word> out = {{}};
  std::vector<Word> layer = {{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (const auto& l : alphabet) {
        Word m = w;
        m.push_back(l);
        next.push_back(m);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace ggt_test

#endif
