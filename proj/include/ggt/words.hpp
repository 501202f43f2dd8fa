#ifndef GGT_WORDS_HPP
#define GGT_WORDS_HPP

#include <string>
#include <vector>

#include "ggt/graph_of_groups.hpp"

namespace ggt {

// A letter of a word in the fundamental group of a graph of finite groups:
// either an element of a vertex group or a stable letter of an edge with
// exponent +-1.  Stable letters of spanning-tree edges are the identity and
// never appear in normal forms.
struct Letter {
  enum class Kind : int { VertexElement = 0, EdgeLetter = 1 };
  Kind kind = Kind::VertexElement;
  int id = 0;       // vertex id or edge id
  int payload = 0;  // element index, or exponent +1 / -1

  static Letter vertex(int v, int g) { return {Kind::VertexElement, v, g}; }
  static Letter edge(int e, int exp) { return {Kind::EdgeLetter, e, exp}; }

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.kind == b.kind && a.id == b.id && a.payload == b.payload;
  }
  friend bool operator<(const Letter& a, const Letter& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    if (a.id != b.id) return a.id < b.id;
    return a.payload < b.payload;
  }
};

using Word = std::vector<Letter>;

// Canonical reduced form.  Shape, with all letters over the graph of groups:
//   [leading element of one vertex group] (stable letter | pinned coset
//   representative)*
// Amalgam case: strictly alternating nontrivial right-coset transversal
// representatives after the leading element.  HNN case: Britton-reduced with
// every inter-letter element pinned to its transversal.  Two words reduce to
// the same letter sequence iff they are equal in the fundamental group.
struct NormalForm {
  std::vector<Letter> reduced_letters;
  bool canonical = false;

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.reduced_letters == b.reduced_letters;
  }
  // Shortlex over the structural letter encoding; the order behind
  // index-minimal coset labels.
  friend bool operator<(const NormalForm& a, const NormalForm& b) {
    if (a.reduced_letters.size() != b.reduced_letters.size())
      return a.reduced_letters.size() < b.reduced_letters.size();
    return a.reduced_letters < b.reduced_letters;
  }
};

// Throws MalformedWord if a letter references a missing vertex/edge or an
// out-of-range element, or an edge exponent other than +-1.
void check_word(const Word& w, const GraphOfFiniteGroups& G);

// Canonical normal form of a word.  reduce is idempotent and constant on
// each group element.
NormalForm reduce(const Word& w, const GraphOfFiniteGroups& G);

bool equal(const Word& w1, const Word& w2, const GraphOfFiniteGroups& G);

// Group arithmetic on canonical forms (results canonical).
NormalForm nf_identity();
NormalForm nf_multiply(const NormalForm& a, const NormalForm& b,
                       const GraphOfFiniteGroups& G);
NormalForm nf_inverse(const NormalForm& a, const GraphOfFiniteGroups& G);
NormalForm nf_power(const NormalForm& a, int k, const GraphOfFiniteGroups& G);

// Human-readable rendering, e.g. "a * t^-1 * b".  Identity renders as "1".
std::string render(const NormalForm& nf, const GraphOfFiniteGroups& G);

// Compact deterministic key for maps (one char class per letter field).
std::string nf_key(const NormalForm& nf);

}  // namespace ggt

#endif
