#include "ggt/finite_group.hpp"

#include <algorithm>
#include <random>

#include "ggt/errors.hpp"

namespace ggt {

namespace {
std::string elem_str(int a) { return "element " + std::to_string(a); }
}  // namespace

FiniteGroup FiniteGroup::validate(const std::vector<std::vector<int>>& table,
                                  std::vector<std::string> element_names) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw NoIdentity("empty table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw NotClosed("row " + std::to_string(i) + " has " +
                      std::to_string(table[i].size()) + " entries, expected " +
                      std::to_string(n));
    for (int j = 0; j < n; ++j) {
      if (table[i][j] < 0 || table[i][j] >= n)
        throw NotClosed("mult[" + std::to_string(i) + "][" + std::to_string(j) +
                        "] = " + std::to_string(table[i][j]) + " is out of range");
    }
  }

  // Identity: a row and column that are both the identity permutation.
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) identity = e;
  }
  if (identity < 0) throw NoIdentity("no two-sided identity element");

  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table[a][b] == identity && table[b][a] == identity) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0) throw NoInverse(elem_str(a) + " has no two-sided inverse");
  }

  auto check_triple = [&](int a, int b, int c) {
    if (table[table[a][b]][c] != table[a][table[b][c]])
      throw NotAssociative("(" + std::to_string(a) + "*" + std::to_string(b) +
                           ")*" + std::to_string(c) + " != " + std::to_string(a) +
                           "*(" + std::to_string(b) + "*" + std::to_string(c) + ")");
  };
  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    // Cubic blowup above order 256: 10,000 sampled triples, fixed seed.
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = 0; k < 10000; ++k) check_triple(pick(rng), pick(rng), pick(rng));
  }

  FiniteGroup g;
  g.order_ = n;
  g.identity_ = identity;
  g.mult_.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : table) g.mult_.insert(g.mult_.end(), row.begin(), row.end());
  g.inv_ = std::move(inv);
  if (element_names.empty()) {
    for (int a = 0; a < n; ++a)
      element_names.push_back(a == identity ? "e" : "g" + std::to_string(a));
  }
  if (static_cast<int>(element_names.size()) != n)
    throw NotClosed("element_names size mismatch");
  g.element_names_ = std::move(element_names);
  return g;
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != identity_) {
    x = op(x, a);
    ++k;
  }
  return k;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return validate(t, names);
}

namespace {
// Compose permutations given as index vectors: (pq)(x) = p[q[x]].
std::vector<int> pcompose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

FiniteGroup from_permutations(const std::vector<std::vector<int>>& perms,
                              const std::vector<std::string>& names) {
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto c = pcompose(perms[a], perms[b]);
      for (int k = 0; k < n; ++k)
        if (perms[k] == c) {
          t[a][b] = k;
          break;
        }
    }
  return FiniteGroup::validate(t, names);
}
}  // namespace

FiniteGroup FiniteGroup::symmetric3() {
  std::vector<std::vector<int>> perms = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  return from_permutations(perms, {"e", "r", "rr", "s12", "s23", "s13"});
}

FiniteGroup FiniteGroup::dihedral4() {
  // Symmetries of the square acting on corners 0..3.
  std::vector<std::vector<int>> perms = {
      {0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2},
      {3, 2, 1, 0}, {0, 3, 2, 1}, {1, 0, 3, 2}, {2, 1, 0, 3}};
  return from_permutations(perms, {"e", "r", "r2", "r3", "f", "fr", "fr2", "fr3"});
}

FiniteGroup FiniteGroup::klein4() {
  std::vector<std::vector<int>> t = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return validate(t, {"e", "a", "b", "ab"});
}

void check_subgroup(const FiniteGroup& G, const std::vector<int>& elements) {
  std::vector<char> in(G.order(), 0);
  for (int a : elements) {
    if (a < 0 || a >= G.order())
      throw NotASubgroup("element " + std::to_string(a) + " out of range");
    in[a] = 1;
  }
  if (!in[G.identity()]) throw NotASubgroup("identity not in subgroup");
  for (int a : elements) {
    if (!in[G.inv(a)])
      throw NotASubgroup("inverse of " + std::to_string(a) + " missing");
    for (int b : elements)
      if (!in[G.op(a, b)])
        throw NotASubgroup("product " + std::to_string(a) + "*" + std::to_string(b) +
                           " = " + std::to_string(G.op(a, b)) + " missing");
  }
}

std::vector<int> transversal(const std::vector<int>& subgroup_elements,
                             const FiniteGroup& V) {
  check_subgroup(V, subgroup_elements);
  std::vector<int> coset_of(V.order(), -1);
  std::vector<int> reps;
  for (int g = 0; g < V.order(); ++g) {
    if (coset_of[g] >= 0) continue;
    // g is index-minimal in its (so far unseen) left coset gH.
    int rep = g;
    for (int h : subgroup_elements) coset_of[V.op(g, h)] = rep;
    reps.push_back(rep);
  }
  // The identity represents H itself; index-minimality gives it automatically
  // only when identity == min(H), so pin it explicitly.
  int id_rep = coset_of[V.identity()];
  for (auto& r : reps)
    if (r == id_rep) r = V.identity();
  std::sort(reps.begin(), reps.end());
  return reps;
}

Monomorphism Monomorphism::validate(const FiniteGroup& source,
                                    const FiniteGroup& target,
                                    std::vector<int> image) {
  if (static_cast<int>(image.size()) != source.order())
    throw NotAHomomorphism("image table has " + std::to_string(image.size()) +
                           " entries, expected " + std::to_string(source.order()));
  for (int a = 0; a < source.order(); ++a)
    if (image[a] < 0 || image[a] >= target.order())
      throw NotAHomomorphism("image of " + std::to_string(a) + " out of range");
  if (image[source.identity()] != target.identity())
    throw NotAHomomorphism("identity not mapped to identity");
  for (int a = 0; a < source.order(); ++a)
    for (int b = 0; b < source.order(); ++b)
      if (image[source.op(a, b)] != target.op(image[a], image[b]))
        throw NotAHomomorphism("products not preserved at (" + std::to_string(a) +
                               "," + std::to_string(b) + ")");
  std::vector<int> pre(target.order(), -1);
  for (int a = 0; a < source.order(); ++a) {
    if (pre[image[a]] >= 0)
      throw NotInjectiveHom("elements " + std::to_string(pre[image[a]]) + " and " +
                            std::to_string(a) + " share image " +
                            std::to_string(image[a]));
    pre[image[a]] = a;
  }
  Monomorphism m;
  m.image_ = std::move(image);
  m.preimage_ = std::move(pre);
  return m;
}

int Monomorphism::preimage(int b) const {
  if (b < 0 || b >= static_cast<int>(preimage_.size())) return -1;
  return preimage_[b];
}

}  // namespace ggt
