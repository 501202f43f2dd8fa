#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "ggt/builders.hpp"
#include "ggt/errors.hpp"
#include "ggt/explicit_models.hpp"
#include "ggt/tessellation.hpp"

using namespace ggt;

namespace {

AmbientGroup ambient_z6() { return AmbientGroup(FiniteGroup::cyclic(6)); }

AmbientGroup ambient_dinf() {
  return AmbientGroup(GraphOfFiniteGroups::amalgam(
      FiniteGroup::cyclic(2), FiniteGroup::cyclic(2), FiniteGroup::trivial(), {0}, {0}));
}

AmbientGroup ambient_z() {
  return AmbientGroup(
      GraphOfFiniteGroups::hnn(FiniteGroup::trivial(), FiniteGroup::trivial(), {0}, {0}));
}

std::vector<NormalForm> gens(const AmbientGroup& amb, const std::vector<Word>& ws) {
  std::vector<NormalForm> out;
  for (const auto& w : ws) out.push_back(amb.elem(w));
  return out;
}

bool is_path_graph(const GraphBall& b) {
  int deg1 = 0;
  for (int v = 0; v < b.num_vertices(); ++v) {
    if (b.degree(v) == 1)
      ++deg1;
    else if (b.degree(v) != 2)
      return false;
  }
  return deg1 == 2 && b.num_edges() + 1 == static_cast<std::size_t>(b.num_vertices());
}

}  // namespace

TEST_CASE("cayley ball of Z/6 with S={+-1} is the 6-cycle at r=3") {
  auto amb = ambient_z6();
  auto S = gens(amb, {{Letter::vertex(0, 1)}, {Letter::vertex(0, 5)}});
  auto ball = cayley_abels_ball(amb, SubgroupSpec::trivial(), S, 3);
  CHECK(ball.graph.num_vertices() == 6);
  CHECK(ball.graph.num_edges() == 6);
  for (int v = 0; v < 6; ++v) CHECK(ball.graph.degree(v) == 2);
  CHECK(ball.graph.saturated);
  CHECK(ball.graph.metric_exact);
}

TEST_CASE("cayley ball of D-infinity with S={a,b} at r=4 is a 9-vertex path") {
  auto amb = ambient_dinf();
  auto S = gens(amb, {{Letter::vertex(0, 1)}, {Letter::vertex(1, 1)}});
  auto ball = cayley_abels_ball(amb, SubgroupSpec::trivial(), S, 4);
  CHECK(ball.graph.num_vertices() == 9);
  CHECK(is_path_graph(ball.graph));
  CHECK_FALSE(ball.graph.saturated);
}

TEST_CASE("radius zero ball is a single vertex") {
  auto amb = ambient_z6();
  auto S = gens(amb, {{Letter::vertex(0, 1)}, {Letter::vertex(0, 5)}});
  auto ball = cayley_abels_ball(amb, SubgroupSpec::trivial(), S, 0);
  CHECK(ball.graph.num_vertices() == 1);
  CHECK(ball.graph.num_edges() == 0);
}

TEST_CASE("asymmetric generating set is rejected") {
  auto amb = ambient_z6();
  auto S = gens(amb, {{Letter::vertex(0, 1)}});
  CHECK_THROWS_AS(cayley_abels_ball(amb, SubgroupSpec::trivial(), S, 2),
                  NotSymmetricGeneratingSet);
}

TEST_CASE("non-generating S yields the component, not an error") {
  auto amb = ambient_z6();
  auto S = gens(amb, {{Letter::vertex(0, 3)}});  // involution: 0 <-> 3
  auto ball = cayley_abels_ball(amb, SubgroupSpec::trivial(), S, 4);
  CHECK(ball.graph.num_vertices() == 2);
  CHECK(ball.graph.saturated);
}

TEST_CASE("cosets of U: Cayley-Abels ball of S3 over <s12>") {
  AmbientGroup amb{FiniteGroup::symmetric3()};
  auto s3 = FiniteGroup::symmetric3();
  // S = every element: complete graph on the 3 cosets.
  std::vector<Word> ws;
  for (int g = 0; g < 6; ++g)
    if (g != s3.identity()) ws.push_back({Letter::vertex(0, g)});
  auto S = gens(amb, ws);
  int s12 = -1;
  for (int g = 0; g < 6; ++g)
    if (g != s3.identity() && s3.element_order(g) == 2) {
      s12 = g;
      break;
    }
  auto U = SubgroupSpec::vertex_subgroup("U", 0, {s3.identity(), s12});
  auto ball = cayley_abels_ball(amb, U, S, 2);
  CHECK(ball.graph.num_vertices() == 3);  // [S3 : Z/2] = 3
  // degree equals the number of distinct nontrivial cosets sU, computed
  // independently from the transversal
  CHECK(transversal({s3.identity(), s12}, s3).size() == 3);
  for (int v = 0; v < 3; ++v) CHECK(ball.graph.degree(v) == 2);
}

TEST_CASE("relative ball with empty peripheral family equals the plain ball") {
  auto amb = ambient_z();
  auto S = gens(amb, {{Letter::edge(0, 1)}, {Letter::edge(0, -1)}});
  auto plain = cayley_abels_ball(amb, SubgroupSpec::trivial(), S, 5);
  auto rel = relative_cayley_abels_ball(amb, SubgroupSpec::trivial(), S, {}, 5);
  CHECK(plain.graph.num_vertices() == rel.graph.num_vertices());
  CHECK(plain.graph.adj == rel.graph.adj);
}

TEST_CASE("relative ball of Z with H = {2Z}") {
  auto amb = ambient_z();
  auto S = gens(amb, {{Letter::edge(0, 1)}, {Letter::edge(0, -1)}});
  auto H2 = SubgroupSpec::cyclic("2Z", {Letter::edge(0, 1), Letter::edge(0, 1)});
  for (int r : {3, 5, 7}) {
    auto rel = relative_cayley_abels_ball(amb, SubgroupSpec::trivial(), S, {H2}, r);
    int core = rel.num_core;
    CHECK(core == 2 * r + 1);
    CHECK(rel.graph.num_vertices() == core + 2);  // two cosets of 2Z
    // every integer vertex has exactly one peripheral neighbor
    for (int v = 0; v < core; ++v) {
      int peripheral_neighbors = 0;
      for (int w : rel.graph.adj[v])
        if (w >= core) ++peripheral_neighbors;
      CHECK(peripheral_neighbors == 1);
    }
    // peripheral degree grows with r: one edge per coset member in the core
    int expected = r % 2 == 0 ? r + 1 : r;
    int other = 2 * r + 1 - expected;
    std::multiset<int> degs = {rel.graph.degree(core), rel.graph.degree(core + 1)};
    CHECK(degs == std::multiset<int>{expected, other});
  }
}

TEST_CASE("relative ball of Z with H = {2Z, 3Z} at r=6 has 2+3 peripheral vertices") {
  auto amb = ambient_z();
  auto S = gens(amb, {{Letter::edge(0, 1)}, {Letter::edge(0, -1)}});
  auto H2 = SubgroupSpec::cyclic("2Z", {Letter::edge(0, 1), Letter::edge(0, 1)});
  auto H3 = SubgroupSpec::cyclic(
      "3Z", {Letter::edge(0, 1), Letter::edge(0, 1), Letter::edge(0, 1)});
  auto rel = relative_cayley_abels_ball(amb, SubgroupSpec::trivial(), S, {H2, H3}, 6);
  CHECK(rel.num_core == 13);
  CHECK(rel.graph.num_vertices() == 13 + 2 + 3);
}

TEST_CASE("peripheral copy discovery buckets cosets by residue") {
  auto amb = ambient_z();
  auto S = gens(amb, {{Letter::edge(0, 1)}, {Letter::edge(0, -1)}});
  auto ball = cayley_abels_ball(amb, SubgroupSpec::trivial(), S, 6);
  auto H2 = SubgroupSpec::cyclic("2Z", {Letter::edge(0, 1), Letter::edge(0, 1)});
  auto H3 = SubgroupSpec::cyclic(
      "3Z", {Letter::edge(0, 1), Letter::edge(0, 1), Letter::edge(0, 1)});
  auto copies = discover_peripheral_copies(amb, ball, {H2, H3});
  REQUIRE(copies.size() == 5);
  int total2 = 0, total3 = 0;
  for (const auto& c : copies) {
    if (c.family == 0) total2 += static_cast<int>(c.vertices.size());
    if (c.family == 1) total3 += static_cast<int>(c.vertices.size());
  }
  CHECK(total2 == 13);
  CHECK(total3 == 13);
}

TEST_CASE("coned_off basics") {
  auto amb = ambient_z();
  auto S = gens(amb, {{Letter::edge(0, 1)}, {Letter::edge(0, -1)}});
  auto ball = cayley_abels_ball(amb, SubgroupSpec::trivial(), S, 2);  // path of 5
  SUBCASE("single-vertex copy adds a pendant") {
    PeripheralCopy c;
    c.vertices = {0};
    c.label = "pt";
    auto coned = coned_off(ball.graph, {c});
    CHECK(coned.num_vertices() == 6);
    CHECK(coned.degree(5) == 1);
  }
  SUBCASE("coning the whole path collapses diameter to <= 2") {
    PeripheralCopy c;
    c.vertices = {0, 1, 2, 3, 4};
    c.label = "all";
    auto coned = coned_off(ball.graph, {c});
    auto dm = all_pairs_distances(coned.adj);
    int n = coned.num_vertices();
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) CHECK(dm[u * n + v] <= 2);
  }
  SUBCASE("empty copy rejected") {
    PeripheralCopy c;
    c.label = "empty";
    CHECK_THROWS_AS(coned_off(ball.graph, {c}), EmptyPeripheralCopy);
  }
  SUBCASE("coning preserves distances up to the shortcut bound") {
    PeripheralCopy c;
    c.vertices = {0, 2, 4};
    c.label = "evens";
    auto coned = coned_off(ball.graph, {c});
    auto dm0 = all_pairs_distances(ball.graph.adj);
    auto dm1 = all_pairs_distances(coned.adj);
    int n0 = ball.graph.num_vertices();
    int n1 = coned.num_vertices();
    for (int u = 0; u < n0; ++u)
      for (int v = 0; v < n0; ++v) CHECK(dm1[u * n1 + v] <= dm0[u * n0 + v]);
    for (int u : c.vertices)
      for (int v : c.vertices) CHECK(dm1[u * n1 + v] <= 2);
  }
}

TEST_CASE("embedding distortion: identity inclusion is isometric") {
  RegularTreeModel t3(3);
  auto X = t3.ball(5);
  std::vector<int> incl(X.num_vertices());
  std::iota(incl.begin(), incl.end(), 0);
  auto eta = embedding_distortion(X, X, incl, 4);
  for (int n = 1; n <= 4; ++n) CHECK(eta[n] == n);
}

TEST_CASE("embedding distortion: 2Z inside Z halves distances") {
  auto amb = ambient_z();
  auto S = gens(amb, {{Letter::edge(0, 1)}, {Letter::edge(0, -1)}});
  BallOptions convex;
  convex.convex_hint = true;
  auto X = cayley_abels_ball(amb, SubgroupSpec::trivial(), S, 8, convex);
  // Y: ball of 2Z with its intrinsic metric (a line with steps of w = t^2).
  auto w = amb.elem({Letter::edge(0, 1), Letter::edge(0, 1)});
  auto Sy = std::vector<NormalForm>{w, amb.inv(w)};
  auto Y = cayley_abels_ball(amb, SubgroupSpec::trivial(), Sy, 4, convex);
  // inclusion by matching group elements
  std::vector<int> incl(Y.graph.num_vertices(), -1);
  for (int y = 0; y < Y.graph.num_vertices(); ++y) {
    for (int x = 0; x < X.graph.num_vertices(); ++x)
      if (X.reps[x] == Y.reps[y]) {
        incl[y] = x;
        break;
      }
    REQUIRE(incl[y] >= 0);
  }
  auto eta = embedding_distortion(Y.graph, X.graph, incl, 6);
  for (int n = 1; n <= 6; ++n) CHECK(eta[n] == n / 2);
  // monotone non-decreasing
  for (int n = 1; n <= 6; ++n) CHECK(eta[n] >= eta[n - 1]);
}

TEST_CASE("embedding distortion errors") {
  RegularTreeModel t3(3);
  auto X = t3.ball(4);
  std::vector<int> incl(X.num_vertices());
  std::iota(incl.begin(), incl.end(), 0);
  CHECK_THROWS_AS(embedding_distortion(X, X, incl, 9), RadiusTooSmall);
  auto bad = incl;
  bad[1] = bad[2];
  CHECK_THROWS_AS(embedding_distortion(X, X, bad, 3), NotInjective);
}

TEST_CASE("regular tree ball sizes") {
  RegularTreeModel t3(3);
  for (int r : {0, 1, 2, 5}) {
    auto b = t3.ball(r);
    CHECK(b.num_vertices() == (r == 0 ? 1 : 1 + 3 * ((1 << r) - 1)));
    b.validate();
  }
}

TEST_CASE("grid ball sizes are diamond numbers") {
  SquareGridModel grid;
  for (int r : {1, 3, 6}) {
    auto b = grid.ball(r);
    CHECK(b.num_vertices() == 2 * r * r + 2 * r + 1);
  }
}

TEST_CASE("tessellation {4,4} reproduces the grid ball layer sizes") {
  TessellationModel t(4, 4);
  auto b = t.ball(6);
  CHECK(b.num_vertices() == 2 * 6 * 6 + 2 * 6 + 1);
  auto d = bfs_distances(b.adj, b.base);
  for (int k = 1; k <= 6; ++k) {
    int count = 0;
    for (int v = 0; v < b.num_vertices(); ++v)
      if (d[v] == k) ++count;
    CHECK(count == 4 * k);
  }
}

TEST_CASE("tessellation {4,5} layer sizes 5, 15, 40, 105") {
  TessellationModel t(4, 5);
  auto b = t.ball(5);
  auto d = bfs_distances(b.adj, b.base);
  std::vector<int> expect = {1, 5, 15, 40, 105};
  for (int k = 0; k + 1 < static_cast<int>(expect.size()); ++k) {
    int count = 0;
    for (int v = 0; v < b.num_vertices(); ++v)
      if (d[v] == k) ++count;
    CHECK(count == expect[k]);
  }
  // generation layers agree with true BFS distances
  for (int v = 0; v < b.num_vertices(); ++v) CHECK(b.dist[v] == d[v]);
  // interior vertices are q-regular
  for (int v = 0; v < b.num_vertices(); ++v)
    if (d[v] < 4) CHECK(b.degree(v) == 5);
}

TEST_CASE("tessellation {5,4}: interior regular, layers = BFS") {
  TessellationModel t(5, 4);
  auto b = t.ball(5);
  auto d = bfs_distances(b.adj, b.base);
  for (int v = 0; v < b.num_vertices(); ++v) {
    CHECK(b.dist[v] == d[v]);
    if (d[v] < 4) CHECK(b.degree(v) == 4);
  }
}

TEST_CASE("tessellation stream matches materialized ball") {
  int nv = 0;
  std::size_t ne = 0;
  tessellation_stream(
      4, 5, 4, [&](std::uint32_t, int layer) { nv += layer <= 4 ? 1 : 0; },
      [&](std::uint32_t, std::uint32_t) { ++ne; });
  TessellationModel t(4, 5);
  auto b = t.ball(4);
  CHECK(nv == b.num_vertices());
  CHECK(ne >= b.num_edges());
}

TEST_CASE("explicit model neighbor rules are symmetric") {
  RegularTreeModel t4(4);
  SquareGridModel grid;
  TessellationModel tess(4, 5);
  for (ExplicitGraphModel* m :
       std::initializer_list<ExplicitGraphModel*>{&t4, &grid, &tess}) {
    auto base = m->base_label();
    for (const auto& nb : m->neighbors(base)) {
      auto back = m->neighbors(nb);
      CHECK(std::find(back.begin(), back.end(), base) != back.end());
    }
  }
}
