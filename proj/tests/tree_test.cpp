#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "hnn/bs_group.hpp"
#include "hnn/example5_group.hpp"
#include "hnn/token_io.hpp"
#include "hnn/tree.hpp"

using namespace hnn;

namespace {

template <class P>
TreeVertex<typename P::Elt> vtx(const P& p, const std::string& s) {
  return vertex_of(p, parse_word(p, s));
}

// All-pairs BFS distances inside a finite ball, keyed by vertex string.
template <class P>
std::map<std::string, std::map<std::string, std::size_t>> bfs_all(
    const P& p, const TreeGraph<typename P::Elt>& g) {
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& e : g.edges) {
    auto [s, r] = edge_endpoints(p, e);
    auto ss = vertex_string(p, s), rs = vertex_string(p, r);
    adj[ss].push_back(rs);
    adj[rs].push_back(ss);
  }
  std::map<std::string, std::map<std::string, std::size_t>> dist;
  for (const auto& v : g.vertices) {
    auto root = vertex_string(p, v);
    auto& d = dist[root];
    d[root] = 0;
    std::queue<std::string> q;
    q.push(root);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (const auto& w : adj[u])
        if (!d.count(w)) {
          d[w] = d[u] + 1;
          q.push(w);
        }
    }
  }
  return dist;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("vertex_of canonicalizes coset representatives") {
  BsGroup bs23(2, 3);
  Example5Group ex5;

  CHECK(vtx(bs23, "1") == TreeVertex<BigInt>{});
  CHECK(vtx(bs23, "t g^7") == vtx(bs23, "t"));
  CHECK(vertex_string(bs23, vtx(bs23, "1")) == "G");

  // A trailing base-group letter is absorbed into the coset.
  auto v = vtx(ex5, "g0 T h(0,1)");
  REQUIRE(v.prefix.size() == 1);
  CHECK(v.prefix[0].second == -1);
  CHECK(v.prefix[0].first == ex5.g0());
  CHECK(vertex_string(ex5, v) == "g0 T.G");
}

TEST_CASE("edge endpoints and inversion") {
  BsGroup bs23(2, 3);
  TreeEdge<BigInt> h{{}, BigInt(0), EdgeOrientation::kForward};

  auto [s, r] = edge_endpoints(bs23, h);
  CHECK(vertex_string(bs23, s) == "G");
  CHECK(vertex_string(bs23, r) == "t.G");

  auto [s2, r2] = edge_endpoints(bs23, edge_inverse(h));
  CHECK(vertex_string(bs23, s2) == "t.G");
  CHECK(vertex_string(bs23, r2) == "G");
  CHECK(edge_inverse(edge_inverse(h)) == h);
}

TEST_CASE("path_to_vertex chains edges from the base vertex") {
  BsGroup bs23(2, 3);

  CHECK(path_to_vertex(bs23, vtx(bs23, "1")).empty());

  auto path = path_to_vertex(bs23, vtx(bs23, "t"));
  REQUIRE(path.size() == 1);
  CHECK(path[0].orientation == EdgeOrientation::kForward);
  CHECK(edge_string(bs23, path[0]) == "H");

  auto pathT = path_to_vertex(bs23, vtx(bs23, "T"));
  REQUIRE(pathT.size() == 1);
  CHECK(pathT[0].orientation == EdgeOrientation::kBackward);
  CHECK(edge_string(bs23, pathT[0]) == "T.H");
  auto [s, r] = edge_endpoints(bs23, pathT[0]);
  CHECK(vertex_string(bs23, s) == "G");
  CHECK(vertex_string(bs23, r) == "T.G");

  // Each edge's source is the previous edge's range.
  auto v = vtx(bs23, "g^1 t g^2 T t");
  auto longer = path_to_vertex(bs23, v);
  REQUIRE(longer.size() == v.prefix.size());
  auto cur = vtx(bs23, "1");
  for (const auto& e : longer) {
    auto [es, er] = edge_endpoints(bs23, e);
    CHECK(es == cur);
    cur = er;
  }
  CHECK(cur == v);
}

TEST_CASE("distance equals stable-letter prefix length of the quotient") {
  BsGroup bs23(2, 3);
  CHECK(distance(bs23, vtx(bs23, "1"), vtx(bs23, "t")) == 1);
  CHECK(distance(bs23, vtx(bs23, "T"), vtx(bs23, "t")) == 2);
  CHECK(distance(bs23, vtx(bs23, "g^1 t g^2 T"), vtx(bs23, "g^1 t g^2 T")) ==
        0);
}

TEST_CASE("neighbors enumerate both coset families in order") {
  BsGroup bs23(2, 3);
  BsGroup bs22(2, 2);
  Example5Group ex5;

  auto nb = neighbors(bs23, vtx(bs23, "1"));
  REQUIRE(nb.size() == 5);
  std::vector<std::string> far, lab;
  for (auto& [e, v] : nb) {
    far.push_back(vertex_string(bs23, v));
    lab.push_back(edge_string(bs23, e));
  }
  CHECK(far == std::vector<std::string>{"t.G", "g^1 t.G", "T.G", "g^1 T.G",
                                        "g^2 T.G"});
  CHECK(lab ==
        std::vector<std::string>{"H", "g^1.H", "T.H", "g^1 T.H", "g^2 T.H"});

  // Degree = [G:H] + [G:theta(H)].
  CHECK(neighbors(ex5, vtx(ex5, "1")).size() == 4);
  CHECK(neighbors(bs22, vtx(bs22, "1")).size() == 4);

  // The parent edge of a deeper vertex canonicalizes back to the base edge.
  auto nb2 = neighbors(bs23, vtx(bs23, "t"));
  bool found = false;
  for (auto& [e, v] : nb2)
    if (vertex_string(bs23, v) == "G") {
      CHECK(edge_string(bs23, e) == "H");
      CHECK(e.orientation == EdgeOrientation::kBackward);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("balls are trees with regular interior degree") {
  BsGroup bs23(2, 3);
  Example5Group ex5;

  auto b0 = ball(bs23, vtx(bs23, "1"), 0);
  CHECK(b0.vertices.size() == 1);
  CHECK(b0.edges.empty());

  auto b1 = ball(bs23, vtx(bs23, "1"), 1);
  CHECK(b1.vertices.size() == 6);
  CHECK(b1.edges.size() == 5);

  auto b2ex5 = ball(ex5, vtx(ex5, "1"), 2);
  CHECK(b2ex5.vertices.size() == 17);
  CHECK(b2ex5.edges.size() == 16);

  auto b3 = ball(bs23, vtx(bs23, "1"), 3);
  CHECK(b3.vertices.size() == 1 + 5 + 20 + 80);
  CHECK(b3.edges.size() == b3.vertices.size() - 1);

  std::map<std::string, int> deg;
  for (const auto& e : b3.edges) {
    auto [s, r] = edge_endpoints(bs23, e);
    ++deg[vertex_string(bs23, s)];
    ++deg[vertex_string(bs23, r)];
  }
  const auto center = vtx(bs23, "1");
  for (const auto& v : b3.vertices)
    if (distance(bs23, center, v) < 3) CHECK(deg[vertex_string(bs23, v)] == 5);
}

TEST_CASE("algebraic distance matches BFS distance inside a ball") {
  BsGroup bs23(2, 3);
  auto b2 = ball(bs23, vtx(bs23, "1"), 2);
  auto bfs = bfs_all(bs23, b2);
  for (const auto& u : b2.vertices)
    for (const auto& v : b2.vertices)
      CHECK(distance(bs23, u, v) ==
            bfs[vertex_string(bs23, u)][vertex_string(bs23, v)]);
}

TEST_CASE("shadows of diverging edges are disjoint") {
  BsGroup bs23(2, 3);
  TreeEdge<BigInt> h{{}, BigInt(0), EdgeOrientation::kForward};

  CHECK(in_shadow(bs23, {h, vtx(bs23, "t")}));
  CHECK_FALSE(in_shadow(bs23, {h, vtx(bs23, "1")}));
  CHECK(in_shadow(bs23, {h, vtx(bs23, "t t")}));

  // Whenever the ranges are strictly farther apart than the sources, the
  // two half-trees cannot overlap.
  auto b2 = ball(bs23, vtx(bs23, "1"), 2);
  std::vector<TreeEdge<BigInt>> dir;
  for (const auto& e : b2.edges) {
    dir.push_back(e);
    dir.push_back(edge_inverse(e));
  }
  int qualifying = 0;
  for (const auto& e : dir)
    for (const auto& f : dir) {
      auto [es, er] = edge_endpoints(bs23, e);
      auto [fs, fr] = edge_endpoints(bs23, f);
      if (distance(bs23, er, fr) <= distance(bs23, es, fs)) continue;
      ++qualifying;
      for (const auto& v : b2.vertices)
        CHECK_FALSE((in_shadow(bs23, {e, v}) && in_shadow(bs23, {f, v})));
    }
  CHECK(qualifying == 600);
}

TEST_CASE("DOT export is deterministic and matches the golden file") {
  BsGroup bs23(2, 3);

  auto d0 = export_dot(bs23, ball(bs23, vtx(bs23, "1"), 0));
  CHECK(d0 == "digraph ball {\n  \"G\";\n}\n");

  auto d1 = export_dot(bs23, ball(bs23, vtx(bs23, "1"), 1));
  CHECK(d1 == export_dot(bs23, ball(bs23, vtx(bs23, "1"), 1)));

  const std::string golden =
      read_file(std::string(HNN_GOLDEN_DIR) + "/bs23_tree_radius1.dot");
  CHECK(d1 == golden);
}

TEST_CASE("ball growth past the vertex cap raises a resource error") {
  BsGroup bs23(2, 3);
  CHECK_THROWS_AS(ball(bs23, vtx(bs23, "1"), 3, 10), ResourceLimitError);
  try {
    ball(bs23, vtx(bs23, "1"), 3, 10);
  } catch (const ResourceLimitError& e) {
    CHECK(std::string(e.what()).find("partial") != std::string::npos);
  }
}
