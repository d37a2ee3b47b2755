// The Bass-Serre tree of an HNN extension, modelled on canonical cosets.
//
// Vertices are left cosets gG, edges are left cosets gH; the edge gH joins
// the vertices gG and g*tau*G.  Uniqueness of Britton normal forms makes
// the normal-form prefix of g a canonical name for the vertex gG, and the
// prefix plus the H-coset representative of the end letter a canonical name
// for the edge gH.  The tree is regular of degree [G:H] + [G:theta(H)].
//
// Geodesics and distances are computed algebraically from normal forms
// (never by search); breadth-first ball generation exists alongside as an
// independent cross-check and as the input to DOT export.

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hnn/errors.hpp"
#include "hnn/presentation.hpp"
#include "hnn/word.hpp"

namespace hnn {

// Canonical representative of the vertex gG: the normal-form prefix of g
// (the end letter lies in G and is absorbed by the coset).
template <class Elt>
struct TreeVertex {
  std::vector<std::pair<Elt, int>> prefix;

  friend bool operator==(const TreeVertex& a, const TreeVertex& b) {
    return a.prefix == b.prefix;
  }
};

enum class EdgeOrientation { kForward, kBackward };

// Canonical representative of the edge gH with a traversal direction.
// Writing g = (prefix) * end_rep with end_rep in S_{-1}, the forward
// orientation runs source gG -> range g*tau*G; backward swaps them.
template <class Elt>
struct TreeEdge {
  std::vector<std::pair<Elt, int>> prefix;
  Elt end_rep{};
  EdgeOrientation orientation = EdgeOrientation::kForward;

  friend bool operator==(const TreeEdge& a, const TreeEdge& b) {
    return a.prefix == b.prefix && a.end_rep == b.end_rep &&
           a.orientation == b.orientation;
  }
};

// Membership query "does vertex lie in the shadow of edge" (the half-tree
// of vertices strictly closer to the range of the edge than to its source).
template <class Elt>
struct ShadowQuery {
  TreeEdge<Elt> edge;
  TreeVertex<Elt> vertex;
};

template <class Elt>
TreeEdge<Elt> edge_inverse(TreeEdge<Elt> e) {
  e.orientation = e.orientation == EdgeOrientation::kForward
                      ? EdgeOrientation::kBackward
                      : EdgeOrientation::kForward;
  return e;
}

namespace detail {

template <Presentation P>
Word<typename P::Elt> word_of_prefix(
    const P& p, const std::vector<std::pair<typename P::Elt, int>>& prefix) {
  Word<typename P::Elt> w;
  for (const auto& [s, e] : prefix) {
    if (!(s == p.identity()))
      w.push_back(Letter<typename P::Elt>::base_letter(s));
    w.push_back(Letter<typename P::Elt>::stable_letter(e));
  }
  return w;
}

}  // namespace detail

// Canonical vertex of the coset wG.
template <Presentation P>
TreeVertex<typename P::Elt> vertex_of(const P& p,
                                      const Word<typename P::Elt>& w) {
  return {normal_form(p, w).prefix};
}

// Canonical forward edge of the coset wH.
template <Presentation P>
TreeEdge<typename P::Elt> edge_of(const P& p, const Word<typename P::Elt>& w) {
  auto nf = normal_form(p, w);
  return {std::move(nf.prefix), p.rep_h(nf.end), EdgeOrientation::kForward};
}

// Oriented endpoints (source, range): gG -> g*tau*G for a forward edge,
// swapped for a backward one.
template <Presentation P>
std::pair<TreeVertex<typename P::Elt>, TreeVertex<typename P::Elt>>
edge_endpoints(const P& p, const TreeEdge<typename P::Elt>& e) {
  using Elt = typename P::Elt;
  TreeVertex<Elt> near{e.prefix};
  auto w = detail::word_of_prefix(p, e.prefix);
  if (!(e.end_rep == p.identity()))
    w.push_back(Letter<Elt>::base_letter(e.end_rep));
  w.push_back(Letter<Elt>::stable_letter(1));
  TreeVertex<Elt> far = vertex_of(p, w);
  if (e.orientation == EdgeOrientation::kBackward) std::swap(near, far);
  return {std::move(near), std::move(far)};
}

// Combinatorial distance d(uG, vG): the stable-letter count of the normal
// form of u^-1 v, i.e. the length of the unique reduced path.
template <Presentation P>
std::size_t distance(const P& p, const TreeVertex<typename P::Elt>& u,
                     const TreeVertex<typename P::Elt>& v) {
  const auto w = word_concat(word_inverse(p, detail::word_of_prefix(p, u.prefix)),
                             detail::word_of_prefix(p, v.prefix));
  return normal_form(p, w).prefix.size();
}

// The unique path of edges from the base vertex G to v.  For prefix letters
// (g_k, e_k): a letter with e_k = +1 contributes the forward edge whose
// prefix is the first k-1 letters and whose end representative is g_k; a
// letter with e_k = -1 contributes the backward traversal of the edge whose
// prefix is the first k letters (end representative trivial).
template <Presentation P>
std::vector<TreeEdge<typename P::Elt>> path_to_vertex(
    const P& p, const TreeVertex<typename P::Elt>& v) {
  using Elt = typename P::Elt;
  std::vector<TreeEdge<Elt>> path;
  path.reserve(v.prefix.size());
  for (std::size_t k = 0; k < v.prefix.size(); ++k) {
    const auto& [g, eps] = v.prefix[k];
    if (eps == 1) {
      std::vector<std::pair<Elt, int>> head(v.prefix.begin(),
                                            v.prefix.begin() + k);
      path.push_back({std::move(head), g, EdgeOrientation::kForward});
    } else {
      std::vector<std::pair<Elt, int>> head(v.prefix.begin(),
                                            v.prefix.begin() + k + 1);
      path.push_back({std::move(head), p.identity(), EdgeOrientation::kBackward});
    }
  }
  return path;
}

// All [G:H] + [G:theta(H)] incident edges with their far endpoints, in
// enumerator order: forward edges over S_{-1} first, then backward edges
// over S_1.  Requires finite coset enumerators.
template <Presentation P>
std::vector<std::pair<TreeEdge<typename P::Elt>, TreeVertex<typename P::Elt>>>
neighbors(const P& p, const TreeVertex<typename P::Elt>& v) {
  using Elt = typename P::Elt;
  std::vector<std::pair<TreeEdge<Elt>, TreeVertex<Elt>>> out;
  const auto base = detail::word_of_prefix(p, v.prefix);
  for (const auto& a : p.reps_h()) {
    TreeEdge<Elt> e{v.prefix, a, EdgeOrientation::kForward};
    auto w = base;
    if (!(a == p.identity())) w.push_back(Letter<Elt>::base_letter(a));
    w.push_back(Letter<Elt>::stable_letter(1));
    out.emplace_back(std::move(e), vertex_of(p, w));
  }
  for (const auto& b : p.reps_theta_h()) {
    auto w = base;
    if (!(b == p.identity())) w.push_back(Letter<Elt>::base_letter(b));
    w.push_back(Letter<Elt>::stable_letter(-1));
    auto e = edge_of(p, w);
    e.orientation = EdgeOrientation::kBackward;
    TreeVertex<Elt> far{e.prefix};
    out.emplace_back(std::move(e), std::move(far));
  }
  return out;
}

// Whether the vertex lies strictly closer to the range of the edge than to
// its source (membership in the open half-tree behind the edge).
template <Presentation P>
bool in_shadow(const P& p, const ShadowQuery<typename P::Elt>& q) {
  const auto [s, r] = edge_endpoints(p, q.edge);
  return distance(p, q.vertex, s) > distance(p, q.vertex, r);
}

// A finite ball: vertices in breadth-first discovery order and the tree
// edges between them, each stored once in forward orientation.
template <class Elt>
struct TreeGraph {
  TreeVertex<Elt> center;
  std::size_t radius = 0;
  std::vector<TreeVertex<Elt>> vertices;
  std::vector<TreeEdge<Elt>> edges;
};

// Canonical coset strings: the prefix letters left to right (element token
// when nontrivial, then t or T), the end representative token when
// nontrivial, space-joined, suffixed ".G" / ".H"; the base cosets print as
// plain "G" / "H".
template <Presentation P>
std::string coset_tokens(const P& p,
                         const std::vector<std::pair<typename P::Elt, int>>& prefix,
                         const typename P::Elt& end_rep) {
  std::string s;
  const auto append = [&s](const std::string& tok) {
    if (!s.empty()) s += ' ';
    s += tok;
  };
  for (const auto& [g, e] : prefix) {
    if (!(g == p.identity())) append(p.print(g));
    append(e == 1 ? "t" : "T");
  }
  if (!(end_rep == p.identity())) append(p.print(end_rep));
  return s;
}

template <Presentation P>
std::string vertex_string(const P& p, const TreeVertex<typename P::Elt>& v) {
  auto s = coset_tokens(p, v.prefix, p.identity());
  return s.empty() ? "G" : s + ".G";
}

template <Presentation P>
std::string edge_string(const P& p, const TreeEdge<typename P::Elt>& e) {
  auto s = coset_tokens(p, e.prefix, e.end_rep);
  return s.empty() ? "H" : s + ".H";
}

// Breadth-first ball of the given radius around center.  Throws
// ResourceLimitError (reporting the partial size) when the vertex count
// would exceed max_vertices.
template <Presentation P>
TreeGraph<typename P::Elt> ball(const P& p,
                                const TreeVertex<typename P::Elt>& center,
                                std::size_t radius,
                                std::size_t max_vertices = 100000) {
  using Elt = typename P::Elt;
  TreeGraph<Elt> g{center, radius, {center}, {}};
  std::unordered_set<std::string> seen{vertex_string(p, center)};
  std::size_t level_begin = 0;
  for (std::size_t depth = 0; depth < radius; ++depth) {
    const std::size_t level_end = g.vertices.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      // Copy: growing g.vertices below invalidates references into it.
      const TreeVertex<Elt> u = g.vertices[i];
      for (auto& [e, far] : neighbors(p, u)) {
        if (!seen.insert(vertex_string(p, far)).second) continue;
        if (g.vertices.size() >= max_vertices)
          throw ResourceLimitError(
              "ball exceeds max_vertices = " + std::to_string(max_vertices) +
              " (partial size " + std::to_string(g.vertices.size()) + ")");
        e.orientation = EdgeOrientation::kForward;
        g.edges.push_back(std::move(e));
        g.vertices.push_back(std::move(far));
      }
    }
    level_begin = level_end;
  }
  return g;
}

struct DotOptions {
  std::string graph_name = "ball";
};

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

// Deterministic DOT rendering: node lines sorted by canonical vertex
// string, then one line per edge (forward orientation) sorted by canonical
// edge string.
template <Presentation P>
std::string export_dot(const P& p, const TreeGraph<typename P::Elt>& g,
                       const DotOptions& opts = {}) {
  std::vector<std::string> nodes;
  nodes.reserve(g.vertices.size());
  for (const auto& v : g.vertices) nodes.push_back(vertex_string(p, v));
  std::sort(nodes.begin(), nodes.end());

  std::vector<std::pair<std::string, std::string>> edges;  // label, rendering
  edges.reserve(g.edges.size());
  for (auto e : g.edges) {
    e.orientation = EdgeOrientation::kForward;
    const auto [src, dst] = edge_endpoints(p, e);
    edges.emplace_back(edge_string(p, e),
                       detail::dot_quote(vertex_string(p, src)) + " -> " +
                           detail::dot_quote(vertex_string(p, dst)));
  }
  std::sort(edges.begin(), edges.end());

  std::string out = "digraph " + opts.graph_name + " {\n";
  for (const auto& n : nodes) out += "  " + detail::dot_quote(n) + ";\n";
  for (const auto& [label, arrow] : edges)
    out += "  " + arrow + " [label=" + detail::dot_quote(label) + "];\n";
  out += "}\n";
  return out;
}

}  // namespace hnn
