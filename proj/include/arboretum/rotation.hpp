#pragma once

// The rotation correspondence between planar reduced trees and planar rooted
// hypertrees, extending Knuth's map on planar binary trees.
//
//   phi(|)              = *
//   phi(vee(t_1..t_n))  = beta(phi(t_1), ..., phi(t_n))
//
// Internal vertices are sent to hyperedges (omega), and leaves of phi_inv(s)
// are matched with vertices of s, the root going to the rightmost leaf.

#include <compare>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "arboretum/trees.hpp"

namespace arboretum {

// Child indices (0-based) from the root down to a node of a ReducedTree.
using TreePath = std::vector<std::size_t>;

// One step from a vertex to a member of one of the edges rooted at it.
struct VertexStep {
  std::size_t edge = 0;
  std::size_t member = 0;
  friend auto operator<=>(const VertexStep&, const VertexStep&) = default;
};

using VertexPath = std::vector<VertexStep>;

// The edge with index `edge` among those rooted at `vertex`.
struct EdgeAddress {
  VertexPath vertex;
  std::size_t edge = 0;
  friend auto operator<=>(const EdgeAddress&, const EdgeAddress&) = default;
};

struct VertexEdgeMap {
  std::vector<std::pair<TreePath, EdgeAddress>> pairs;
};

// Leaf positions are 1-based, left to right.
struct VertexLeafMap {
  std::vector<std::pair<VertexPath, std::size_t>> pairs;

  std::map<VertexPath, std::size_t> by_vertex() const {
    return {pairs.begin(), pairs.end()};
  }
  std::map<std::size_t, VertexPath> by_leaf() const {
    std::map<std::size_t, VertexPath> out;
    for (const auto& [v, leaf] : pairs) out.emplace(leaf, v);
    return out;
  }
};

inline HyperTree phi(const ReducedTree& t) {
  if (t.is_leaf()) return HyperTree::vertex();
  std::vector<HyperTree> images;
  images.reserve(t.arity());
  for (const auto& c : t.children()) images.push_back(phi(c));
  return beta(images, t.tag());
}

inline ReducedTree phi_inv(const HyperTree& s) {
  if (s.is_vertex()) return ReducedTree::leaf();
  auto d = beta_decompose(s);
  std::vector<ReducedTree> children;
  children.reserve(d.parts.size());
  for (const auto& p : d.parts) children.push_back(phi_inv(p));
  return ReducedTree::node(std::move(children), std::move(d.tag));
}

inline HyperForest phi(const ReducedForest& f) {
  std::vector<HyperTree> out;
  for (const auto& t : f) out.push_back(phi(t));
  return HyperForest(std::move(out));
}

inline ReducedForest phi_inv(const HyperForest& f) {
  std::vector<ReducedTree> out;
  for (const auto& s : f) out.push_back(phi_inv(s));
  return ReducedForest(std::move(out));
}

namespace detail {

// Paths into the last beta-part live at the same root, with every root edge
// index moved one to the right by the newly prepended edge.
inline VertexPath shift_root_edge(VertexPath p) {
  if (!p.empty()) ++p.front().edge;
  return p;
}

inline EdgeAddress shift_root_edge(EdgeAddress e) {
  if (e.vertex.empty())
    ++e.edge;
  else
    ++e.vertex.front().edge;
  return e;
}

inline VertexPath prefixed(VertexStep step, const VertexPath& p) {
  VertexPath out;
  out.reserve(p.size() + 1);
  out.push_back(step);
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace detail

// Internal vertex of t -> edge of phi(t).  The vertex closest to the root goes
// to the leftmost root edge; an n-ary vertex goes to an edge with n vertices.
inline VertexEdgeMap omega(const ReducedTree& t) {
  VertexEdgeMap out;
  if (t.is_leaf()) return out;
  out.pairs.emplace_back(TreePath{}, EdgeAddress{{}, 0});
  const std::size_t n = t.arity();
  for (std::size_t j = 0; j < n; ++j) {
    for (auto [path, edge] : omega(t.children()[j]).pairs) {
      path.insert(path.begin(), j);
      if (j + 1 < n)
        edge.vertex = detail::prefixed({0, n - 2 - j}, edge.vertex);
      else
        edge = detail::shift_root_edge(std::move(edge));
      out.pairs.emplace_back(std::move(path), std::move(edge));
    }
  }
  return out;
}

// Vertex of s -> leaf position of phi_inv(s).
inline VertexLeafMap vertex_leaf_map(const HyperTree& s) {
  VertexLeafMap out;
  if (s.is_vertex()) {
    out.pairs.emplace_back(VertexPath{}, 1);
    return out;
  }
  auto d = beta_decompose(s);
  const std::size_t n = d.parts.size();
  std::size_t offset = 0;
  for (std::size_t j = 0; j < n; ++j) {
    auto sub = vertex_leaf_map(d.parts[j]);
    for (auto& [path, leaf] : sub.pairs) {
      VertexPath p = j + 1 < n ? detail::prefixed({0, n - 2 - j}, path)
                               : detail::shift_root_edge(std::move(path));
      out.pairs.emplace_back(std::move(p), leaf + offset);
    }
    offset += sub.pairs.size();
  }
  return out;
}

// Decorated rotation: the tag of an n-ary vertex moves to the corresponding
// edge with n vertices.
inline HyperTree phi_decorated(const ReducedTree& t, const DecorationScheme& scheme) {
  validate(t, scheme);
  return phi(t);
}

inline ReducedTree phi_inv_decorated(const HyperTree& s, const DecorationScheme& scheme) {
  validate(s, scheme);
  return phi_inv(s);
}

// Node lookups by address.
inline const ReducedTree& at(const ReducedTree& t, const TreePath& p) {
  const ReducedTree* cur = &t;
  for (std::size_t i : p) {
    if (i >= cur->arity()) throw DomainError("tree path out of range");
    cur = &cur->children()[i];
  }
  return *cur;
}

inline const HyperTree& at(const HyperTree& s, const VertexPath& p) {
  const HyperTree* cur = &s;
  for (const auto& step : p) {
    if (step.edge >= cur->fertility() ||
        step.member >= cur->edges()[step.edge].members().size())
      throw DomainError("vertex path out of range");
    cur = &cur->edges()[step.edge].members()[step.member];
  }
  return *cur;
}

inline const HyperEdge& at(const HyperTree& s, const EdgeAddress& e) {
  const HyperTree& v = at(s, e.vertex);
  if (e.edge >= v.fertility()) throw DomainError("edge address out of range");
  return v.edges()[e.edge];
}

}  // namespace arboretum
