#pragma once

// Nonsymmetric operad structure.  Reduced trees are operations whose inputs
// are their leaves, numbered 1..n left to right.  On hypertrees the inputs are
// the vertices, numbered through the vertex/leaf correspondence so that the
// root is input n.  Labels are always positional and never stored.

#include <cstddef>
#include <span>
#include <vector>

#include "arboretum/error.hpp"
#include "arboretum/lincomb.hpp"
#include "arboretum/rotation.hpp"
#include "arboretum/trees.hpp"

namespace arboretum {

inline std::size_t operad_arity(const ReducedTree& t) { return leaf_count(t); }
inline std::size_t operad_arity(const HyperTree& s) { return vertex_count(s); }

namespace detail {

inline void require_position(std::size_t i, std::size_t arity) {
  if (i < 1 || i > arity)
    throw DomainError("composition index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(arity));
}

// Replaces leaf number `i` (1-based, counted from `next`) of t by tau.
inline ReducedTree substitute_leaf(const ReducedTree& t, std::size_t i, const ReducedTree& tau,
                                   std::size_t& next) {
  if (t.is_leaf()) return next++ == i ? tau : t;
  std::vector<ReducedTree> children;
  children.reserve(t.arity());
  for (const auto& c : t.children()) children.push_back(substitute_leaf(c, i, tau, next));
  return ReducedTree::node(std::move(children), t.tag());
}

// Rebuilds s with the vertex at `path` replaced by f(vertex).
template <class F>
HyperTree replace_vertex(const HyperTree& s, std::span<const VertexStep> path, F&& f) {
  if (path.empty()) return f(s);
  const VertexStep step = path.front();
  std::vector<HyperEdge> edges(s.edges().begin(), s.edges().end());
  std::vector<HyperTree> members = edges[step.edge].members();
  members[step.member] = replace_vertex(members[step.member], path.subspan(1), f);
  edges[step.edge] = HyperEdge(std::move(members), edges[step.edge].tag());
  return HyperTree(std::move(edges));
}

inline HyperTree append_edges(const HyperTree& v, const HyperTree& plugged) {
  std::vector<HyperEdge> edges(v.edges().begin(), v.edges().end());
  edges.insert(edges.end(), plugged.edges().begin(), plugged.edges().end());
  return HyperTree(std::move(edges));
}

}  // namespace detail

// sigma o_i tau: leaf i of sigma replaced by tau.  The leaves of tau take
// positions i .. i + arity(tau) - 1.
inline ReducedTree compose(const ReducedTree& sigma, std::size_t i, const ReducedTree& tau) {
  detail::require_position(i, leaf_count(sigma));
  std::size_t next = 1;
  return detail::substitute_leaf(sigma, i, tau, next);
}

// t1 o_i t2: vertex i of t1 is identified with the root of t2, and the edges
// of t2 at its root are placed to the right of the edges already rooted at
// vertex i.
inline HyperTree compose(const HyperTree& t1, std::size_t i, const HyperTree& t2) {
  detail::require_position(i, vertex_count(t1));
  const VertexPath path = vertex_leaf_map(t1).by_leaf().at(i);
  return detail::replace_vertex(t1, path,
                                [&](const HyperTree& v) { return detail::append_edges(v, t2); });
}

// gamma(t; a_1..a_n) as the right-to-left fold of partial compositions, which
// keeps the positions still to be filled unshifted.
template <class Tree>
Tree gamma(const Tree& t, std::span<const Tree> args) {
  const std::size_t n = operad_arity(t);
  if (args.size() != n)
    throw DomainError("gamma needs " + std::to_string(n) + " arguments, got " +
                      std::to_string(args.size()));
  Tree out = t;
  for (std::size_t i = n; i >= 1; --i) out = compose(out, i, args[i - 1]);
  return out;
}

template <class Tree>
Tree gamma(const Tree& t, const std::vector<Tree>& args) {
  return gamma(t, std::span<const Tree>(args));
}

// Simultaneous substitution, computed in a single traversal.
inline ReducedTree gamma_simultaneous(const ReducedTree& t, std::span<const ReducedTree> args) {
  if (args.size() != leaf_count(t))
    throw DomainError("gamma arity mismatch");
  std::size_t next = 0;
  auto rec = [&](auto&& self, const ReducedTree& u) -> ReducedTree {
    if (u.is_leaf()) return args[next++];
    std::vector<ReducedTree> children;
    for (const auto& c : u.children()) children.push_back(self(self, c));
    return ReducedTree::node(std::move(children), u.tag());
  };
  return rec(rec, t);
}

inline HyperTree gamma_simultaneous(const HyperTree& t, std::span<const HyperTree> args) {
  if (args.size() != vertex_count(t))
    throw DomainError("gamma arity mismatch");
  const auto labels = vertex_leaf_map(t).by_vertex();
  auto rec = [&](auto&& self, const HyperTree& v, VertexPath& path) -> HyperTree {
    std::vector<HyperEdge> edges;
    for (std::size_t e = 0; e < v.fertility(); ++e) {
      std::vector<HyperTree> members;
      const auto& old = v.edges()[e].members();
      for (std::size_t m = 0; m < old.size(); ++m) {
        path.push_back({e, m});
        members.push_back(self(self, old[m], path));
        path.pop_back();
      }
      edges.emplace_back(std::move(members), v.edges()[e].tag());
    }
    const HyperTree& plugged = args[labels.at(path) - 1];
    edges.insert(edges.end(), plugged.edges().begin(), plugged.edges().end());
    return HyperTree(std::move(edges));
  };
  VertexPath root;
  return rec(rec, t, root);
}

// x <- y = sum_i x o_i y (right pre-Lie).
template <class Tree>
LinComb<Tree> right_pre_lie(const Tree& x, const Tree& y) {
  LinComb<Tree> out;
  for (std::size_t i = 1; i <= operad_arity(x); ++i) out.add(compose(x, i, y), 1);
  return out;
}

template <class Tree>
LinComb<Tree> right_pre_lie(const LinComb<Tree>& x, const LinComb<Tree>& y) {
  return bilinear(x, y, [](const Tree& a, const Tree& b) { return right_pre_lie(a, b); });
}

// [x, y] = x <- y - y <- x.
template <class Tree>
LinComb<Tree> operad_bracket(const Tree& x, const Tree& y) {
  return right_pre_lie(x, y) - right_pre_lie(y, x);
}

}  // namespace arboretum
