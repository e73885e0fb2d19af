#pragma once

// Graphviz rendering.  Vertices are points; a hyperedge with two vertices is
// drawn as an ordinary edge, a larger one as a hub node joined to the edge
// root and to its members in order.  Node identifiers follow a preorder walk.

#include <cstddef>
#include <string>

#include "arboretum/text.hpp"
#include "arboretum/trees.hpp"

namespace arboretum {

namespace detail {

class DotWriter {
 public:
  std::size_t reduced(const ReducedTree& t) {
    std::size_t id = next_++;
    if (t.is_leaf()) {
      body_ += "  n" + std::to_string(id) + " [shape=point];\n";
      return id;
    }
    body_ += "  n" + std::to_string(id) + " [shape=circle, label=\"" + t.tag().value_or("") +
             "\", width=0.15];\n";
    for (const auto& c : t.children()) {
      std::size_t child = reduced(c);
      body_ += "  n" + std::to_string(child) + " -> n" + std::to_string(id) + ";\n";
    }
    return id;
  }

  std::size_t hyper(const HyperTree& s) {
    std::size_t id = next_++;
    body_ += "  n" + std::to_string(id) + " [shape=point, width=0.1];\n";
    for (const auto& e : s.edges()) {
      if (e.cardinality() == 2) {
        std::size_t child = hyper(e.members().front());
        body_ += "  n" + std::to_string(child) + " -> n" + std::to_string(id);
        if (e.tag()) body_ += " [label=\"" + *e.tag() + "\"]";
        body_ += ";\n";
        continue;
      }
      std::size_t hub = next_++;
      body_ += "  n" + std::to_string(hub) + " [shape=circle, style=dashed, label=\"" +
               e.tag().value_or("") + "\"];\n";
      body_ += "  n" + std::to_string(hub) + " -> n" + std::to_string(id) + " [arrowhead=none];\n";
      std::size_t order = 1;
      for (const auto& m : e.members()) {
        std::size_t child = hyper(m);
        body_ += "  n" + std::to_string(child) + " -> n" + std::to_string(hub) +
                 " [arrowhead=none, taillabel=\"" + std::to_string(order++) + "\"];\n";
      }
    }
    return id;
  }

  std::string finish() const {
    return "digraph arboretum {\n  rankdir=BT;\n" + body_ + "}\n";
  }

 private:
  std::size_t next_ = 0;
  std::string body_;
};

}  // namespace detail

inline std::string render_dot(const ReducedTree& t) {
  detail::DotWriter w;
  w.reduced(t);
  return w.finish();
}

inline std::string render_dot(const HyperTree& s) {
  detail::DotWriter w;
  w.hyper(s);
  return w.finish();
}

template <class Tree>
std::string render_dot(const Forest<Tree>& f) {
  detail::DotWriter w;
  if (f.is_unit()) {
    if constexpr (std::is_same_v<Tree, ReducedTree>)
      w.reduced(ReducedTree::leaf());
    else
      w.hyper(HyperTree::vertex());
  }
  for (const auto& t : f) {
    if constexpr (std::is_same_v<Tree, ReducedTree>)
      w.reduced(t);
    else
      w.hyper(t);
  }
  return w.finish();
}

}  // namespace arboretum
