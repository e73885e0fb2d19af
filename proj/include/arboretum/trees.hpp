#pragma once

// Immutable planar reduced trees and planar rooted hypertrees.
//
// A ReducedTree is either the single edge `|` or a node with at least two
// ordered children.  A HyperTree value denotes a vertex together with the
// ordered list of hyperedges rooted at it; every hyperedge carries a nonempty
// ordered list of member sub-hypertrees, stored in counterclockwise order
// starting after the edge's root.  Both types share their structure through
// reference-counted immutable nodes, so copies are cheap and equality is
// structural.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arboretum/error.hpp"

namespace arboretum {

using Tag = std::string;
using OptionalTag = std::optional<Tag>;

// Partitioned tag alphabet I_2 ⊔ I_3 ⊔ ...  Tags of different arities must be
// distinct.
class DecorationScheme {
 public:
  DecorationScheme() = default;

  DecorationScheme& add(std::size_t arity, const Tag& tag) {
    if (arity < 2) throw DomainError("decoration arity must be at least 2");
    if (auto it = arity_of_.find(tag); it != arity_of_.end() && it->second != arity)
      throw DomainError("tag '" + tag + "' already belongs to arity " +
                        std::to_string(it->second));
    arity_of_[tag] = arity;
    return *this;
  }

  std::optional<std::size_t> arity_of(const Tag& tag) const {
    auto it = arity_of_.find(tag);
    if (it == arity_of_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<Tag> tags_of_arity(std::size_t arity) const {
    std::vector<Tag> out;
    for (const auto& [tag, a] : arity_of_)
      if (a == arity) out.push_back(tag);
    return out;
  }

  void require(const OptionalTag& tag, std::size_t arity) const {
    if (!tag) throw DomainError("missing decoration for arity " + std::to_string(arity));
    auto a = arity_of(*tag);
    if (!a) throw DomainError("unknown decoration '" + *tag + "'");
    if (*a != arity)
      throw DomainError("decoration '" + *tag + "' has arity " + std::to_string(*a) +
                        ", used on arity " + std::to_string(arity));
  }

 private:
  std::map<Tag, std::size_t> arity_of_;
};

// ---------------------------------------------------------------------------
// ReducedTree

class ReducedTree {
 public:
  // The single edge `|`.
  ReducedTree() = default;

  static ReducedTree leaf() { return {}; }

  static ReducedTree node(std::vector<ReducedTree> children, OptionalTag tag = std::nullopt);

  bool is_leaf() const noexcept { return node_ == nullptr; }

  std::span<const ReducedTree> children() const noexcept;
  std::size_t arity() const noexcept { return children().size(); }
  const OptionalTag& tag() const noexcept;

  friend bool operator==(const ReducedTree& a, const ReducedTree& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
  friend std::strong_ordering operator<=>(const ReducedTree& a, const ReducedTree& b);

 private:
  struct Node;
  explicit ReducedTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ReducedTree::Node {
  std::vector<ReducedTree> children;
  OptionalTag tag;
};

inline ReducedTree ReducedTree::node(std::vector<ReducedTree> children, OptionalTag tag) {
  if (children.size() < 2)
    throw DomainError("reduced node must have at least 2 children, got " +
                      std::to_string(children.size()));
  return ReducedTree(std::make_shared<const Node>(Node{std::move(children), std::move(tag)}));
}

inline std::span<const ReducedTree> ReducedTree::children() const noexcept {
  if (!node_) return {};
  return node_->children;
}

inline const OptionalTag& ReducedTree::tag() const noexcept {
  static const OptionalTag none;
  return node_ ? node_->tag : none;
}

inline std::strong_ordering operator<=>(const ReducedTree& a, const ReducedTree& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.is_leaf()) return std::strong_ordering::less;
  if (b.is_leaf()) return std::strong_ordering::greater;
  auto ca = a.children(), cb = b.children();
  if (auto c = std::lexicographical_compare_three_way(ca.begin(), ca.end(), cb.begin(), cb.end());
      c != 0)
    return c;
  return a.tag() <=> b.tag();
}

// ---------------------------------------------------------------------------
// HyperTree / HyperEdge

class HyperEdge;

class HyperTree {
 public:
  // The single vertex `*`.
  HyperTree() = default;

  static HyperTree vertex() { return {}; }

  explicit HyperTree(std::vector<HyperEdge> edges);

  bool is_vertex() const noexcept { return edges_ == nullptr; }

  std::span<const HyperEdge> edges() const noexcept;
  // Number of edges rooted at this vertex.
  std::size_t fertility() const noexcept { return edges().size(); }

  friend bool operator==(const HyperTree& a, const HyperTree& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
  friend std::strong_ordering operator<=>(const HyperTree& a, const HyperTree& b);

 private:
  std::shared_ptr<const std::vector<HyperEdge>> edges_;
};

class HyperEdge {
 public:
  explicit HyperEdge(std::vector<HyperTree> members, OptionalTag tag = std::nullopt)
      : members_(std::move(members)), tag_(std::move(tag)) {
    if (members_.empty()) throw DomainError("hyperedge must have at least one member");
  }

  const std::vector<HyperTree>& members() const noexcept { return members_; }
  // Vertex count of the edge, root included.
  std::size_t cardinality() const noexcept { return members_.size() + 1; }
  const OptionalTag& tag() const noexcept { return tag_; }

  friend bool operator==(const HyperEdge&, const HyperEdge&) = default;
  friend std::strong_ordering operator<=>(const HyperEdge& a, const HyperEdge& b) {
    if (auto c = std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                        b.members_.begin(), b.members_.end());
        c != 0)
      return c;
    return a.tag_ <=> b.tag_;
  }

 private:
  std::vector<HyperTree> members_;
  OptionalTag tag_;
};

inline HyperTree::HyperTree(std::vector<HyperEdge> edges) {
  if (!edges.empty()) edges_ = std::make_shared<const std::vector<HyperEdge>>(std::move(edges));
}

inline std::span<const HyperEdge> HyperTree::edges() const noexcept {
  if (!edges_) return {};
  return *edges_;
}

inline std::strong_ordering operator<=>(const HyperTree& a, const HyperTree& b) {
  if (a.edges_ == b.edges_) return std::strong_ordering::equal;
  auto ea = a.edges(), eb = b.edges();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

// ---------------------------------------------------------------------------
// Units and gradings

inline bool is_unit(const ReducedTree& t) noexcept { return t.is_leaf(); }
inline bool is_unit(const HyperTree& s) noexcept { return s.is_vertex(); }

inline std::size_t leaf_count(const ReducedTree& t) {
  if (t.is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& c : t.children()) n += leaf_count(c);
  return n;
}

inline std::size_t vertex_count(const HyperTree& s) {
  std::size_t n = 1;
  for (const auto& e : s.edges())
    for (const auto& m : e.members()) n += vertex_count(m);
  return n;
}

// Number of internal vertices.
inline std::size_t grade(const ReducedTree& t) {
  if (t.is_leaf()) return 0;
  std::size_t n = 1;
  for (const auto& c : t.children()) n += grade(c);
  return n;
}

// Number of hyperedges.
inline std::size_t grade(const HyperTree& s) {
  std::size_t n = 0;
  for (const auto& e : s.edges()) {
    ++n;
    for (const auto& m : e.members()) n += grade(m);
  }
  return n;
}

// Secondary grading preserved by both coproducts: leaves - 1 (reduced side),
// vertices - 1 (hyper side).  Homogeneous components for (grade, weight) are
// finite, which is what makes exhaustive checks possible.
inline std::size_t weight(const ReducedTree& t) { return leaf_count(t) - 1; }
inline std::size_t weight(const HyperTree& s) { return vertex_count(s) - 1; }

// ---------------------------------------------------------------------------
// Constructors

inline ReducedTree vee(std::vector<ReducedTree> children, OptionalTag tag = std::nullopt,
                       const DecorationScheme* scheme = nullptr) {
  if (children.size() < 2)
    throw DomainError("vee needs at least 2 children, got " + std::to_string(children.size()));
  if (scheme && tag) scheme->require(tag, children.size());
  return ReducedTree::node(std::move(children), std::move(tag));
}

// True when every hyperedge has exactly two vertices, i.e. the hypertree is a
// planar rooted tree.
inline bool is_rooted_tree(const HyperTree& s) {
  for (const auto& e : s.edges()) {
    if (e.cardinality() != 2) return false;
    if (!is_rooted_tree(e.members().front())) return false;
  }
  return true;
}

inline void require_rooted_tree(const HyperTree& s, const char* op) {
  if (!is_rooted_tree(s))
    throw DomainError(std::string(op) + " is defined on planar rooted trees only");
}

// Grafts the trees on a common new root, one binary edge per tree.
inline HyperTree bplus(std::span<const HyperTree> forest) {
  std::vector<HyperEdge> edges;
  edges.reserve(forest.size());
  for (const auto& t : forest) {
    require_rooted_tree(t, "bplus");
    edges.emplace_back(std::vector<HyperTree>{t});
  }
  return HyperTree(std::move(edges));
}

inline HyperTree bplus(std::initializer_list<HyperTree> forest) {
  return bplus(std::span<const HyperTree>(forest.begin(), forest.size()));
}

// Left Butcher product: t becomes the new leftmost branch of u.
inline HyperTree butcher(const HyperTree& t, const HyperTree& u) {
  require_rooted_tree(t, "butcher");
  require_rooted_tree(u, "butcher");
  std::vector<HyperEdge> edges;
  edges.reserve(u.fertility() + 1);
  edges.emplace_back(std::vector<HyperTree>{t});
  edges.insert(edges.end(), u.edges().begin(), u.edges().end());
  return HyperTree(std::move(edges));
}

// Collects the roots of t_1..t_n into a new leftmost edge at the root of t_n,
// members in reversed order [t_{n-1}, ..., t_1].
inline HyperTree beta(std::span<const HyperTree> ts, OptionalTag tag = std::nullopt) {
  if (ts.size() < 2)
    throw DomainError("beta needs at least 2 hypertrees, got " + std::to_string(ts.size()));
  const HyperTree& last = ts.back();
  std::vector<HyperTree> members(ts.rbegin() + 1, ts.rend());
  std::vector<HyperEdge> edges;
  edges.reserve(last.fertility() + 1);
  edges.emplace_back(std::move(members), std::move(tag));
  edges.insert(edges.end(), last.edges().begin(), last.edges().end());
  return HyperTree(std::move(edges));
}

inline HyperTree beta(std::initializer_list<HyperTree> ts) {
  return beta(std::span<const HyperTree>(ts.begin(), ts.size()));
}

// Inverse of beta: the unique (s_1, ..., s_n) with beta(s_1..s_n) = s, where
// n is the cardinality of the leftmost root edge.  The tag of that edge is
// returned alongside.
struct BetaDecomposition {
  std::vector<HyperTree> parts;
  OptionalTag tag;
};

inline BetaDecomposition beta_decompose(const HyperTree& s) {
  if (s.is_vertex()) throw DomainError("the single vertex has no beta decomposition");
  const HyperEdge& first = s.edges().front();
  BetaDecomposition d;
  d.parts.assign(first.members().rbegin(), first.members().rend());
  d.parts.emplace_back(std::vector<HyperEdge>(s.edges().begin() + 1, s.edges().end()));
  d.tag = first.tag();
  return d;
}

// ---------------------------------------------------------------------------
// Decorations

inline ReducedTree strip_tags(const ReducedTree& t) {
  if (t.is_leaf()) return t;
  std::vector<ReducedTree> children;
  for (const auto& c : t.children()) children.push_back(strip_tags(c));
  return ReducedTree::node(std::move(children));
}

inline HyperTree strip_tags(const HyperTree& s) {
  std::vector<HyperEdge> edges;
  for (const auto& e : s.edges()) {
    std::vector<HyperTree> members;
    for (const auto& m : e.members()) members.push_back(strip_tags(m));
    edges.emplace_back(std::move(members));
  }
  return HyperTree(std::move(edges));
}

inline void validate(const ReducedTree& t, const DecorationScheme& scheme) {
  if (t.is_leaf()) return;
  scheme.require(t.tag(), t.arity());
  for (const auto& c : t.children()) validate(c, scheme);
}

inline void validate(const HyperTree& s, const DecorationScheme& scheme) {
  for (const auto& e : s.edges()) {
    scheme.require(e.tag(), e.cardinality());
    for (const auto& m : e.members()) validate(m, scheme);
  }
}

// ---------------------------------------------------------------------------
// Forests: words of non-unit trees.  The empty word is the algebra unit.

template <class Tree>
class Forest {
 public:
  using tree_type = Tree;

  Forest() = default;

  // Unit trees are dropped: they are the identity of concatenation.
  explicit Forest(std::vector<Tree> trees) {
    trees_.reserve(trees.size());
    for (auto& t : trees)
      if (!arboretum::is_unit(t)) trees_.push_back(std::move(t));
  }

  explicit Forest(Tree t) {
    if (!arboretum::is_unit(t)) trees_.push_back(std::move(t));
  }

  bool is_unit() const noexcept { return trees_.empty(); }
  std::size_t size() const noexcept { return trees_.size(); }
  const std::vector<Tree>& trees() const noexcept { return trees_; }
  auto begin() const noexcept { return trees_.begin(); }
  auto end() const noexcept { return trees_.end(); }

  friend bool operator==(const Forest&, const Forest&) = default;
  friend auto operator<=>(const Forest& a, const Forest& b) {
    return std::lexicographical_compare_three_way(a.trees_.begin(), a.trees_.end(),
                                                  b.trees_.begin(), b.trees_.end());
  }

 private:
  std::vector<Tree> trees_;
};

using ReducedForest = Forest<ReducedTree>;
using HyperForest = Forest<HyperTree>;

template <class Tree>
Forest<Tree> concat(const Forest<Tree>& a, const Forest<Tree>& b) {
  std::vector<Tree> trees(a.trees());
  trees.insert(trees.end(), b.trees().begin(), b.trees().end());
  return Forest<Tree>(std::move(trees));
}

template <class Tree>
std::size_t grade(const Forest<Tree>& f) {
  std::size_t n = 0;
  for (const auto& t : f) n += grade(t);
  return n;
}

template <class Tree>
std::size_t weight(const Forest<Tree>& f) {
  std::size_t n = 0;
  for (const auto& t : f) n += weight(t);
  return n;
}

}  // namespace arboretum
