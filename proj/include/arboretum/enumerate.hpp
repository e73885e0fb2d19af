#pragma once

// Exhaustive generation and counting of the four tree families, and the
// partial orders on reduced trees and hypertrees of a fixed size.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "arboretum/error.hpp"
#include "arboretum/lincomb.hpp"
#include "arboretum/rotation.hpp"
#include "arboretum/text.hpp"
#include "arboretum/trees.hpp"

namespace arboretum {

enum class Family { binary, reduced, rootedtree, hyper };
enum class Measure { internal, leaves, edges, vertices };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::binary: return "binary";
    case Family::reduced: return "reduced";
    case Family::rootedtree: return "rootedtree";
    case Family::hyper: return "hyper";
  }
  return "?";
}

inline const char* to_string(Measure m) {
  switch (m) {
    case Measure::internal: return "internal";
    case Measure::leaves: return "leaves";
    case Measure::edges: return "edges";
    case Measure::vertices: return "vertices";
  }
  return "?";
}

struct SizeKey {
  Family family = Family::reduced;
  Measure measure = Measure::leaves;
  std::size_t value = 0;
};

// Reduced trees graded by internal vertices and hypertrees graded by edges
// have infinite homogeneous components, so those measures are rejected.
inline void validate(const SizeKey& key) {
  bool ok = false;
  switch (key.family) {
    case Family::binary: ok = key.measure == Measure::internal || key.measure == Measure::leaves; break;
    case Family::reduced: ok = key.measure == Measure::leaves; break;
    case Family::rootedtree: ok = key.measure == Measure::edges || key.measure == Measure::vertices; break;
    case Family::hyper: ok = key.measure == Measure::vertices; break;
  }
  if (!ok)
    throw DomainError(std::string("measure '") + to_string(key.measure) + "' is not valid for family '" +
                      to_string(key.family) + "'");
}

inline constexpr std::size_t kDefaultGenerationBound = 8;

namespace detail {

template <class Tree>
void sort_by_text(std::vector<Tree>& v) {
  std::vector<std::pair<std::string, Tree>> keyed;
  keyed.reserve(v.size());
  for (auto& t : v) keyed.emplace_back(print(t), std::move(t));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  v.clear();
  for (auto& [k, t] : keyed) v.push_back(std::move(t));
}

// All ordered sequences (at least one element) of items whose sizes add up
// to `total`; items(m) lists the items of size m >= 1.
template <class Item, class Items>
std::vector<std::vector<Item>> sequences(std::size_t total, Items&& items,
                                         std::map<std::size_t, std::vector<std::vector<Item>>>& memo) {
  if (auto it = memo.find(total); it != memo.end()) return it->second;
  std::vector<std::vector<Item>> out;
  for (std::size_t first = 1; first <= total; ++first) {
    const auto& heads = items(first);
    if (first == total) {
      for (const auto& h : heads) out.push_back({h});
      continue;
    }
    auto tails = sequences<Item>(total - first, items, memo);
    for (const auto& h : heads)
      for (const auto& tail : tails) {
        std::vector<Item> seq{h};
        seq.insert(seq.end(), tail.begin(), tail.end());
        out.push_back(std::move(seq));
      }
  }
  memo.emplace(total, out);
  return out;
}

class ReducedGenerator {
 public:
  const std::vector<ReducedTree>& by_leaves(std::size_t n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    std::vector<ReducedTree> out;
    if (n == 1) {
      out.push_back(ReducedTree::leaf());
    } else {
      auto items = [this](std::size_t m) -> const std::vector<ReducedTree>& { return by_leaves(m); };
      // First child with a < n leaves, then at least one more child.
      for (std::size_t a = 1; a < n; ++a) {
        auto tails = sequences<ReducedTree>(n - a, items, seq_memo_);
        for (const auto& head : by_leaves(a))
          for (const auto& tail : tails) {
            std::vector<ReducedTree> children{head};
            children.insert(children.end(), tail.begin(), tail.end());
            out.push_back(ReducedTree::node(std::move(children)));
          }
      }
    }
    return memo_.emplace(n, std::move(out)).first->second;
  }

 private:
  std::map<std::size_t, std::vector<ReducedTree>> memo_;
  std::map<std::size_t, std::vector<std::vector<ReducedTree>>> seq_memo_;
};

class BinaryGenerator {
 public:
  const std::vector<ReducedTree>& by_internal(std::size_t n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    std::vector<ReducedTree> out;
    if (n == 0) {
      out.push_back(ReducedTree::leaf());
    } else {
      for (std::size_t left = 0; left < n; ++left)
        for (const auto& l : by_internal(left))
          for (const auto& r : by_internal(n - 1 - left)) out.push_back(ReducedTree::node({l, r}));
    }
    return memo_.emplace(n, std::move(out)).first->second;
  }

 private:
  std::map<std::size_t, std::vector<ReducedTree>> memo_;
};

class RootedTreeGenerator {
 public:
  const std::vector<HyperTree>& by_edges(std::size_t n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    std::vector<HyperTree> out;
    if (n == 0) {
      out.push_back(HyperTree::vertex());
    } else {
      // A branch of size k is a binary edge carrying a subtree with k - 1 edges.
      auto branches = [this](std::size_t k) -> const std::vector<HyperEdge>& {
        if (auto it = branch_memo_.find(k); it != branch_memo_.end()) return it->second;
        std::vector<HyperEdge> bs;
        for (const auto& sub : by_edges(k - 1)) bs.emplace_back(std::vector<HyperTree>{sub});
        return branch_memo_.emplace(k, std::move(bs)).first->second;
      };
      for (auto& edges : sequences<HyperEdge>(n, branches, seq_memo_))
        out.emplace_back(std::move(edges));
    }
    return memo_.emplace(n, std::move(out)).first->second;
  }

 private:
  std::map<std::size_t, std::vector<HyperTree>> memo_;
  std::map<std::size_t, std::vector<HyperEdge>> branch_memo_;
  std::map<std::size_t, std::vector<std::vector<HyperEdge>>> seq_memo_;
};

class HyperGenerator {
 public:
  const std::vector<HyperTree>& by_vertices(std::size_t n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    std::vector<HyperTree> out;
    if (n == 1) {
      out.push_back(HyperTree::vertex());
    } else if (n > 1) {
      auto trees = [this](std::size_t m) -> const std::vector<HyperTree>& { return by_vertices(m); };
      // An edge of size k holds member hypertrees with k vertices in total.
      auto edges = [this, trees](std::size_t k) -> const std::vector<HyperEdge>& {
        if (auto it = edge_memo_.find(k); it != edge_memo_.end()) return it->second;
        std::vector<HyperEdge> es;
        for (auto& members : sequences<HyperTree>(k, trees, member_memo_))
          es.emplace_back(std::move(members));
        return edge_memo_.emplace(k, std::move(es)).first->second;
      };
      for (auto& es : sequences<HyperEdge>(n - 1, edges, edge_seq_memo_))
        out.emplace_back(std::move(es));
    }
    return memo_.emplace(n, std::move(out)).first->second;
  }

 private:
  std::map<std::size_t, std::vector<HyperTree>> memo_;
  std::map<std::size_t, std::vector<HyperEdge>> edge_memo_;
  std::map<std::size_t, std::vector<std::vector<HyperTree>>> member_memo_;
  std::map<std::size_t, std::vector<std::vector<HyperEdge>>> edge_seq_memo_;
};

}  // namespace detail

// Typed generators, each in lexicographic order of canonical text.

inline std::vector<ReducedTree> generate_reduced(std::size_t leaves) {
  if (leaves == 0) return {};
  auto out = detail::ReducedGenerator{}.by_leaves(leaves);
  detail::sort_by_text(out);
  return out;
}

inline std::vector<ReducedTree> generate_binary(std::size_t internal_vertices) {
  auto out = detail::BinaryGenerator{}.by_internal(internal_vertices);
  detail::sort_by_text(out);
  return out;
}

inline std::vector<HyperTree> generate_rooted_trees(std::size_t edges) {
  auto out = detail::RootedTreeGenerator{}.by_edges(edges);
  detail::sort_by_text(out);
  return out;
}

inline std::vector<HyperTree> generate_hyper(std::size_t vertices) {
  if (vertices == 0) return {};
  auto out = detail::HyperGenerator{}.by_vertices(vertices);
  detail::sort_by_text(out);
  return out;
}

using TreeList = std::variant<std::vector<ReducedTree>, std::vector<HyperTree>>;

inline TreeList generate(const SizeKey& key, std::size_t bound = kDefaultGenerationBound) {
  validate(key);
  if (key.value > bound)
    throw DomainError("size " + std::to_string(key.value) + " exceeds generation bound " +
                      std::to_string(bound));
  const std::size_t v = key.value;
  switch (key.family) {
    case Family::binary:
      if (key.measure == Measure::internal) return generate_binary(v);
      return v == 0 ? std::vector<ReducedTree>{} : generate_binary(v - 1);
    case Family::reduced:
      return generate_reduced(v);
    case Family::rootedtree:
      if (key.measure == Measure::edges) return generate_rooted_trees(v);
      return v == 0 ? std::vector<HyperTree>{} : generate_rooted_trees(v - 1);
    case Family::hyper:
      return generate_hyper(v);
  }
  return std::vector<ReducedTree>{};
}

// Counts by recurrence, without materializing the trees.
inline Integer count(const SizeKey& key) {
  validate(key);
  const std::size_t v = key.value;
  auto catalan = [](std::size_t n) {
    std::vector<Integer> c(n + 1);
    c[0] = 1;
    for (std::size_t m = 1; m <= n; ++m)
      for (std::size_t i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
    return c[n];
  };
  // Reduced trees by leaves.  r(n) = sum_{a<n} r(a) S(n-a), where S(m) counts
  // nonempty sequences of trees with m leaves in total.
  auto reduced = [](std::size_t n) {
    if (n == 0) return Integer(0);
    std::vector<Integer> r(n + 1), s(n + 1);
    r[1] = 1;
    s[1] = 1;
    for (std::size_t m = 2; m <= n; ++m) {
      for (std::size_t a = 1; a < m; ++a) r[m] += r[a] * s[m - a];
      s[m] = r[m];
      for (std::size_t a = 1; a < m; ++a) s[m] += r[a] * s[m - a];
    }
    return r[n];
  };
  // Hypertrees by vertices: h(n) = E(n-1), E = sequences of edges, an edge of
  // size k being a nonempty sequence of hypertrees with k vertices in total.
  auto hyper = [](std::size_t n) {
    if (n == 0) return Integer(0);
    std::vector<Integer> h(n + 1), members(n + 1), edge_seq(n + 1);
    h[1] = 1;
    edge_seq[0] = 1;
    for (std::size_t m = 1; m < n; ++m) {
      members[m] = h[m];
      for (std::size_t a = 1; a < m; ++a) members[m] += h[a] * members[m - a];
      for (std::size_t k = 1; k <= m; ++k) edge_seq[m] += members[k] * edge_seq[m - k];
      h[m + 1] = edge_seq[m];
    }
    return h[n];
  };
  switch (key.family) {
    case Family::binary:
      if (key.measure == Measure::internal) return catalan(v);
      return v == 0 ? Integer(0) : catalan(v - 1);
    case Family::reduced:
      return reduced(v);
    case Family::rootedtree:
      if (key.measure == Measure::edges) return catalan(v);
      return v == 0 ? Integer(0) : catalan(v - 1);
    case Family::hyper:
      return hyper(v);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Partial orders

namespace detail {

inline std::size_t collect_intervals(const ReducedTree& t, std::size_t first,
                                     std::set<std::pair<std::size_t, std::size_t>>& out) {
  if (t.is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& c : t.children()) n += collect_intervals(c, first + n, out);
  out.emplace(first, first + n - 1);
  return n;
}

}  // namespace detail

// Leaf intervals spanned by the internal vertices.  A planar reduced tree is
// determined by this family.
inline std::set<std::pair<std::size_t, std::size_t>> leaf_intervals(const ReducedTree& t) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  detail::collect_intervals(t, 1, out);
  return out;
}

// t1 <= t2 iff t1 is obtained from t2 by contracting internal edges, i.e. the
// interval family of t1 is a subfamily of that of t2.
inline bool leq_reduced(const ReducedTree& t1, const ReducedTree& t2) {
  if (leaf_count(t1) != leaf_count(t2)) return false;
  auto a = leaf_intervals(t1), b = leaf_intervals(t2);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Edges of s as vertex-label sets, labels taken from the vertex/leaf map.
inline std::vector<std::set<std::size_t>> labeled_edges(const HyperTree& s) {
  auto labels = vertex_leaf_map(s).by_vertex();
  std::vector<std::set<std::size_t>> out;
  auto walk = [&](auto&& self, const HyperTree& v, const VertexPath& path) -> void {
    for (std::size_t e = 0; e < v.fertility(); ++e) {
      std::set<std::size_t> edge{labels.at(path)};
      const auto& members = v.edges()[e].members();
      for (std::size_t m = 0; m < members.size(); ++m) {
        VertexPath child = path;
        child.push_back({e, m});
        edge.insert(labels.at(child));
        self(self, members[m], child);
      }
      out.push_back(std::move(edge));
    }
  };
  walk(walk, s, {});
  return out;
}

// s1 <= s2 iff every edge of s2 lies inside an edge of s1 (vertices labeled
// canonically, roots coinciding).
inline bool leq_hyper(const HyperTree& s1, const HyperTree& s2) {
  const std::size_t n = vertex_count(s1);
  if (n != vertex_count(s2)) return false;
  // Both roots carry label n, the rightmost leaf.
  auto e1 = labeled_edges(s1), e2 = labeled_edges(s2);
  for (const auto& small : e2) {
    bool inside = std::any_of(e1.begin(), e1.end(), [&](const auto& big) {
      return std::includes(big.begin(), big.end(), small.begin(), small.end());
    });
    if (!inside) return false;
  }
  return true;
}

inline bool leq(const ReducedTree& a, const ReducedTree& b) { return leq_reduced(a, b); }
inline bool leq(const HyperTree& a, const HyperTree& b) { return leq_hyper(a, b); }

template <class Tree>
struct Extremes {
  std::vector<Tree> minimal;
  std::vector<Tree> maximal;
};

template <class Tree>
Extremes<Tree> minimal_maximal(const std::vector<Tree>& elements) {
  Extremes<Tree> out;
  for (const auto& x : elements) {
    bool is_min = true, is_max = true;
    for (const auto& y : elements) {
      if (x == y) continue;
      if (leq(y, x)) is_min = false;
      if (leq(x, y)) is_max = false;
    }
    if (is_min) out.minimal.push_back(x);
    if (is_max) out.maximal.push_back(x);
  }
  return out;
}

using AnyExtremes = std::variant<Extremes<ReducedTree>, Extremes<HyperTree>>;

inline AnyExtremes minimal_maximal(const SizeKey& key, std::size_t bound = kDefaultGenerationBound) {
  if (!(key.family == Family::reduced || key.family == Family::hyper))
    throw DomainError("partial orders are defined on reduced trees and hypertrees");
  auto list = generate(key, bound);
  if (auto* r = std::get_if<std::vector<ReducedTree>>(&list)) return minimal_maximal(*r);
  return minimal_maximal(std::get<std::vector<HyperTree>>(list));
}

}  // namespace arboretum
