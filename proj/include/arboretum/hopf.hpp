#pragma once

// Graded connected Hopf algebras on reduced planar forests (admissible edge
// cuts) and on planar rooted hyperforests (right admissible vertex-cuts).
// Both algebras are free noncommutative on their trees, product given by
// concatenation, coefficients are exact integers.

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "arboretum/enumerate.hpp"
#include "arboretum/error.hpp"
#include "arboretum/lincomb.hpp"
#include "arboretum/rotation.hpp"
#include "arboretum/trees.hpp"

namespace arboretum {

template <class Tree>
using Tensor = std::pair<Forest<Tree>, Forest<Tree>>;
template <class Tree>
using Tensor3 = std::tuple<Forest<Tree>, Forest<Tree>, Forest<Tree>>;

template <class Tree>
using ForestComb = LinComb<Forest<Tree>>;
template <class Tree>
using TensorComb = LinComb<Tensor<Tree>>;
template <class Tree>
using Tensor3Comb = LinComb<Tensor3<Tree>>;

// ---------------------------------------------------------------------------
// Cuts

// An admissible cut of a reduced tree.  Each cut edge is addressed by the
// path of its upper endpoint, an internal vertex.  The total cut has no edges
// but is distinguished from the empty cut.
struct ReducedCut {
  bool total = false;
  std::vector<TreePath> edges;
};

// c_v^{(count)}: the `count` rightmost edges rooted at `vertex`.
struct SingleVertexCut {
  VertexPath vertex;
  std::size_t count = 0;
};

struct HyperCut {
  std::vector<SingleVertexCut> singles;
};

template <class Tree, class Cut>
struct CutTerm {
  Cut cut;
  Forest<Tree> pruning;
  Tree trunk;
};

namespace detail {

template <class Cut, class Tree>
struct PartialCut {
  Cut cut;
  std::vector<Tree> pruned;
  Tree trunk;
};

// Cartesian product of per-slot option lists.  `combine` receives one option
// per slot, in slot order.
template <class Option, class Combine>
void for_each_choice(const std::vector<std::vector<Option>>& slots, Combine&& combine) {
  std::vector<const Option*> pick(slots.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == slots.size()) {
      combine(pick);
      return;
    }
    for (const auto& o : slots[i]) {
      pick[i] = &o;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

// Non-total admissible cuts of the subtree rooted at internal vertex t.
inline std::vector<PartialCut<ReducedCut, ReducedTree>> reduced_cuts(const ReducedTree& t,
                                                                     const TreePath& path) {
  using P = PartialCut<ReducedCut, ReducedTree>;
  std::vector<std::vector<P>> slots;
  for (std::size_t j = 0; j < t.arity(); ++j) {
    const ReducedTree& child = t.children()[j];
    std::vector<P> options;
    if (child.is_leaf()) {
      options.push_back({{}, {}, child});
    } else {
      TreePath child_path = path;
      child_path.push_back(j);
      options.push_back({{false, {child_path}}, {child}, ReducedTree::leaf()});
      auto inner = reduced_cuts(child, child_path);
      options.insert(options.end(), std::make_move_iterator(inner.begin()),
                     std::make_move_iterator(inner.end()));
    }
    slots.push_back(std::move(options));
  }
  std::vector<P> out;
  for_each_choice(slots, [&](const std::vector<const P*>& pick) {
    P combined;
    std::vector<ReducedTree> children;
    for (const P* p : pick) {
      combined.cut.edges.insert(combined.cut.edges.end(), p->cut.edges.begin(), p->cut.edges.end());
      combined.pruned.insert(combined.pruned.end(), p->pruned.begin(), p->pruned.end());
      children.push_back(p->trunk);
    }
    combined.trunk = ReducedTree::node(std::move(children), t.tag());
    out.push_back(std::move(combined));
  });
  return out;
}

// All right admissible vertex-cuts of the hypertree rooted at s, the total
// cut included (as `fertility` rightmost edges at the root).
inline std::vector<PartialCut<HyperCut, HyperTree>> hyper_cuts(const HyperTree& s,
                                                               const VertexPath& path) {
  using P = PartialCut<HyperCut, HyperTree>;
  std::vector<P> out;
  const std::size_t k = s.fertility();
  for (std::size_t cut = 0; cut <= k; ++cut) {
    const std::size_t kept = k - cut;
    // One slot per member of each kept edge, in left-to-right order: edges
    // left to right, members against their stored counterclockwise order.
    struct Slot {
      std::size_t edge, member;
    };
    std::vector<Slot> order;
    std::vector<std::vector<P>> slots;
    for (std::size_t e = 0; e < kept; ++e) {
      const auto& members = s.edges()[e].members();
      for (std::size_t m = members.size(); m-- > 0;) {
        VertexPath child = path;
        child.push_back({e, m});
        order.push_back({e, m});
        slots.push_back(hyper_cuts(members[m], child));
      }
    }
    for_each_choice(slots, [&](const std::vector<const P*>& pick) {
      P combined;
      std::vector<std::vector<HyperTree>> trunk_members(kept);
      for (std::size_t e = 0; e < kept; ++e) trunk_members[e].resize(s.edges()[e].members().size());
      for (std::size_t i = 0; i < pick.size(); ++i) {
        const P* p = pick[i];
        combined.cut.singles.insert(combined.cut.singles.end(), p->cut.singles.begin(),
                                    p->cut.singles.end());
        combined.pruned.insert(combined.pruned.end(), p->pruned.begin(), p->pruned.end());
        trunk_members[order[i].edge][order[i].member] = p->trunk;
      }
      std::vector<HyperEdge> trunk_edges;
      for (std::size_t e = 0; e < kept; ++e)
        trunk_edges.emplace_back(std::move(trunk_members[e]), s.edges()[e].tag());
      if (cut > 0) {
        combined.cut.singles.push_back({path, cut});
        combined.pruned.emplace_back(
            std::vector<HyperEdge>(s.edges().begin() + kept, s.edges().end()));
      }
      combined.trunk = HyperTree(std::move(trunk_edges));
      out.push_back(std::move(combined));
    });
  }
  return out;
}

}  // namespace detail

// Admissible cuts of a non-unit reduced tree: the empty cut, the total cut,
// and every nonempty set of internal edges meeting each root-to-leaf path at
// most once.
inline std::vector<CutTerm<ReducedTree, ReducedCut>> admissible_cuts(const ReducedTree& t) {
  if (t.is_leaf()) throw DomainError("admissible cuts need a non-unit tree");
  std::vector<CutTerm<ReducedTree, ReducedCut>> out;
  for (auto& p : detail::reduced_cuts(t, {}))
    out.push_back({std::move(p.cut), ReducedForest(std::move(p.pruned)), std::move(p.trunk)});
  out.push_back({{true, {}}, ReducedForest(t), ReducedTree::leaf()});
  return out;
}

// Right admissible vertex-cuts of a hypertree.  For a non-unit hypertree the
// total cut appears as the cut of all edges at the root.
inline std::vector<CutTerm<HyperTree, HyperCut>> admissible_cuts(const HyperTree& s) {
  std::vector<CutTerm<HyperTree, HyperCut>> out;
  for (auto& p : detail::hyper_cuts(s, {}))
    out.push_back({std::move(p.cut), HyperForest(std::move(p.pruned)), std::move(p.trunk)});
  return out;
}

// ---------------------------------------------------------------------------
// Algebra and coalgebra structure

template <class Tree>
ForestComb<Tree> multiply(const ForestComb<Tree>& a, const ForestComb<Tree>& b) {
  return bilinear(a, b, [](const Forest<Tree>& x, const Forest<Tree>& y) {
    return ForestComb<Tree>(concat(x, y));
  });
}

template <class Tree>
TensorComb<Tree> multiply(const TensorComb<Tree>& a, const TensorComb<Tree>& b) {
  return bilinear(a, b, [](const Tensor<Tree>& x, const Tensor<Tree>& y) {
    return TensorComb<Tree>({concat(x.first, y.first), concat(x.second, y.second)});
  });
}

template <class Tree>
TensorComb<Tree> coproduct(const Tree& t) {
  TensorComb<Tree> out;
  if (is_unit(t)) return TensorComb<Tree>({Forest<Tree>{}, Forest<Tree>{}});
  for (auto& term : admissible_cuts(t)) out.add({term.pruning, Forest<Tree>(term.trunk)}, 1);
  return out;
}

// Extended multiplicatively to forests.
template <class Tree>
TensorComb<Tree> coproduct(const Forest<Tree>& f) {
  TensorComb<Tree> out({Forest<Tree>{}, Forest<Tree>{}});
  for (const auto& t : f) out = multiply(out, coproduct(t));
  return out;
}

template <class Tree>
TensorComb<Tree> coproduct(const ForestComb<Tree>& x) {
  return x.map([](const Forest<Tree>& f) { return coproduct(f); });
}

inline TensorComb<ReducedTree> coproduct_reduced(const ReducedForest& f) { return coproduct(f); }
inline TensorComb<HyperTree> coproduct_hyper(const HyperForest& f) { return coproduct(f); }

// Delta-bar: the coproduct minus x (x) 1 and 1 (x) x.
template <class Tree>
TensorComb<Tree> reduced_coproduct(const ForestComb<Tree>& x) {
  TensorComb<Tree> out = coproduct(x);
  for (const auto& [f, c] : x) {
    out.add({f, Forest<Tree>{}}, -c);
    out.add({Forest<Tree>{}, f}, -c);
  }
  return out;
}

template <class Tree>
TensorComb<Tree> reduced_coproduct(const Forest<Tree>& f) {
  return reduced_coproduct(ForestComb<Tree>(f));
}

template <class Tree>
Integer counit(const Forest<Tree>& f) {
  return f.is_unit() ? 1 : 0;
}

template <class Tree>
bool is_primitive(const ForestComb<Tree>& x) {
  return reduced_coproduct(x).is_zero();
}

template <class Tree>
bool is_primitive(const Forest<Tree>& f) {
  return !f.is_unit() && is_primitive(ForestComb<Tree>(f));
}

// (Delta (x) id) and (id (x) Delta) applied to a tensor.
template <class Tree>
Tensor3Comb<Tree> coproduct_left(const TensorComb<Tree>& x) {
  Tensor3Comb<Tree> out;
  for (const auto& [t, c] : x)
    for (const auto& [l, c2] : coproduct(t.first)) out.add({l.first, l.second, t.second}, c * c2);
  return out;
}

template <class Tree>
Tensor3Comb<Tree> coproduct_right(const TensorComb<Tree>& x) {
  Tensor3Comb<Tree> out;
  for (const auto& [t, c] : x)
    for (const auto& [r, c2] : coproduct(t.second)) out.add({t.first, r.first, r.second}, c * c2);
  return out;
}

// ---------------------------------------------------------------------------
// Antipode

enum class AntipodeRecursion { left, right };

// S(1) = 1 and, on the augmentation ideal,
//   left:  S(x) = -x - sum S(x') x''
//   right: S(x) = -x - sum x' S(x'')
// over the reduced coproduct.  Results are cached per object.
template <class Tree>
class Antipode {
 public:
  explicit Antipode(AntipodeRecursion recursion = AntipodeRecursion::left)
      : recursion_(recursion) {}

  ForestComb<Tree> operator()(const Forest<Tree>& f) {
    if (f.is_unit()) return ForestComb<Tree>(f);
    if (auto it = cache_.find(f); it != cache_.end()) return it->second;
    ForestComb<Tree> out = -ForestComb<Tree>(f);
    for (const auto& [term, c] : reduced_coproduct(f)) {
      ForestComb<Tree> piece = recursion_ == AntipodeRecursion::left
                                   ? multiply((*this)(term.first), ForestComb<Tree>(term.second))
                                   : multiply(ForestComb<Tree>(term.first), (*this)(term.second));
      out -= c * piece;
    }
    cache_.emplace(f, out);
    return out;
  }

  ForestComb<Tree> operator()(const ForestComb<Tree>& x) {
    return x.map([this](const Forest<Tree>& f) { return (*this)(f); });
  }

 private:
  AntipodeRecursion recursion_;
  std::map<Forest<Tree>, ForestComb<Tree>> cache_;
};

template <class Tree>
ForestComb<Tree> antipode(const Forest<Tree>& f,
                          AntipodeRecursion recursion = AntipodeRecursion::left) {
  return Antipode<Tree>(recursion)(f);
}

// Y(f) = grade(f) f.
template <class Tree>
ForestComb<Tree> grading_derivation(const Forest<Tree>& f) {
  return Integer(grade(f)) * ForestComb<Tree>(f);
}

template <class Tree>
ForestComb<Tree> grading_derivation(const ForestComb<Tree>& x) {
  return x.map([](const Forest<Tree>& f) { return grading_derivation(f); });
}

// ---------------------------------------------------------------------------
// Linear maps truncated by weight

// Trees of a given weight (leaves - 1, resp. vertices - 1), weight >= 1.
template <class Tree>
std::vector<Tree> trees_of_weight(std::size_t w) {
  if constexpr (std::is_same_v<Tree, ReducedTree>)
    return generate_reduced(w + 1);
  else
    return generate_hyper(w + 1);
}

// Every basis forest of weight <= max_weight, the unit included.
template <class Tree>
std::vector<Forest<Tree>> basis_forests(std::size_t max_weight) {
  std::vector<std::vector<Tree>> trees(max_weight + 1);
  for (std::size_t w = 1; w <= max_weight; ++w) trees[w] = trees_of_weight<Tree>(w);
  std::vector<std::vector<Forest<Tree>>> by_weight(max_weight + 1);
  by_weight[0].push_back(Forest<Tree>{});
  for (std::size_t w = 1; w <= max_weight; ++w)
    for (std::size_t first = 1; first <= w; ++first)
      for (const auto& t : trees[first])
        for (const auto& rest : by_weight[w - first])
          by_weight[w].push_back(concat(Forest<Tree>(t), rest));
  std::vector<Forest<Tree>> out;
  for (auto& level : by_weight) out.insert(out.end(), level.begin(), level.end());
  return out;
}

// A linear endomorphism given on every basis forest of weight <= truncation.
// Both coproducts preserve weight, so convolution closes on this domain.
template <class Tree>
class GradedMap {
 public:
  GradedMap() = default;

  template <class F>
  static GradedMap from_function(std::size_t truncation, F&& f) {
    GradedMap m;
    m.truncation_ = truncation;
    for (const auto& x : basis_forests<Tree>(truncation)) m.table_.emplace(x, f(x));
    return m;
  }

  static GradedMap identity(std::size_t truncation) {
    return from_function(truncation, [](const Forest<Tree>& x) { return ForestComb<Tree>(x); });
  }

  // eta o epsilon, the unit for convolution.
  static GradedMap unit(std::size_t truncation) {
    return from_function(truncation, [](const Forest<Tree>& x) {
      return x.is_unit() ? ForestComb<Tree>(x) : ForestComb<Tree>{};
    });
  }

  static GradedMap antipode(std::size_t truncation) {
    Antipode<Tree> s;
    return from_function(truncation, [&s](const Forest<Tree>& x) { return s(x); });
  }

  std::size_t truncation() const noexcept { return truncation_; }
  const std::map<Forest<Tree>, ForestComb<Tree>>& table() const noexcept { return table_; }

  const ForestComb<Tree>& operator()(const Forest<Tree>& x) const {
    auto it = table_.find(x);
    if (it == table_.end()) throw DomainError("forest outside the truncation of a graded map");
    return it->second;
  }

  ForestComb<Tree> operator()(const ForestComb<Tree>& x) const {
    return x.map([this](const Forest<Tree>& f) { return (*this)(f); });
  }

  friend bool operator==(const GradedMap&, const GradedMap&) = default;

 private:
  std::size_t truncation_ = 0;
  std::map<Forest<Tree>, ForestComb<Tree>> table_;
};

// (f * g)(x) = m (f (x) g) Delta(x).
template <class Tree>
GradedMap<Tree> convolve(const GradedMap<Tree>& f, const GradedMap<Tree>& g) {
  if (f.truncation() != g.truncation())
    throw DomainError("convolution of graded maps with different truncations (" +
                      std::to_string(f.truncation()) + " vs " + std::to_string(g.truncation()) +
                      ")");
  return GradedMap<Tree>::from_function(f.truncation(), [&](const Forest<Tree>& x) {
    ForestComb<Tree> out;
    for (const auto& [term, c] : coproduct(x))
      out += c * multiply(f(term.first), g(term.second));
    return out;
  });
}

// Dual basis element delta'_t as a linear form, valued in multiples of the
// unit.  Symmetry factors are 1 for planar trees.
template <class Tree>
GradedMap<Tree> dual_basis_form(const Forest<Tree>& target, std::size_t truncation) {
  return GradedMap<Tree>::from_function(truncation, [&](const Forest<Tree>& x) {
    return x == target ? ForestComb<Tree>(Forest<Tree>{}) : ForestComb<Tree>{};
  });
}

// Reads a linear form back as a combination of trees: x -> <form, x>.
template <class Tree>
LinComb<Tree> form_to_trees(const GradedMap<Tree>& form) {
  LinComb<Tree> out;
  for (const auto& [x, value] : form.table())
    if (x.size() == 1) out.add(x.trees().front(), value.coefficient(Forest<Tree>{}));
  return out;
}

// ---------------------------------------------------------------------------
// Pre-Lie structure

namespace detail {

// Every tree obtained from u by replacing one of its leaves with t.
inline void graftings(const ReducedTree& t, const ReducedTree& u, std::vector<ReducedTree>& out) {
  if (u.is_leaf()) {
    out.push_back(t);
    return;
  }
  auto children = u.children();
  for (std::size_t j = 0; j < children.size(); ++j) {
    std::vector<ReducedTree> sub;
    graftings(t, children[j], sub);
    for (auto& g : sub) {
      std::vector<ReducedTree> cs(children.begin(), children.end());
      cs[j] = std::move(g);
      out.push_back(ReducedTree::node(std::move(cs), u.tag()));
    }
  }
}

}  // namespace detail

// t -> u: sum of all graftings of t on a leaf of u.
inline LinComb<ReducedTree> pre_lie(const ReducedTree& t, const ReducedTree& u) {
  if (t.is_leaf() || u.is_leaf()) throw DomainError("pre-Lie grafting needs non-unit trees");
  std::vector<ReducedTree> grafts;
  detail::graftings(t, u, grafts);
  LinComb<ReducedTree> out;
  for (auto& g : grafts) out.add(g, 1);
  return out;
}

// s1 |> s2 := phi(phi_inv(s1) -> phi_inv(s2)).
inline LinComb<HyperTree> pre_lie(const HyperTree& s1, const HyperTree& s2) {
  if (s1.is_vertex() || s2.is_vertex()) throw DomainError("pre-Lie product needs non-unit hypertrees");
  return pre_lie(phi_inv(s1), phi_inv(s2)).map([](const ReducedTree& v) {
    return LinComb<HyperTree>(phi(v));
  });
}

template <class Tree>
LinComb<Tree> pre_lie(const LinComb<Tree>& x, const LinComb<Tree>& y) {
  return bilinear(x, y, [](const Tree& a, const Tree& b) { return pre_lie(a, b); });
}

// [t, u] = t -> u - u -> t.
template <class Tree>
LinComb<Tree> lie_bracket(const Tree& t, const Tree& u) {
  return pre_lie(t, u) - pre_lie(u, t);
}

template <class Tree>
LinComb<Tree> lie_bracket(const LinComb<Tree>& x, const LinComb<Tree>& y) {
  return pre_lie(x, y) - pre_lie(y, x);
}

// M(t, u, v): number of ways to graft t on a leaf of u and obtain v.
inline Integer graft_count(const ReducedTree& t, const ReducedTree& u, const ReducedTree& v) {
  return pre_lie(t, u).coefficient(v);
}

// N(t, u, v): number of elementary cuts c of v with P^c(v) = t, R^c(v) = u.
inline Integer elementary_cut_count(const ReducedTree& t, const ReducedTree& u,
                                    const ReducedTree& v) {
  if (v.is_leaf()) return 0;
  Integer n = 0;
  for (const auto& term : admissible_cuts(v))
    if (!term.cut.total && term.cut.edges.size() == 1 && term.pruning == ReducedForest(t) &&
        term.trunk == u)
      ++n;
  return n;
}

// ---------------------------------------------------------------------------
// Sub-families

inline bool is_binary(const ReducedTree& t) {
  if (t.is_leaf()) return true;
  if (t.arity() != 2) return false;
  return is_binary(t.children()[0]) && is_binary(t.children()[1]);
}

// t_r^{(n)} = | v t_r^{(n-1)}.
inline bool is_right_comb(const ReducedTree& t) {
  if (t.is_leaf()) return true;
  return t.arity() == 2 && t.children()[0].is_leaf() && is_right_comb(t.children()[1]);
}

// t_l^{(n)} = t_l^{(n-1)} v |.
inline bool is_left_comb(const ReducedTree& t) {
  if (t.is_leaf()) return true;
  return t.arity() == 2 && t.children()[1].is_leaf() && is_left_comb(t.children()[0]);
}

// One internal vertex.
inline bool is_corolla(const ReducedTree& t) {
  if (t.is_leaf()) return false;
  for (const auto& c : t.children())
    if (!c.is_leaf()) return false;
  return true;
}

inline bool is_ladder(const HyperTree& s) {
  if (s.is_vertex()) return true;
  return s.fertility() == 1 && s.edges()[0].cardinality() == 2 &&
         is_ladder(s.edges()[0].members()[0]);
}

// All edges rooted at the root, every member a bare vertex: ordinary
// corollas, single blobs, and mixtures of both.
inline bool is_blob_corolla(const HyperTree& s) {
  for (const auto& e : s.edges())
    for (const auto& m : e.members())
      if (!m.is_vertex()) return false;
  return true;
}

template <class Tree, class Pred>
bool all_trees(const Forest<Tree>& f, Pred&& pred) {
  for (const auto& t : f)
    if (!pred(t)) return false;
  return true;
}

inline bool is_binary_forest(const ReducedForest& f) { return all_trees(f, [](const auto& t) { return is_binary(t); }); }
inline bool is_right_comb(const ReducedForest& f) { return all_trees(f, [](const auto& t) { return is_right_comb(t); }); }
inline bool is_left_comb(const ReducedForest& f) { return all_trees(f, [](const auto& t) { return is_left_comb(t); }); }
inline bool is_ladder(const HyperForest& f) { return all_trees(f, [](const auto& t) { return is_ladder(t); }); }
inline bool is_blob_corolla(const HyperForest& f) { return all_trees(f, [](const auto& t) { return is_blob_corolla(t); }); }

}  // namespace arboretum
