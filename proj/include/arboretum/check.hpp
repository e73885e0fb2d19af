#pragma once

// Exhaustive property suites over all elements up to a size bound.  Sizes are
// measured by weight (leaves - 1 on reduced trees, vertices - 1 on
// hypertrees), which bounds the grade and keeps every class finite.  Each
// suite stops at the first violation and reports it in canonical text.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "arboretum/enumerate.hpp"
#include "arboretum/hopf.hpp"
#include "arboretum/operad.hpp"
#include "arboretum/rotation.hpp"
#include "arboretum/text.hpp"

namespace arboretum {

struct CheckReport {
  std::string suite;
  std::size_t cases = 0;
  std::optional<std::string> counterexample;
  bool ok() const { return !counterexample.has_value(); }
};

struct CheckOptions {
  std::size_t max_weight = 4;
  std::uint64_t seed = 0;
  std::size_t samples = 200;
};

namespace detail {

class Checker {
 public:
  explicit Checker(std::string suite) { report_.suite = std::move(suite); }

  // Records one case; returns false once a counterexample is known.
  bool expect(bool holds, const std::function<std::string()>& describe) {
    if (report_.counterexample) return false;
    ++report_.cases;
    if (!holds) report_.counterexample = describe();
    return holds;
  }

  bool failed() const { return report_.counterexample.has_value(); }
  CheckReport report() const { return report_; }

 private:
  CheckReport report_;
};

template <class Tree>
std::vector<Tree> trees_up_to_weight(std::size_t max_weight, bool include_unit) {
  std::vector<Tree> out;
  if (include_unit) out.push_back(Tree{});
  for (std::size_t w = 1; w <= max_weight; ++w) {
    auto level = trees_of_weight<Tree>(w);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

template <class Tree>
void check_hopf_side(Checker& c, const CheckOptions& opt, const char* side) {
  const auto basis = basis_forests<Tree>(opt.max_weight);
  const std::string tag = std::string(side) + ": ";
  Antipode<Tree> s_left(AntipodeRecursion::left), s_right(AntipodeRecursion::right);
  for (const auto& f : basis) {
    const auto delta = coproduct(f);
    auto where = [&](const char* law) { return tag + law + " fails on " + print(f); };
    if (!c.expect(coproduct_left(delta) == coproduct_right(delta),
                  [&] { return where("coassociativity"); }))
      return;
    // Counit laws and grading conservation.
    ForestComb<Tree> left_counit, right_counit;
    bool graded = true;
    for (const auto& [term, k] : delta) {
      left_counit.add(term.second, k * counit(term.first));
      right_counit.add(term.first, k * counit(term.second));
      graded = graded && grade(term.first) + grade(term.second) == grade(f) &&
               weight(term.first) + weight(term.second) == weight(f);
    }
    if (!c.expect(left_counit == ForestComb<Tree>(f), [&] { return where("left counit law"); }))
      return;
    if (!c.expect(right_counit == ForestComb<Tree>(f), [&] { return where("right counit law"); }))
      return;
    if (!c.expect(graded, [&] { return where("grading conservation"); })) return;
    // m (S (x) id) Delta = m (id (x) S) Delta = eta epsilon.
    ForestComb<Tree> s_id, id_s;
    for (const auto& [term, k] : delta) {
      s_id += k * multiply(s_left(term.first), ForestComb<Tree>(term.second));
      id_s += k * multiply(ForestComb<Tree>(term.first), s_left(term.second));
    }
    ForestComb<Tree> eta_eps = f.is_unit() ? ForestComb<Tree>(f) : ForestComb<Tree>{};
    if (!c.expect(s_id == eta_eps, [&] { return where("S * id = eta epsilon"); })) return;
    if (!c.expect(id_s == eta_eps, [&] { return where("id * S = eta epsilon"); })) return;
    if (!c.expect(s_left(f) == s_right(f), [&] { return where("agreement of antipode recursions"); }))
      return;
  }
  // Multiplicativity on seeded random pairs.
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const auto& a = basis[pick(rng)];
    const auto& b = basis[pick(rng)];
    if (!c.expect(coproduct(concat(a, b)) == multiply(coproduct(a), coproduct(b)), [&] {
          return tag + "multiplicativity fails on " + print(a) + " , " + print(b);
        }))
      return;
  }
}

}  // namespace detail

inline CheckReport check_bijection(const CheckOptions& opt) {
  detail::Checker c("bijection");
  for (std::size_t n = 1; n <= opt.max_weight + 1; ++n) {
    for (const auto& t : generate_reduced(n)) {
      const HyperTree s = phi(t);
      if (!c.expect(phi_inv(s) == t, [&] { return "phi_inv(phi(t)) != t for t = " + print(t); }))
        return c.report();
      if (!c.expect(grade(s) == grade(t) && vertex_count(s) == leaf_count(t),
                    [&] { return "grading not transported for t = " + print(t); }))
        return c.report();
      for (const auto& [vertex, edge] : omega(t).pairs)
        if (!c.expect(at(t, vertex).arity() == at(s, edge).cardinality(),
                      [&] { return "omega breaks arity on t = " + print(t); }))
          return c.report();
    }
    for (const auto& s : generate_hyper(n))
      if (!c.expect(phi(phi_inv(s)) == s, [&] { return "phi(phi_inv(s)) != s for s = " + print(s); }))
        return c.report();
  }
  return c.report();
}

inline CheckReport check_order(const CheckOptions& opt) {
  detail::Checker c("order");
  for (std::size_t n = 1; n <= opt.max_weight + 1; ++n) {
    auto reduced = generate_reduced(n);
    auto hyper = generate_hyper(n);
    auto laws = [&](const auto& elems, const char* name) {
      for (const auto& a : elems) {
        if (!c.expect(leq(a, a), [&] { return std::string(name) + " not reflexive at " + print(a); }))
          return false;
        for (const auto& b : elems) {
          if (!c.expect(!(leq(a, b) && leq(b, a)) || a == b, [&] {
                return std::string(name) + " not antisymmetric at " + print(a) + " , " + print(b);
              }))
            return false;
          if (!leq(a, b)) continue;
          for (const auto& x : elems)
            if (!c.expect(!leq(b, x) || leq(a, x), [&] {
                  return std::string(name) + " not transitive at " + print(a) + " , " + print(b) +
                         " , " + print(x);
                }))
              return false;
        }
      }
      return true;
    };
    if (!laws(reduced, "reduced order") || !laws(hyper, "hypertree order")) return c.report();
    for (const auto& t1 : reduced)
      for (const auto& t2 : reduced)
        if (!c.expect(leq_reduced(t1, t2) == leq_hyper(phi(t1), phi(t2)), [&] {
              return "phi not monotone at " + print(t1) + " , " + print(t2);
            }))
          return c.report();
  }
  return c.report();
}

inline CheckReport check_hopf(const CheckOptions& opt) {
  detail::Checker c("hopf");
  detail::check_hopf_side<ReducedTree>(c, opt, "reduced");
  if (c.failed()) return c.report();
  detail::check_hopf_side<HyperTree>(c, opt, "hyper");
  if (c.failed()) return c.report();
  // Transfer identity on trees.
  for (const auto& t : detail::trees_up_to_weight<ReducedTree>(opt.max_weight, false)) {
    TensorComb<HyperTree> transported;
    for (const auto& [term, k] : coproduct(t)) transported.add({phi(term.first), phi(term.second)}, k);
    if (!c.expect(coproduct(phi(t)) == transported,
                  [&] { return "transfer identity fails on " + print(t); }))
      return c.report();
  }
  return c.report();
}

inline CheckReport check_prelie(const CheckOptions& opt) {
  detail::Checker c("prelie");
  // Left pre-Lie relation for grafting, on triples of total weight <= bound.
  const auto trees = detail::trees_up_to_weight<ReducedTree>(opt.max_weight, false);
  for (const auto& s : trees)
    for (const auto& t : trees)
      for (const auto& u : trees) {
        if (weight(s) + weight(t) + weight(u) > opt.max_weight) continue;
        LinComb<ReducedTree> S(s), T(t), U(u);
        auto lhs = pre_lie(pre_lie(S, T), U) - pre_lie(S, pre_lie(T, U));
        auto rhs = pre_lie(pre_lie(T, S), U) - pre_lie(T, pre_lie(S, U));
        if (!c.expect(lhs == rhs, [&] {
              return "left pre-Lie relation fails on " + print(s) + " , " + print(t) + " , " + print(u);
            }))
          return c.report();
      }
  // Right pre-Lie relation for the operadic product, unit included.
  const auto ops = detail::trees_up_to_weight<ReducedTree>(opt.max_weight, true);
  for (const auto& x : ops)
    for (const auto& y : ops)
      for (const auto& z : ops) {
        if (weight(x) + weight(y) + weight(z) > opt.max_weight) continue;
        LinComb<ReducedTree> X(x), Y(y), Z(z);
        auto lhs = right_pre_lie(right_pre_lie(X, Y), Z) - right_pre_lie(X, right_pre_lie(Y, Z));
        auto rhs = right_pre_lie(right_pre_lie(X, Z), Y) - right_pre_lie(X, right_pre_lie(Z, Y));
        if (!c.expect(lhs == rhs, [&] {
              return "right pre-Lie relation fails on " + print(x) + " , " + print(y) + " , " + print(z);
            }))
          return c.report();
      }
  // t -> u = sum_i u o_i t, and M = N.
  for (const auto& t : trees)
    for (const auto& u : trees) {
      if (weight(t) + weight(u) > opt.max_weight) continue;
      if (!c.expect(pre_lie(t, u) == right_pre_lie(u, t),
                    [&] { return "grafting differs from operadic sum on " + print(t) + " , " + print(u); }))
        return c.report();
      for (const auto& [v, m] : pre_lie(t, u))
        if (!c.expect(m == elementary_cut_count(t, u, v), [&] {
              return "M != N for " + print(t) + " , " + print(u) + " , " + print(v);
            }))
          return c.report();
    }
  for (const auto& v : trees)
    for (const auto& term : admissible_cuts(v)) {
      if (term.cut.total || term.cut.edges.size() != 1) continue;
      const auto& t = term.pruning.trees().front();
      if (!c.expect(graft_count(t, term.trunk, v) == elementary_cut_count(t, term.trunk, v), [&] {
            return "N != M for elementary cut of " + print(v);
          }))
        return c.report();
    }
  return c.report();
}

inline CheckReport check_operad(const CheckOptions& opt) {
  detail::Checker c("operad");
  const auto ops = detail::trees_up_to_weight<ReducedTree>(opt.max_weight, true);
  const ReducedTree e;
  for (const auto& x : ops) {
    if (!c.expect(compose(e, 1, x) == x, [&] { return "left unit law fails on " + print(x); }))
      return c.report();
    for (std::size_t i = 1; i <= leaf_count(x); ++i)
      if (!c.expect(compose(x, i, e) == x, [&] { return "right unit law fails on " + print(x); }))
        return c.report();
  }
  for (const auto& x : ops)
    for (const auto& y : ops)
      for (const auto& z : ops) {
        const std::size_t ax = leaf_count(x), ay = leaf_count(y);
        for (std::size_t i = 1; i <= ax; ++i) {
          for (std::size_t j = 1; j <= ay; ++j)
            if (!c.expect(compose(compose(x, i, y), i - 1 + j, z) == compose(x, i, compose(y, j, z)), [&] {
                  return "sequential axiom fails on " + print(x) + " , " + print(y) + " , " + print(z);
                }))
              return c.report();
          for (std::size_t k = i + 1; k <= ax; ++k)
            if (!c.expect(compose(compose(x, i, y), k + ay - 1, z) == compose(compose(x, k, z), i, y), [&] {
                  return "parallel axiom fails on " + print(x) + " , " + print(y) + " , " + print(z);
                }))
              return c.report();
        }
      }
  for (const auto& x : ops)
    for (const auto& y : ops)
      for (std::size_t i = 1; i <= leaf_count(x); ++i)
        if (!c.expect(phi(compose(x, i, y)) == compose(phi(x), i, phi(y)), [&] {
              return "phi-equivariance fails on " + print(x) + " o_" + std::to_string(i) + " " + print(y);
            }))
          return c.report();
  return c.report();
}

inline std::vector<std::string> check_suite_names() {
  return {"bijection", "hopf", "operad", "order", "prelie"};
}

inline CheckReport run_check(const std::string& suite, const CheckOptions& opt) {
  if (suite == "bijection") return check_bijection(opt);
  if (suite == "order") return check_order(opt);
  if (suite == "hopf") return check_hopf(opt);
  if (suite == "prelie") return check_prelie(opt);
  if (suite == "operad") return check_operad(opt);
  throw DomainError("unknown check suite '" + suite + "'");
}

}  // namespace arboretum
