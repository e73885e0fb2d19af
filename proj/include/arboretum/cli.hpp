#pragma once

// The `arboretum` command line.  run() is kept free of process state so the
// test suite can drive it in-process.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "arboretum/check.hpp"
#include "arboretum/dot.hpp"
#include "arboretum/enumerate.hpp"
#include "arboretum/error.hpp"
#include "arboretum/format.hpp"
#include "arboretum/hopf.hpp"
#include "arboretum/operad.hpp"
#include "arboretum/rotation.hpp"
#include "arboretum/text.hpp"

namespace arboretum::cli {

namespace detail {

struct Options {
  std::string kind;
  std::string side;
  bool inverse = false;
  std::size_t size = 0;
  std::string measure;
  bool count_only = false;
  std::size_t max_grade = 4;
  std::string suite;
  std::uint64_t seed = 0;
  std::optional<std::size_t> index;
  std::vector<std::string> exprs;
};

inline std::optional<Kind> kind_from(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s == "hyper" ? Kind::hyper : Kind::reduced;
}

// "-" stands for standard input, one expression per line; blank lines skipped.
inline std::vector<std::string> expand_stdin(const std::vector<std::string>& exprs, std::istream& in) {
  std::vector<std::string> out;
  for (const auto& e : exprs) {
    if (e != "-") {
      out.push_back(e);
      continue;
    }
    for (std::string line; std::getline(in, line);)
      if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  return out;
}

template <class Tree>
Forest<Tree> on_side(const AnyForest& f) {
  if (auto* direct = std::get_if<Forest<Tree>>(&f)) return *direct;
  if constexpr (std::is_same_v<Tree, ReducedTree>)
    return phi_inv(std::get<HyperForest>(f));
  else
    return phi(std::get<ReducedForest>(f));
}

template <class Tree>
Tree single_tree(const Forest<Tree>& f, const std::string& text) {
  if (f.is_unit()) return Tree{};
  if (f.size() != 1) throw DomainError("expected a single tree, got a forest: " + text);
  return f.trees().front();
}

inline Kind side_of(const Options& o, const AnyForest& f) {
  if (!o.side.empty()) return o.side == "hyper" ? Kind::hyper : Kind::reduced;
  return std::holds_alternative<HyperForest>(f) ? Kind::hyper : Kind::reduced;
}

inline void emit(std::ostream& out, const std::vector<std::string>& lines) {
  for (const auto& l : lines) out << l << '\n';
}

inline void require_count(const std::vector<std::string>& exprs, std::size_t n, const char* verb) {
  if (exprs.size() != n)
    throw CLI::ValidationError(std::string(verb) + " takes " + std::to_string(n) +
                               " expression(s), got " + std::to_string(exprs.size()));
}

template <class Tree>
void run_binary(const std::string& verb, const Options& o, const AnyForest& a,
                const AnyForest& b, const std::string& ta, const std::string& tb,
                std::ostream& out) {
  const Tree x = single_tree(on_side<Tree>(a), ta);
  const Tree y = single_tree(on_side<Tree>(b), tb);
  if (verb == "prelie") {
    if (x == Tree{} || y == Tree{}) throw DomainError("grafting is defined on non-unit trees");
    emit(out, format_terms(pre_lie(x, y)));
  } else {
    out << print(compose(x, *o.index, y)) << '\n';
  }
}

inline int run_verb(const std::string& verb, Options o, std::istream& in, std::ostream& out) {
  if (verb == "enumerate") {
    Family family = Family::reduced;
    if (o.kind == "binary") family = Family::binary;
    else if (o.kind == "rootedtree") family = Family::rootedtree;
    else if (o.kind == "hyper") family = Family::hyper;
    Measure measure;
    if (!o.measure.empty()) {
      measure = o.measure == "internal" ? Measure::internal
                : o.measure == "edges"  ? Measure::edges
                : o.measure == "leaves" ? Measure::leaves
                                        : Measure::vertices;
    } else {
      measure = family == Family::binary     ? Measure::internal
                : family == Family::reduced ? Measure::leaves
                                            : Measure::vertices;
    }
    const SizeKey key{family, measure, o.size};
    if (o.count_only) {
      out << count(key).str() << '\n';
      return 0;
    }
    std::visit([&](const auto& list) { for (const auto& t : list) out << print(t) << '\n'; },
               generate(key));
    return 0;
  }
  if (verb == "check") {
    CheckOptions opt;
    opt.max_weight = o.max_grade;
    opt.seed = o.seed;
    std::vector<std::string> suites = o.suite.empty() ? check_suite_names()
                                                      : std::vector<std::string>{o.suite};
    bool ok = true;
    for (const auto& s : suites) {
      auto r = run_check(s, opt);
      if (r.ok()) {
        out << s << ": ok (" << r.cases << " cases)\n";
      } else {
        out << s << ": FAIL after " << r.cases << " cases: " << *r.counterexample << '\n';
        ok = false;
      }
    }
    return ok ? 0 : 1;
  }

  const auto exprs = expand_stdin(o.exprs, in);
  if (verb == "prelie" || verb == "compose") {
    std::vector<std::string> args = exprs;
    if (verb == "compose" && !o.index && args.size() == 3) {
      // Positional form: sigma i tau.
      try {
        o.index = std::stoull(args[1]);
      } catch (const std::exception&) {
        throw CLI::ValidationError("compose index '" + args[1] + "' is not a number");
      }
      args.erase(args.begin() + 1);
    }
    require_count(args, 2, verb.c_str());
    if (verb == "compose" && !o.index) throw CLI::ValidationError("compose needs --index N");
    const auto kind = kind_from(o.kind);
    const AnyForest a = parse_any(args[0], kind), b = parse_any(args[1], kind);
    if (side_of(o, a) == Kind::hyper)
      run_binary<HyperTree>(verb, o, a, b, args[0], args[1], out);
    else
      run_binary<ReducedTree>(verb, o, a, b, args[0], args[1], out);
    return 0;
  }

  if (exprs.empty()) throw CLI::ValidationError(verb + " needs at least one expression");
  for (const auto& text : exprs) {
    const AnyForest f = parse_any(text, kind_from(o.kind));
    if (verb == "parse") {
      std::visit([&](const auto& x) { out << print(x) << '\n'; }, f);
    } else if (verb == "rotate") {
      if (o.inverse) {
        auto* s = std::get_if<HyperForest>(&f);
        if (!s) throw DomainError("rotate --inverse expects a hypertree expression: " + text);
        out << print(phi_inv(*s)) << '\n';
      } else {
        auto* t = std::get_if<ReducedForest>(&f);
        if (!t) throw DomainError("rotate expects a reduced expression (use --inverse): " + text);
        out << print(phi(*t)) << '\n';
      }
    } else if (verb == "coproduct") {
      if (side_of(o, f) == Kind::hyper)
        emit(out, format_terms(coproduct(on_side<HyperTree>(f))));
      else
        emit(out, format_terms(coproduct(on_side<ReducedTree>(f))));
    } else if (verb == "antipode") {
      if (side_of(o, f) == Kind::hyper)
        emit(out, format_terms(antipode(on_side<HyperTree>(f))));
      else
        emit(out, format_terms(antipode(on_side<ReducedTree>(f))));
    } else if (verb == "dot") {
      std::visit([&](const auto& x) { out << render_dot(x); }, f);
    }
  }
  return 0;
}

}  // namespace detail

inline int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Planar reduced trees, hypertrees and their algebraic structures", "arboretum"};
  app.require_subcommand(1, 1);
  app.fallthrough(false);
  detail::Options o;

  const std::vector<std::string> sides{"reduced", "hyper"};
  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind, "Force the expression kind")->check(CLI::IsMember(sides));
  };
  auto add_side = [&](CLI::App* sub) {
    sub->add_option("--side", o.side, "Compute on this side, rotating the input if needed")
        ->check(CLI::IsMember(sides));
  };
  auto add_exprs = [&](CLI::App* sub) {
    sub->add_option("EXPR", o.exprs, "Expressions, or - for standard input");
  };

  auto* parse = app.add_subcommand("parse", "Print the canonical form of each expression");
  add_kind(parse);
  add_exprs(parse);

  auto* rotate = app.add_subcommand("rotate", "Apply the rotation correspondence");
  rotate->add_flag("--inverse", o.inverse, "Map hypertrees back to reduced trees");
  add_kind(rotate);
  add_exprs(rotate);

  auto* coproduct = app.add_subcommand("coproduct", "Admissible-cut coproduct");
  add_side(coproduct);
  add_kind(coproduct);
  add_exprs(coproduct);

  auto* antipode = app.add_subcommand("antipode", "Antipode");
  add_side(antipode);
  add_kind(antipode);
  add_exprs(antipode);

  auto* prelie = app.add_subcommand("prelie", "Grafting product t -> u");
  add_side(prelie);
  add_kind(prelie);
  add_exprs(prelie);

  auto* compose = app.add_subcommand("compose", "Partial composition: SIGMA [I] TAU");
  compose->add_option("--index", o.index, "1-based input of the first expression");
  add_side(compose);
  add_kind(compose);
  add_exprs(compose);

  auto* enumerate = app.add_subcommand("enumerate", "List or count trees of a given size");
  enumerate->add_option("--kind", o.kind, "Family")
      ->check(CLI::IsMember({"binary", "reduced", "rootedtree", "hyper"}));
  enumerate->add_option("--measure", o.measure, "Size measure")
      ->check(CLI::IsMember({"leaves", "vertices", "edges", "internal"}));
  enumerate->add_option("--size", o.size, "Size")->required();
  enumerate->add_flag("--count-only", o.count_only, "Print only the number of trees");

  auto* check = app.add_subcommand("check", "Run exhaustive property suites");
  check->add_option("--suite", o.suite, "Suite")->check(CLI::IsMember(check_suite_names()));
  check->add_option("--max-grade", o.max_grade,
                    "Size bound: leaves - 1 on reduced trees, vertices - 1 on hypertrees");
  check->add_option("--seed", o.seed, "Seed for the sampled cases");

  auto* dot = app.add_subcommand("dot", "Render as graphviz DOT");
  add_kind(dot);
  add_exprs(dot);

  if (argv.size() > 1 && !argv[1].empty() && argv[1][0] != '-' &&
      !app.get_subcommand_no_throw(argv[1])) {
    err << "error: unknown verb '" << argv[1] << "'\n" << app.help();
    return 2;
  }
  std::vector<std::string> args(argv.rbegin(), argv.rend() - 1);
  try {
    app.parse(args);
    const std::string verb = app.get_subcommands().front()->get_name();
    return detail::run_verb(verb, o, in, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace arboretum::cli
