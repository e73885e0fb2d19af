#pragma once

// Canonical text format.
//
//   reduced := "|" | "(" reduced reduced+ ")" deco?
//   hyper   := "*" edges?      edges := "[" edge+ "]"
//   edge    := "(" member+ ")" deco?
//   member  := hyper | "(" hyper ")"
//   deco    := "@" identifier
//   forest  := term (";" term)*        (empty text = unit)
//
// Whitespace between tokens is ignored.  The printer wraps every edge member
// that itself carries edges in parentheses, e.g. `*[((*[(*)]))(*)]`; bare
// members are accepted on input.

#include <cctype>
#include <cstddef>
#include <string>
#include <optional>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "arboretum/error.hpp"
#include "arboretum/trees.hpp"

namespace arboretum {

enum class Kind { reduced, hyper };

inline const char* to_string(Kind k) { return k == Kind::reduced ? "reduced" : "hyper"; }

// ---------------------------------------------------------------------------
// Printing

inline void print_to(std::string& out, const ReducedTree& t) {
  if (t.is_leaf()) {
    out += '|';
    return;
  }
  out += '(';
  bool first = true;
  for (const auto& c : t.children()) {
    if (!first) out += ' ';
    first = false;
    print_to(out, c);
  }
  out += ')';
  if (t.tag()) out += '@' + *t.tag();
}

inline void print_to(std::string& out, const HyperTree& s) {
  out += '*';
  if (s.is_vertex()) return;
  out += '[';
  for (const auto& e : s.edges()) {
    out += '(';
    bool first = true;
    for (const auto& m : e.members()) {
      if (!first) out += ' ';
      first = false;
      if (m.is_vertex()) {
        out += '*';
      } else {
        out += '(';
        print_to(out, m);
        out += ')';
      }
    }
    out += ')';
    if (e.tag()) out += '@' + *e.tag();
  }
  out += ']';
}

inline std::string print(const ReducedTree& t) {
  std::string out;
  print_to(out, t);
  return out;
}

inline std::string print(const HyperTree& s) {
  std::string out;
  print_to(out, s);
  return out;
}

template <class Tree>
std::string print(const Forest<Tree>& f) {
  if (f.is_unit()) return print(Tree{});
  std::string out;
  bool first = true;
  for (const auto& t : f) {
    if (!first) out += ';';
    first = false;
    print_to(out, t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool at_end() { return peek() == '\0'; }
  std::size_t position() const { return pos_; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) {
    std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
    throw ParseError(what + ", found " + found, pos_);
  }

  OptionalTag decoration() {
    if (peek() != '@') return std::nullopt;
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected decoration identifier after '@'");
    return std::string(text_.substr(start, pos_ - start));
  }

  ReducedTree reduced() {
    char c = peek();
    if (c == '|') {
      ++pos_;
      return ReducedTree::leaf();
    }
    if (c != '(') fail("expected '|' or '('");
    std::size_t open = pos_;
    ++pos_;
    std::vector<ReducedTree> children;
    while (peek() != ')') {
      if (at_end()) fail("unterminated node");
      children.push_back(reduced());
    }
    ++pos_;
    if (children.size() < 2)
      throw ParseError("node arity " + std::to_string(children.size()) + " (need at least 2)",
                       open);
    OptionalTag tag = decoration();
    return ReducedTree::node(std::move(children), std::move(tag));
  }

  HyperTree hyper() {
    expect('*');
    if (peek() != '[') return HyperTree::vertex();
    ++pos_;
    std::vector<HyperEdge> edges;
    while (peek() != ']') {
      if (at_end()) fail("unterminated edge list");
      edges.push_back(edge());
    }
    if (edges.empty()) fail("empty edge list");
    ++pos_;
    return HyperTree(std::move(edges));
  }

  HyperEdge edge() {
    std::size_t open = pos_;
    expect('(');
    std::vector<HyperTree> members;
    while (peek() != ')') {
      if (at_end()) fail("unterminated edge");
      if (peek() == '(') {
        ++pos_;
        members.push_back(hyper());
        expect(')');
      } else {
        members.push_back(hyper());
      }
    }
    ++pos_;
    if (members.empty()) throw ParseError("empty hyperedge", open);
    OptionalTag tag = decoration();
    return HyperEdge(std::move(members), std::move(tag));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class Tree>
Tree parse_term(Parser& p) {
  if constexpr (std::is_same_v<Tree, ReducedTree>)
    return p.reduced();
  else
    return p.hyper();
}

}  // namespace detail

template <class Tree>
Tree parse_tree(std::string_view text) {
  detail::Parser p(text);
  Tree t = detail::parse_term<Tree>(p);
  if (!p.at_end()) p.fail("trailing input");
  return t;
}

template <class Tree>
Forest<Tree> parse_forest(std::string_view text) {
  detail::Parser p(text);
  std::vector<Tree> trees;
  if (p.at_end()) return {};
  trees.push_back(detail::parse_term<Tree>(p));
  while (!p.at_end()) {
    p.expect(';');
    trees.push_back(detail::parse_term<Tree>(p));
  }
  return Forest<Tree>(std::move(trees));
}

// Kind of an expression from its first token; nullopt for empty text.
inline std::optional<Kind> detect_kind(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '|' || c == '(') return Kind::reduced;
    if (c == '*') return Kind::hyper;
    throw ParseError(std::string("cannot determine expression kind from '") + c + "'", i);
  }
  return std::nullopt;
}

using AnyForest = std::variant<ReducedForest, HyperForest>;

inline AnyForest parse_any(std::string_view text, std::optional<Kind> kind = std::nullopt) {
  auto detected = detect_kind(text);
  Kind k = kind ? *kind : detected.value_or(Kind::reduced);
  if (k == Kind::reduced) return parse_forest<ReducedTree>(text);
  return parse_forest<HyperTree>(text);
}

}  // namespace arboretum
