#pragma once

// Deterministic text rendering of linear combinations.  Terms are ordered
// lexicographically on their forests, each forest compared as a word of
// canonical tree texts (so the unit, the empty word, comes first).

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "arboretum/hopf.hpp"
#include "arboretum/lincomb.hpp"
#include "arboretum/text.hpp"

namespace arboretum {

template <class Tree>
std::vector<std::string> text_word(const Forest<Tree>& f) {
  std::vector<std::string> out;
  for (const auto& t : f) out.push_back(print(t));
  return out;
}

template <class Tree>
std::vector<std::string> text_word(const Tree& t) {
  return text_word(Forest<Tree>(t));
}

template <class Key, class Word, class Render>
std::vector<std::string> format_sorted(const LinComb<Key>& x, Word&& word, Render&& render) {
  std::vector<std::pair<decltype(word(std::declval<const Key&>())), std::string>> rows;
  for (const auto& [k, c] : x) rows.emplace_back(word(k), c.str() + " * " + render(k));
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> out;
  for (auto& r : rows) out.push_back(std::move(r.second));
  return out;
}

template <class Tree>
std::vector<std::string> format_terms(const LinComb<Tree>& x) {
  return format_sorted(
      x, [](const Tree& t) { return text_word(t); }, [](const Tree& t) { return print(t); });
}

template <class Tree>
std::vector<std::string> format_terms(const ForestComb<Tree>& x) {
  return format_sorted(
      x, [](const Forest<Tree>& f) { return text_word(f); },
      [](const Forest<Tree>& f) { return print(f); });
}

template <class Tree>
std::vector<std::string> format_terms(const TensorComb<Tree>& x) {
  return format_sorted(
      x, [](const Tensor<Tree>& t) { return std::make_pair(text_word(t.first), text_word(t.second)); },
      [](const Tensor<Tree>& t) { return print(t.first) + " (x) " + print(t.second); });
}

}  // namespace arboretum
