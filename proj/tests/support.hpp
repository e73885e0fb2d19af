#pragma once

#include <string>

#include "arboretum.hpp"

namespace arboretum::testing {

inline ReducedTree R(const std::string& text) { return parse_tree<ReducedTree>(text); }
inline HyperTree H(const std::string& text) { return parse_tree<HyperTree>(text); }
inline ReducedForest RF(const std::string& text) { return parse_forest<ReducedTree>(text); }
inline HyperForest HF(const std::string& text) { return parse_forest<HyperTree>(text); }

// Fixed small trees, named as in the classical tables.
inline const std::string treeA = "(| (| |))";
inline const std::string treeB = "((| |) |)";
inline const std::string treeC = "(| (| (| |)))";
inline const std::string treeD = "((| |) (| |))";
inline const std::string treeE = "(((| |) |) |)";
inline const std::string treeF = "((| (| |)) |)";
inline const std::string treeG = "(| ((| |) |))";

}  // namespace arboretum::testing
