#pragma once

#include "chowdeg/forest.hpp"
#include "chowdeg/loaded_tree.hpp"

#include <string>

namespace chowdeg {

/// Graphviz view of a loaded tree: nodes show their label sets, edges their
/// multiplicities.
std::string to_dot(const LoadedTree& t);

/// Graphviz view of a redundancy forest: nodes show weight and origin.
std::string to_dot(const RedundancyForest& f);

/// JSON object with the ground set, the per-vertex label lists, and the
/// [u, v, multiplicity] edge triples.
std::string to_json_string(const LoadedTree& t);

/// Inverse of to_json_string; throws ParseError on malformed input and the
/// usual construction errors on invalid trees.
LoadedTree loaded_tree_from_json(const std::string& text);

} // namespace chowdeg
