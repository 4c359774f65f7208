#pragma once

#include "chowdeg/loaded_tree.hpp"

#include <random>
#include <vector>

namespace chowdeg {

/// Clever path tree over {1,...,n}: two labels at each end, one label per
/// inner vertex, all multiplicities one.  Needs n >= 4.
LoadedTree clever_caterpillar(int n);

/// Star with r leaves over {1,...,k+r+3}: the center carries k-r+3 labels,
/// leaf i carries two labels and hangs on an edge of multiplicity
/// weights[i]+1.  Proper by construction; empty weights give the one-vertex
/// tree.  All weights must be positive.
LoadedTree sun_like_tree(const std::vector<int>& weights);

/// Uniformly random-ish clever tree over {1,...,n} (n >= 3): a random tree
/// shape on n-2 vertices with maximum degree three, labels distributed at
/// random.  Every vertex weight and every edge weight is zero.
LoadedTree random_clever_tree(int n, std::mt19937& rng);

/// Random proper loaded tree over {1,...,n}: a random clever tree reshaped
/// by `moves` rounds of contracting a random single edge and raising the
/// multiplicity of a random surviving edge, both of which preserve
/// properness.  moves < 0 picks a random count; rounds stop early when no
/// single edge is left or only one edge remains.
LoadedTree random_proper_tree(int n, std::mt19937& rng, int moves = -1);

} // namespace chowdeg
