#pragma once

#include "chowdeg/bigint.hpp"
#include "chowdeg/loaded_tree.hpp"

#include <vector>

namespace chowdeg {

/// Result of subdividing every edge of the weighted tree (the midpoint
/// inherits the edge weight) and deleting all weight-zero vertices together
/// with their incident edges.  Every surviving edge joins a node that came
/// from a vertex to a node that came from an edge.
struct RedundancyForest {
    enum class Origin { Vertex, Edge };
    struct Node {
        int weight;
        Origin origin;
        /// Vertex or edge index in the source tree.
        int origin_id;
    };
    std::vector<Node> nodes;
    std::vector<std::pair<int, int>> edges;

    bool empty() const { return nodes.empty(); }
};

/// The subdivided tree with all vertices kept, including weight-zero ones.
RedundancyForest redundancy_tree(const WeightedTree& t);

RedundancyForest redundancy_forest(const WeightedTree& t);
RedundancyForest redundancy_forest(const LoadedTree& t);

/// Evaluates the forest by repeated leaf elimination.
///
/// A leaf l with neighbor p contributes 0 if w(l) > w(p) and the binomial
/// C(w(p), w(l)) otherwise, after which w(p) is lowered by w(l) and l is
/// removed.  An isolated node contributes 1 if its weight is 0 and kills the
/// product otherwise.  The empty forest evaluates to 1.  The result does not
/// depend on the elimination order; by default the removable node with the
/// smallest index goes first.
Int forest_value(const RedundancyForest& f);

/// Same, but candidates are ranked by the given priority permutation
/// (one entry per node, lower goes first).  Used to exercise order
/// independence.
Int forest_value(const RedundancyForest& f, const std::vector<int>& priority);

enum class Classification {
    ImproperDegree,
    ZeroByQuadratic,
    Clever,
    General,
};

const char* classification_name(Classification c);

struct IntegralValue {
    Int value;
    /// +1 or -1; follows (-1)^(sum of edge weights) on evaluated trees.
    int sign = 1;
    Int magnitude;
    /// True when a proper loaded tree backs the value.
    bool proper = false;
    Classification classification = Classification::General;
};

/// Degree of the monomial class of a loaded tree over its moduli space.
///
/// Zero unless the tree is proper; one on clever trees; otherwise the signed
/// value of the redundancy forest.
IntegralValue tree_value(const LoadedTree& t);

/// End-to-end evaluation of a monomial: zero when the degree is not n-3 or a
/// factor pair fulfills the quadratic relation, one on clever monomials, and
/// the signed forest value otherwise.
IntegralValue integral_value(const Monomial& m);

/// Closed form for a sun-like tree: center of weight k with r leaves of edge
/// weights w_1..w_r gives (-1)^k times the multinomial k!/(w_1!...w_r!).
/// Throws NotProper when k is not the sum of the weights.
Int sun_like_value(int k, const std::vector<int>& weights);

} // namespace chowdeg
