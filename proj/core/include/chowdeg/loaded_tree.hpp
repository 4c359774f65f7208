#pragma once

#include "chowdeg/monomial.hpp"

#include <string>
#include <vector>

namespace chowdeg {

/// Tree whose vertices carry disjoint label sets and whose edges carry
/// positive multiplicities (the number of fringes of the edge).
///
/// Every vertex satisfies deg(v) + |h(v)| >= 3, and the nonempty label sets
/// partition the ground set.  Vertex ids are opaque; two trees compare equal
/// iff their canonical monomials do.
class LoadedTree {
public:
    struct Edge {
        int u;
        int v;
        int mult;
    };

    LoadedTree(LabelSet labels, std::vector<Bits> labeling, std::vector<Edge> edges);

    const LabelSet& labels() const { return labels_; }
    int n() const { return labels_.size(); }
    int vertex_count() const { return static_cast<int>(labeling_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Bits& labeling(int v) const { return labeling_[static_cast<size_t>(v)]; }
    const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    int degree_of(int v) const;
    /// Indices of the edges incident to v.
    const std::vector<int>& incident_edges(int v) const;
    int other_endpoint(int e, int v) const;

    /// Number of fringes, k = sum of all edge multiplicities.
    int fringe_count() const;
    /// A tree is proper when n = k + 3.
    bool is_proper() const { return n() == fringe_count() + 3; }

    int vertex_weight(int v) const {
        return degree_of(v) + static_cast<int>(labeling_[static_cast<size_t>(v)].count()) - 3;
    }
    int edge_weight(int e) const { return edges_[static_cast<size_t>(e)].mult - 1; }
    /// Sum of all edge weights; the sign of the integral is (-1) to this.
    int edge_weight_sum() const;

    /// Labels of the component of `from` after removing edge e.
    Bits side_of(int e, int from) const;
    /// Vertex ids of the component of `from` after removing edge e.
    std::vector<int> component_of(int e, int from) const;

    /// The cut induced by edge e (sides canonicalized).
    Cut cut_of(int e) const;
    /// Endpoint of e lying on the canonical part-I side of its cut.
    int part_i_endpoint(int e) const;

    bool operator==(const LoadedTree& other) const;
    bool operator!=(const LoadedTree& other) const { return !(*this == other); }

private:
    LabelSet labels_;
    std::vector<Bits> labeling_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;

    void validate() const;
};

/// Vertex and edge weights of a loaded tree: w(v) = deg(v) + |h(v)| - 3 and
/// w(e) = m(e) - 1.  On proper trees the two totals agree.
struct WeightedTree {
    struct Edge {
        int u;
        int v;
        int weight;
    };
    std::vector<int> vertex_weights;
    std::vector<Edge> edges;

    int vertex_weight_sum() const;
    int edge_weight_sum() const;
};

WeightedTree weighted_tree(const LoadedTree& t);

/// Piece of the label decomposition around a vertex: either a single label
/// carried by the vertex itself or all labels behind one incident edge.
struct Cluster {
    enum class Kind { Singleton, Proper };
    int owner;
    Kind kind;
    Bits labels;
    /// Incident edge index for proper clusters, -1 for singletons.
    int via_edge;
};

/// The |h(v)| singleton clusters followed by the deg(v) proper clusters of v,
/// in label respectively incident-edge order.  Their union is the ground set
/// minus nothing: every label lies in exactly one cluster.
std::vector<Cluster> clusters(const LoadedTree& t, int v);

/// Builds the unique loaded tree whose monomial is m.
///
/// The parts of the factors of m, taken relative to the smallest cut in
/// rendering order, form a family that is nested under inclusion; the tree is
/// the Hasse diagram of that family.  Throws NotATreeMonomial if a factor
/// pair fulfills the quadratic relation, and EmptyMonomialBadN for an empty
/// monomial whose ground set does not have exactly three labels.
LoadedTree monomial_to_tree(const Monomial& m);

/// The monomial of a loaded tree: one cut per edge, exponent = multiplicity.
/// A single-vertex tree must carry exactly three labels (empty monomial);
/// otherwise NoCorrespondingMonomial is thrown.
Monomial tree_to_monomial(const LoadedTree& t);

} // namespace chowdeg
