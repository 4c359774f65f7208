#pragma once

#include "chowdeg/forest.hpp"
#include "chowdeg/loaded_tree.hpp"

#include <map>
#include <optional>
#include <vector>

namespace chowdeg {

/// Integer combination of monomials over one ground set.
struct SignedSum {
    LabelSet labels;
    std::map<Monomial, Int> terms;

    explicit SignedSum(LabelSet ls) : labels(std::move(ls)) {}

    /// Adds c * m, merging with an existing term and dropping zeros.
    void add(const Monomial& m, const Int& c);
};

/// Four distinct labels straddling a cut {I, J}: i, j on the I side and
/// k, l on the J side.
struct Quadruple {
    int i;
    int j;
    int k;
    int l;

    bool operator==(const Quadruple& other) const {
        return i == other.i && j == other.j && k == other.k && l == other.l;
    }
    bool operator<(const Quadruple& other) const {
        if (i != other.i) return i < other.i;
        if (j != other.j) return j < other.j;
        if (k != other.k) return k < other.k;
        return l < other.l;
    }
};

/// Checks the labels are four distinct members of the ground set, that {i,j}
/// and {k,l} sit on opposite sides of the cut, and flips/sorts the pairs so
/// that i < j lie in part I and k < l in part J.  Throws DuplicateLabels or
/// ImproperQuadruple.
Quadruple normalize_quadruple(const Cut& cut, Quadruple q);

/// Keel's linear relation: the sum of all cuts {I, J} with i, j in I and
/// k, l in J, each with coefficient +1 (2^(n-4) terms).
SignedSum epsilon_sum(const LabelSet& ls, const Quadruple& q);

/// A quadruple is proper for edge e when i and j come from two distinct
/// clusters of the part-I endpoint and k, l from two distinct clusters of
/// the part-J endpoint.
bool is_proper_quadruple(const LoadedTree& t, int e, Quadruple q);

/// All proper quadruples of edge e in ascending (i, j, k, l) order.
/// Nonempty for every edge: both endpoints have at least three clusters.
std::vector<Quadruple> proper_quadruples(const LoadedTree& t, int e);

/// One step of linear reduction: replaces a single occurrence of the cut in
/// m by minus the rest of Keel's relation and drops every summand that meets
/// any remaining factor in the quadratic relation.  All surviving terms have
/// coefficient -1 and the same degree as m.
SignedSum linear_reduction_step(const Monomial& m, const Cut& cut, const Quadruple& q);

inline constexpr int kDefaultOracleCap = 9;

/// Slow reference evaluation by repeated linear reduction to a sum of clever
/// monomials; returns the coefficient sum.  The choice of cut and quadruple
/// at each step is deterministic (first factor of exponent >= 2 in rendering
/// order, smallest proper quadruple).  Throws CapExceeded when n > cap.
Int oracle_value(const Monomial& m, int cap = kDefaultOracleCap);

/// Same value computed on the tree side: the integral of a non-clever proper
/// tree is minus the sum over its tree reduction, applied recursively with
/// memoization.  With filter_balanced set, survival trees that are
/// unbalanced with respect to the fresh edge are dropped up front (they
/// integrate to zero).  Throws CapExceeded when n > cap.
Int tree_oracle_value(const Monomial& m, int cap = kDefaultOracleCap,
                      bool filter_balanced = false);

/// Configuration of a vertex split at one endpoint of a multi-edge: the
/// labels that move to the split-off vertex and the branches reattached to
/// it (edge indices; the multi-edge itself always stays behind).
struct SplitChoice {
    int vertex;
    std::vector<int> prime_labels;
    std::vector<int> prime_branches;
};

/// Splits the chosen endpoint of multi-edge e into a primed vertex carrying
/// the chosen labels and branches plus a double-primed vertex keeping the
/// multi-edge with multiplicity lowered by one; a fresh single edge joins the
/// two halves.  The quadruple's labels on the split side are forced onto the
/// primed vertex, and both halves must end up stable.  Returns nothing when
/// both endpoints of e have weight zero.
std::optional<LoadedTree> vertex_split(const LoadedTree& t, int e, Quadruple q,
                                       const SplitChoice& choice);

/// All trees produced by admissible vertex splits at either positive-weight
/// endpoint of e, deduplicated by canonical monomial and sorted by it.  With
/// filter_balanced set, trees that are unbalanced with respect to the fresh
/// edge are dropped (their integral vanishes).
std::vector<LoadedTree> tree_reduction(const LoadedTree& t, int e, Quadruple q,
                                       bool filter_balanced = false);

/// Outcome of cutting a tree along an edge.  For a single edge both sides
/// exist and the coefficient is 1.  For a multi-edge the coefficient is
/// C(r-1, |I1|-s1-2); a side is absent when its prescribed new multiplicity
/// would drop below one, in which case the coefficient is zero for proper
/// input and the integral of the whole tree vanishes.
struct EdgeCutResult {
    std::optional<LoadedTree> left;
    std::optional<LoadedTree> right;
    std::pair<int, int> fresh_labels;
    Int coefficient;
};

/// Cuts a multiplicity-one edge: each side keeps its component and gains one
/// fresh label at the endpoint.  The integral factors as the product of the
/// two sides.
EdgeCutResult cut_single_edge(const LoadedTree& t, int e);

/// Cuts a multi-edge of multiplicity r: each side keeps its component plus a
/// fresh two-label vertex attached to the endpoint by an edge of
/// multiplicity |I|-s-1 (labels minus own fringes minus one).  The integral
/// is the coefficient times the product of the sides.
EdgeCutResult cut_multi_edge(const LoadedTree& t, int e);

/// An edge whose single-edge cut leaves at least one star: any edge of a
/// star, otherwise the edge joining a vertex that carries only leaves to the
/// rest of the pruned tree.  Needs at least three vertices.
int find_star_cut(const LoadedTree& t);

/// Both sides of the single edge e are proper after cutting.
bool is_balanced_edge(const LoadedTree& t, int e);

/// Every multiplicity-one edge of t is balanced.
bool is_balanced(const LoadedTree& t);

} // namespace chowdeg
