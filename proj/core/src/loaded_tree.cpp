#include "chowdeg/loaded_tree.hpp"

#include <algorithm>
#include <numeric>

namespace chowdeg {

LoadedTree::LoadedTree(LabelSet labels, std::vector<Bits> labeling, std::vector<Edge> edges)
    : labels_(std::move(labels)), labeling_(std::move(labeling)), edges_(std::move(edges)) {
    incident_.assign(labeling_.size(), {});
    for (size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.u < 0 || ed.v < 0 || ed.u >= vertex_count() || ed.v >= vertex_count())
            throw InvalidTree("edge endpoint out of range");
        if (ed.u == ed.v)
            throw InvalidTree("self-loop edge");
        if (ed.mult < 1)
            throw InvalidTree("edge multiplicities must be positive");
        incident_[static_cast<size_t>(ed.u)].push_back(static_cast<int>(e));
        incident_[static_cast<size_t>(ed.v)].push_back(static_cast<int>(e));
    }
    validate();
}

void LoadedTree::validate() const {
    int V = vertex_count();
    if (V == 0)
        throw InvalidTree("a loaded tree needs at least one vertex");
    if (edge_count() != V - 1)
        throw InvalidTree("a tree on " + std::to_string(V) + " vertices needs " +
                          std::to_string(V - 1) + " edges");
    size_t n = static_cast<size_t>(labels_.size());
    Bits seen(n);
    for (const Bits& h : labeling_) {
        if (h.size() != n)
            throw InvalidTree("labeling mask size does not match the ground set");
        if (h.intersects(seen))
            throw InvalidTree("vertex label sets overlap");
        seen |= h;
    }
    if (!seen.all())
        throw InvalidTree("vertex label sets do not cover the ground set");
    // Connectivity; |E| = |V|-1 then forces acyclicity.
    std::vector<char> visited(static_cast<size_t>(V), 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : incident_[static_cast<size_t>(v)]) {
            int w = other_endpoint(e, v);
            if (!visited[static_cast<size_t>(w)]) {
                visited[static_cast<size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != V)
        throw InvalidTree("the graph is not connected");
    for (int v = 0; v < V; ++v)
        if (vertex_weight(v) < 0)
            throw InvalidTree("vertex " + std::to_string(v) +
                              " violates stability: deg + labels < 3");
}

int LoadedTree::degree_of(int v) const {
    return static_cast<int>(incident_[static_cast<size_t>(v)].size());
}

const std::vector<int>& LoadedTree::incident_edges(int v) const {
    return incident_[static_cast<size_t>(v)];
}

int LoadedTree::other_endpoint(int e, int v) const {
    const Edge& ed = edges_[static_cast<size_t>(e)];
    return ed.u == v ? ed.v : ed.u;
}

int LoadedTree::fringe_count() const {
    int k = 0;
    for (const Edge& e : edges_)
        k += e.mult;
    return k;
}

int LoadedTree::edge_weight_sum() const {
    int s = 0;
    for (const Edge& e : edges_)
        s += e.mult - 1;
    return s;
}

std::vector<int> LoadedTree::component_of(int e, int from) const {
    std::vector<int> out;
    std::vector<char> visited(static_cast<size_t>(vertex_count()), 0);
    std::vector<int> stack{from};
    visited[static_cast<size_t>(from)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (int f : incident_[static_cast<size_t>(v)]) {
            if (f == e)
                continue;
            int w = other_endpoint(f, v);
            if (!visited[static_cast<size_t>(w)]) {
                visited[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Bits LoadedTree::side_of(int e, int from) const {
    Bits side = labels_.empty_bits();
    for (int v : component_of(e, from))
        side |= labeling_[static_cast<size_t>(v)];
    return side;
}

Cut LoadedTree::cut_of(int e) const {
    return Cut(labels_, side_of(e, edges_[static_cast<size_t>(e)].u));
}

int LoadedTree::part_i_endpoint(int e) const {
    const Edge& ed = edges_[static_cast<size_t>(e)];
    Bits side = side_of(e, ed.u);
    return side.test(0) ? ed.u : ed.v;
}

bool LoadedTree::operator==(const LoadedTree& other) const {
    if (labels_ != other.labels_)
        return false;
    if (vertex_count() == 1 || other.vertex_count() == 1)
        return vertex_count() == other.vertex_count();
    return tree_to_monomial(*this) == tree_to_monomial(other);
}

int WeightedTree::vertex_weight_sum() const {
    return std::accumulate(vertex_weights.begin(), vertex_weights.end(), 0);
}

int WeightedTree::edge_weight_sum() const {
    int s = 0;
    for (const Edge& e : edges)
        s += e.weight;
    return s;
}

WeightedTree weighted_tree(const LoadedTree& t) {
    WeightedTree w;
    w.vertex_weights.resize(static_cast<size_t>(t.vertex_count()));
    for (int v = 0; v < t.vertex_count(); ++v)
        w.vertex_weights[static_cast<size_t>(v)] = t.vertex_weight(v);
    w.edges.reserve(static_cast<size_t>(t.edge_count()));
    for (const LoadedTree::Edge& e : t.edges())
        w.edges.push_back({e.u, e.v, e.mult - 1});
    return w;
}

std::vector<Cluster> clusters(const LoadedTree& t, int v) {
    std::vector<Cluster> out;
    const Bits& h = t.labeling(v);
    for (size_t i = h.find_first(); i != Bits::npos; i = h.find_next(i)) {
        Bits single = t.labels().empty_bits();
        single.set(i);
        out.push_back(Cluster{v, Cluster::Kind::Singleton, std::move(single), -1});
    }
    for (int e : t.incident_edges(v))
        out.push_back(Cluster{v, Cluster::Kind::Proper, t.side_of(e, t.other_endpoint(e, v)), e});
    return out;
}

LoadedTree monomial_to_tree(const Monomial& m) {
    if (auto pair = m.first_quadratic_pair())
        throw NotATreeMonomial("factors " + std::to_string(pair->first) + " and " +
                               std::to_string(pair->second) +
                               " fulfill the quadratic relation");
    const LabelSet& ls = m.labels();
    if (m.factor_count() == 0) {
        if (ls.size() != 3)
            throw EmptyMonomialBadN("the empty monomial corresponds to a tree only "
                                    "over a three-label ground set, got n=" +
                                    std::to_string(ls.size()));
        return LoadedTree(ls, {ls.full_bits()}, {});
    }

    // The parts of the remaining factors, taken relative to the first cut in
    // rendering order: compatibility puts exactly one part of every other
    // factor strictly inside part I or part J of the chosen cut.
    const auto& factors = m.factors();
    const Bits& root_i = factors[0].part_i;
    const Bits& root_j = factors[0].part_j;
    struct Part {
        Bits mask;
        int mult;
    };
    std::vector<Part> parts;
    parts.push_back({root_i, 0});
    parts.push_back({root_j, 0});
    for (size_t f = 1; f < factors.size(); ++f) {
        const Bits& pi = factors[f].part_i;
        const Bits& pj = factors[f].part_j;
        Bits chosen;
        if (pi.is_proper_subset_of(root_i) || pi.is_proper_subset_of(root_j))
            chosen = pi;
        else if (pj.is_proper_subset_of(root_i) || pj.is_proper_subset_of(root_j))
            chosen = pj;
        else
            throw NotATreeMonomial("factor parts are not nested");
        parts.push_back({std::move(chosen), factors[f].exponent});
    }

    // Hasse diagram of the parts under containment.  The parent of a part is
    // the smallest part strictly containing it; part I and part J act as the
    // two roots, joined by the edge of the chosen cut.
    size_t count = parts.size();
    std::vector<int> parent(count, -1);
    for (size_t p = 2; p < count; ++p) {
        int best = -1;
        size_t best_size = 0;
        for (size_t q = 0; q < count; ++q) {
            if (q == p || !parts[p].mask.is_proper_subset_of(parts[q].mask))
                continue;
            if (best < 0 || parts[q].mask.count() < best_size) {
                best = static_cast<int>(q);
                best_size = parts[q].mask.count();
            }
        }
        parent[p] = best;
    }

    std::vector<Bits> labeling;
    labeling.reserve(count);
    for (size_t p = 0; p < count; ++p)
        labeling.push_back(parts[p].mask);
    for (size_t p = 2; p < count; ++p)
        labeling[static_cast<size_t>(parent[p])] -= parts[p].mask;

    std::vector<LoadedTree::Edge> edges;
    edges.reserve(count);
    edges.push_back({0, 1, factors[0].exponent});
    for (size_t p = 2; p < count; ++p)
        edges.push_back({static_cast<int>(p), parent[p], parts[p].mult});

    return LoadedTree(ls, std::move(labeling), std::move(edges));
}

Monomial tree_to_monomial(const LoadedTree& t) {
    if (t.vertex_count() == 1) {
        if (t.labels().size() != 3)
            throw NoCorrespondingMonomial("a single vertex with " +
                                          std::to_string(t.labels().size()) +
                                          " labels has no monomial");
        return Monomial(t.labels());
    }
    // One pass from the root: the side of an edge toward the child is the
    // label union of the child subtree.
    int V = t.vertex_count();
    std::vector<Bits> subtree(static_cast<size_t>(V));
    std::vector<int> parent_edge(static_cast<size_t>(V), -1);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(V));
    std::vector<int> stack{0};
    std::vector<char> visited(static_cast<size_t>(V), 0);
    visited[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int e : t.incident_edges(v)) {
            int w = t.other_endpoint(e, v);
            if (!visited[static_cast<size_t>(w)]) {
                visited[static_cast<size_t>(w)] = 1;
                parent_edge[static_cast<size_t>(w)] = e;
                stack.push_back(w);
            }
        }
    }
    for (int v = 0; v < V; ++v)
        subtree[static_cast<size_t>(v)] = t.labeling(v);
    std::vector<std::pair<Bits, int>> raw;
    raw.reserve(static_cast<size_t>(t.edge_count()));
    for (size_t i = order.size(); i-- > 1;) {
        int v = order[i];
        int e = parent_edge[static_cast<size_t>(v)];
        int p = t.other_endpoint(e, v);
        raw.emplace_back(subtree[static_cast<size_t>(v)], t.edge(e).mult);
        subtree[static_cast<size_t>(p)] |= subtree[static_cast<size_t>(v)];
    }
    return Monomial(t.labels(), raw);
}

} // namespace chowdeg
