#include "chowdeg/generators.hpp"

#include <algorithm>
#include <numeric>

namespace chowdeg {

LoadedTree clever_caterpillar(int n) {
    if (n < 4)
        throw TooSmall("a caterpillar needs n >= 4");
    LabelSet ls = LabelSet::first_n(n);
    int V = n - 2;
    std::vector<Bits> labeling;
    labeling.reserve(static_cast<size_t>(V));
    Bits first = ls.empty_bits();
    first.set(0);
    first.set(1);
    labeling.push_back(first);
    for (int j = 1; j <= n - 4; ++j) {
        Bits single = ls.empty_bits();
        single.set(static_cast<size_t>(j) + 1);
        labeling.push_back(single);
    }
    Bits last = ls.empty_bits();
    last.set(static_cast<size_t>(n) - 2);
    last.set(static_cast<size_t>(n) - 1);
    labeling.push_back(last);
    std::vector<LoadedTree::Edge> edges;
    edges.reserve(static_cast<size_t>(V) - 1);
    for (int v = 0; v + 1 < V; ++v)
        edges.push_back({v, v + 1, 1});
    return LoadedTree(ls, std::move(labeling), std::move(edges));
}

LoadedTree sun_like_tree(const std::vector<int>& weights) {
    int r = static_cast<int>(weights.size());
    int k = 0;
    for (int w : weights) {
        if (w < 1)
            throw InvalidTree("sun-like edge weights must be positive");
        k += w;
    }
    int center_labels = k - r + 3;
    int n = k + r + 3;
    LabelSet ls = LabelSet::first_n(n);
    std::vector<Bits> labeling;
    Bits center = ls.empty_bits();
    for (int i = 0; i < center_labels; ++i)
        center.set(static_cast<size_t>(i));
    labeling.push_back(center);
    std::vector<LoadedTree::Edge> edges;
    for (int leaf = 0; leaf < r; ++leaf) {
        Bits pair = ls.empty_bits();
        pair.set(static_cast<size_t>(center_labels + 2 * leaf));
        pair.set(static_cast<size_t>(center_labels + 2 * leaf) + 1);
        labeling.push_back(pair);
        edges.push_back({0, leaf + 1, weights[static_cast<size_t>(leaf)] + 1});
    }
    return LoadedTree(ls, std::move(labeling), std::move(edges));
}

LoadedTree random_clever_tree(int n, std::mt19937& rng) {
    if (n < 3)
        throw TooSmall("a clever tree needs n >= 3");
    LabelSet ls = LabelSet::first_n(n);
    if (n == 3)
        return LoadedTree(ls, {ls.full_bits()}, {});
    int V = n - 2;
    std::vector<int> degree(static_cast<size_t>(V), 0);
    std::vector<LoadedTree::Edge> edges;
    for (int v = 1; v < V; ++v) {
        std::vector<int> open;
        for (int u = 0; u < v; ++u)
            if (degree[static_cast<size_t>(u)] <= 2)
                open.push_back(u);
        int u = open[std::uniform_int_distribution<size_t>(0, open.size() - 1)(rng)];
        edges.push_back({u, v, 1});
        ++degree[static_cast<size_t>(u)];
        ++degree[static_cast<size_t>(v)];
    }
    std::vector<int> labels(static_cast<size_t>(n));
    std::iota(labels.begin(), labels.end(), 0);
    std::shuffle(labels.begin(), labels.end(), rng);
    std::vector<Bits> labeling(static_cast<size_t>(V), ls.empty_bits());
    size_t next = 0;
    for (int v = 0; v < V; ++v)
        for (int c = 0; c < 3 - degree[static_cast<size_t>(v)]; ++c)
            labeling[static_cast<size_t>(v)].set(static_cast<size_t>(labels[next++]));
    return LoadedTree(ls, std::move(labeling), std::move(edges));
}

namespace {

/// Contracts single edge `e` (merging its endpoints) and raises the
/// multiplicity of the surviving edge `boost` by one.  Both the label count
/// and the fringe count are preserved, so properness is too.
LoadedTree contract_and_boost(const LoadedTree& t, int e, int boost) {
    int gone = std::max(t.edge(e).u, t.edge(e).v);
    int kept = std::min(t.edge(e).u, t.edge(e).v);
    std::vector<Bits> labeling;
    for (int v = 0; v < t.vertex_count(); ++v)
        if (v != gone)
            labeling.push_back(t.labeling(v));
    labeling[static_cast<size_t>(kept)] |= t.labeling(gone);
    auto remap = [&](int v) { return v > gone ? v - 1 : (v == gone ? kept : v); };
    std::vector<LoadedTree::Edge> edges;
    for (int f = 0; f < t.edge_count(); ++f) {
        if (f == e)
            continue;
        const LoadedTree::Edge& ed = t.edge(f);
        edges.push_back({remap(ed.u), remap(ed.v), ed.mult + (f == boost ? 1 : 0)});
    }
    return LoadedTree(t.labels(), std::move(labeling), std::move(edges));
}

} // namespace

LoadedTree random_proper_tree(int n, std::mt19937& rng, int moves) {
    LoadedTree t = random_clever_tree(n, rng);
    if (moves < 0)
        moves = std::uniform_int_distribution<int>(0, std::max(0, n - 4))(rng);
    for (int round = 0; round < moves; ++round) {
        if (t.edge_count() < 2)
            break;
        std::vector<int> singles;
        for (int e = 0; e < t.edge_count(); ++e)
            if (t.edge(e).mult == 1)
                singles.push_back(e);
        if (singles.empty())
            break;
        int e = singles[std::uniform_int_distribution<size_t>(0, singles.size() - 1)(rng)];
        int boost = std::uniform_int_distribution<int>(0, t.edge_count() - 2)(rng);
        if (boost >= e)
            ++boost;
        t = contract_and_boost(t, e, boost);
    }
    return t;
}

} // namespace chowdeg
