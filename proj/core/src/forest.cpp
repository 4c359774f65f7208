#include "chowdeg/forest.hpp"

#include <numeric>

namespace chowdeg {

RedundancyForest redundancy_tree(const WeightedTree& t) {
    RedundancyForest f;
    size_t V = t.vertex_weights.size();
    f.nodes.reserve(V + t.edges.size());
    for (size_t v = 0; v < V; ++v)
        f.nodes.push_back({t.vertex_weights[v], RedundancyForest::Origin::Vertex,
                           static_cast<int>(v)});
    for (size_t e = 0; e < t.edges.size(); ++e) {
        int mid = static_cast<int>(f.nodes.size());
        f.nodes.push_back({t.edges[e].weight, RedundancyForest::Origin::Edge,
                           static_cast<int>(e)});
        f.edges.emplace_back(t.edges[e].u, mid);
        f.edges.emplace_back(mid, t.edges[e].v);
    }
    return f;
}

RedundancyForest redundancy_forest(const WeightedTree& t) {
    RedundancyForest full = redundancy_tree(t);
    RedundancyForest f;
    std::vector<int> keep(full.nodes.size(), -1);
    for (size_t i = 0; i < full.nodes.size(); ++i) {
        if (full.nodes[i].weight != 0) {
            keep[i] = static_cast<int>(f.nodes.size());
            f.nodes.push_back(full.nodes[i]);
        }
    }
    for (const auto& [a, b] : full.edges)
        if (keep[static_cast<size_t>(a)] >= 0 && keep[static_cast<size_t>(b)] >= 0)
            f.edges.emplace_back(keep[static_cast<size_t>(a)], keep[static_cast<size_t>(b)]);
    return f;
}

RedundancyForest redundancy_forest(const LoadedTree& t) {
    return redundancy_forest(weighted_tree(t));
}

Int forest_value(const RedundancyForest& f, const std::vector<int>& priority) {
    size_t V = f.nodes.size();
    std::vector<int> weight(V);
    for (size_t i = 0; i < V; ++i)
        weight[i] = f.nodes[i].weight;
    std::vector<std::vector<int>> adj(V);
    for (const auto& [a, b] : f.edges) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    std::vector<int> degree(V);
    for (size_t i = 0; i < V; ++i)
        degree[i] = static_cast<int>(adj[i].size());
    std::vector<char> alive(V, 1);

    Int product = 1;
    for (size_t step = 0; step < V; ++step) {
        // Among nodes of degree <= 1 the one with the smallest priority goes
        // first; a forest always has one.
        int pick = -1;
        for (size_t i = 0; i < V; ++i)
            if (alive[i] && degree[i] <= 1 &&
                (pick < 0 || priority[i] < priority[static_cast<size_t>(pick)]))
                pick = static_cast<int>(i);
        size_t l = static_cast<size_t>(pick);
        if (degree[l] == 0) {
            if (weight[l] != 0)
                return 0;
        } else {
            int p = -1;
            for (int nb : adj[l])
                if (alive[static_cast<size_t>(nb)])
                    p = nb;
            size_t pp = static_cast<size_t>(p);
            if (weight[l] > weight[pp])
                return 0;
            product *= binomial(weight[pp], weight[l]);
            weight[pp] -= weight[l];
            --degree[pp];
        }
        alive[l] = 0;
        degree[l] = -1;
    }
    return product;
}

Int forest_value(const RedundancyForest& f) {
    std::vector<int> priority(f.nodes.size());
    std::iota(priority.begin(), priority.end(), 0);
    return forest_value(f, priority);
}

const char* classification_name(Classification c) {
    switch (c) {
    case Classification::ImproperDegree:
        return "improper-degree";
    case Classification::ZeroByQuadratic:
        return "zero-by-quadratic";
    case Classification::Clever:
        return "clever";
    case Classification::General:
        return "general";
    }
    return "unknown";
}

namespace {

IntegralValue evaluate_tree(const LoadedTree& t) {
    IntegralValue out;
    if (!t.is_proper()) {
        out.value = 0;
        out.magnitude = 0;
        out.sign = 1;
        out.proper = false;
        out.classification = Classification::ImproperDegree;
        return out;
    }
    out.proper = true;
    int s = t.edge_weight_sum();
    if (s == 0) {
        // All multiplicities are one and the tree is proper, so it is clever.
        out.value = 1;
        out.sign = 1;
        out.magnitude = 1;
        out.classification = Classification::Clever;
        return out;
    }
    out.classification = Classification::General;
    out.sign = (s % 2 == 0) ? 1 : -1;
    out.magnitude = forest_value(redundancy_forest(t));
    out.value = out.sign * out.magnitude;
    return out;
}

} // namespace

IntegralValue tree_value(const LoadedTree& t) {
    return evaluate_tree(t);
}

IntegralValue integral_value(const Monomial& m) {
    IntegralValue out;
    if (m.degree() != m.n() - 3) {
        out.value = 0;
        out.magnitude = 0;
        out.sign = 1;
        out.proper = false;
        out.classification = Classification::ImproperDegree;
        return out;
    }
    if (m.first_quadratic_pair()) {
        out.value = 0;
        out.magnitude = 0;
        out.sign = 1;
        out.proper = false;
        out.classification = Classification::ZeroByQuadratic;
        return out;
    }
    // Tree monomial of degree n-3; the tree exists (n=3 gives the single
    // vertex) and is proper, so this cannot report ImproperDegree again.
    return evaluate_tree(monomial_to_tree(m));
}

Int sun_like_value(int k, const std::vector<int>& weights) {
    long sum = 0;
    std::vector<long> parts;
    parts.reserve(weights.size());
    for (int w : weights) {
        if (w < 1)
            throw NotProper("sun-like edge weights must be positive");
        sum += w;
        parts.push_back(w);
    }
    if (k != sum)
        throw NotProper("a sun-like tree is proper only when the center weight " +
                        std::to_string(k) + " equals the sum of the edge weights " +
                        std::to_string(sum));
    Int mag = multinomial(k, parts);
    return (k % 2 == 0) ? mag : -mag;
}

} // namespace chowdeg
