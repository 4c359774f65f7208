#include "chowdeg/reduction.hpp"

#include <algorithm>
#include <set>

namespace chowdeg {

void SignedSum::add(const Monomial& m, const Int& c) {
    if (m.labels() != labels)
        throw MismatchedLabelSets("term lives over a different ground set");
    if (c == 0)
        return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

namespace {

std::optional<Quadruple> try_normalize(const Cut& cut, Quadruple q) {
    std::set<int> distinct{q.i, q.j, q.k, q.l};
    if (distinct.size() != 4)
        throw DuplicateLabels("a quadruple needs four distinct labels");
    bool si = cut.on_part_i(q.i);
    bool sj = cut.on_part_i(q.j);
    bool sk = cut.on_part_i(q.k);
    bool sl = cut.on_part_i(q.l);
    if (si != sj || sk != sl || si == sk)
        return std::nullopt;
    Quadruple n = q;
    if (!si)
        n = Quadruple{q.k, q.l, q.i, q.j};
    if (n.i > n.j)
        std::swap(n.i, n.j);
    if (n.k > n.l)
        std::swap(n.k, n.l);
    return n;
}

} // namespace

Quadruple normalize_quadruple(const Cut& cut, Quadruple q) {
    auto n = try_normalize(cut, q);
    if (!n)
        throw ImproperQuadruple("the pairs of the quadruple must lie on opposite "
                                "sides of the cut");
    return *n;
}

SignedSum epsilon_sum(const LabelSet& ls, const Quadruple& q) {
    std::set<int> distinct{q.i, q.j, q.k, q.l};
    if (distinct.size() != 4)
        throw DuplicateLabels("a quadruple needs four distinct labels");
    size_t fi = static_cast<size_t>(ls.index_of(q.i));
    size_t fj = static_cast<size_t>(ls.index_of(q.j));
    size_t fk = static_cast<size_t>(ls.index_of(q.k));
    size_t fl = static_cast<size_t>(ls.index_of(q.l));
    std::vector<size_t> free;
    for (size_t idx = 0; idx < static_cast<size_t>(ls.size()); ++idx)
        if (idx != fi && idx != fj && idx != fk && idx != fl)
            free.push_back(idx);
    SignedSum sum(ls);
    Bits base = ls.empty_bits();
    base.set(fi);
    base.set(fj);
    for (size_t mask = 0; mask < (size_t{1} << free.size()); ++mask) {
        Bits side = base;
        for (size_t b = 0; b < free.size(); ++b)
            if (mask & (size_t{1} << b))
                side.set(free[b]);
        sum.add(Monomial(ls, {{side, 1}}), 1);
    }
    return sum;
}

namespace {

/// Cluster ordinal of every part-side label at the given endpoint of e,
/// leaving out the cluster that looks down the edge itself.
std::vector<std::pair<int, int>> side_labels_with_cluster(const LoadedTree& t, int e, int v) {
    std::vector<std::pair<int, int>> out;
    int id = 0;
    for (const Cluster& c : clusters(t, v)) {
        if (c.via_edge == e)
            continue;
        for (int label : t.labels().labels_of(c.labels))
            out.emplace_back(label, id);
        ++id;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

bool is_proper_quadruple(const LoadedTree& t, int e, Quadruple q) {
    Cut cut = t.cut_of(e);
    auto nq = try_normalize(cut, q);
    if (!nq)
        return false;
    int v1 = t.part_i_endpoint(e);
    int v2 = t.other_endpoint(e, v1);
    auto find_cluster = [](const std::vector<std::pair<int, int>>& list, int label) {
        for (const auto& [l, c] : list)
            if (l == label)
                return c;
        return -1;
    };
    auto side1 = side_labels_with_cluster(t, e, v1);
    auto side2 = side_labels_with_cluster(t, e, v2);
    int ci = find_cluster(side1, nq->i);
    int cj = find_cluster(side1, nq->j);
    int ck = find_cluster(side2, nq->k);
    int cl = find_cluster(side2, nq->l);
    return ci >= 0 && cj >= 0 && ck >= 0 && cl >= 0 && ci != cj && ck != cl;
}

std::vector<Quadruple> proper_quadruples(const LoadedTree& t, int e) {
    int v1 = t.part_i_endpoint(e);
    int v2 = t.other_endpoint(e, v1);
    auto side1 = side_labels_with_cluster(t, e, v1);
    auto side2 = side_labels_with_cluster(t, e, v2);
    std::vector<Quadruple> out;
    for (size_t a = 0; a < side1.size(); ++a)
        for (size_t b = a + 1; b < side1.size(); ++b) {
            if (side1[a].second == side1[b].second)
                continue;
            for (size_t c = 0; c < side2.size(); ++c)
                for (size_t d = c + 1; d < side2.size(); ++d) {
                    if (side2[c].second == side2[d].second)
                        continue;
                    out.push_back(Quadruple{side1[a].first, side1[b].first,
                                            side2[c].first, side2[d].first});
                }
        }
    std::sort(out.begin(), out.end());
    return out;
}

SignedSum linear_reduction_step(const Monomial& m, const Cut& cut, const Quadruple& q) {
    if (auto pair = m.first_quadratic_pair())
        throw NotATreeMonomial("the monomial vanishes by the quadratic relation");
    auto idx = m.find_factor(cut);
    if (!idx || m.exponent_at(*idx) < 2)
        throw ExponentTooLow("linear reduction needs the cut at exponent >= 2, got " +
                             std::to_string(idx ? m.exponent_at(*idx) : 0));
    LoadedTree t = monomial_to_tree(m);
    int e = -1;
    for (int f = 0; f < t.edge_count(); ++f)
        if (t.cut_of(f).part_i() == cut.part_i()) {
            e = f;
            break;
        }
    Quadruple nq = normalize_quadruple(cut, q);
    if (!is_proper_quadruple(t, e, nq))
        throw ImproperQuadruple("the quadruple is not proper for the edge of the cut");

    Monomial base = m.with_factor_decremented(*idx);
    const LabelSet& ls = m.labels();
    size_t fi = static_cast<size_t>(ls.index_of(nq.i));
    size_t fj = static_cast<size_t>(ls.index_of(nq.j));
    size_t fk = static_cast<size_t>(ls.index_of(nq.k));
    size_t fl = static_cast<size_t>(ls.index_of(nq.l));
    std::vector<size_t> free;
    for (size_t b = 0; b < static_cast<size_t>(ls.size()); ++b)
        if (b != fi && b != fj && b != fk && b != fl)
            free.push_back(b);

    SignedSum sum(ls);
    Bits start = ls.empty_bits();
    start.set(fi);
    start.set(fj);
    for (size_t mask = 0; mask < (size_t{1} << free.size()); ++mask) {
        Bits side = start;
        for (size_t b = 0; b < free.size(); ++b)
            if (mask & (size_t{1} << b))
                side.set(free[b]);
        if (!side.test(0))
            side.flip();
        if (side == cut.part_i())
            continue;
        Bits other = ~side;
        bool dropped = false;
        for (const auto& f : base.factors()) {
            if (side.intersects(f.part_i) && side.intersects(f.part_j) &&
                other.intersects(f.part_i) && other.intersects(f.part_j)) {
                dropped = true;
                break;
            }
        }
        if (!dropped)
            sum.add(base.with_extra_cut(side), -1);
    }
    return sum;
}

Int oracle_value(const Monomial& m, int cap) {
    if (m.n() > cap)
        throw CapExceeded("oracle evaluation is capped at n <= " + std::to_string(cap) +
                          ", got n = " + std::to_string(m.n()));
    if (m.degree() != m.n() - 3 || m.first_quadratic_pair())
        return 0;
    std::map<Monomial, Int> terms;
    terms.emplace(m, 1);
    while (true) {
        auto it = terms.begin();
        while (it != terms.end() && it->first.is_clever())
            ++it;
        if (it == terms.end())
            break;
        Monomial term = it->first;
        Int coeff = it->second;
        terms.erase(it);
        // First factor of exponent >= 2 in rendering order; every non-clever
        // tree monomial of proper degree has one.
        size_t pick = 0;
        while (term.exponent_at(pick) < 2)
            ++pick;
        LoadedTree t = monomial_to_tree(term);
        Cut cut = term.cut_at(pick);
        int e = -1;
        for (int f = 0; f < t.edge_count(); ++f)
            if (t.cut_of(f).part_i() == cut.part_i()) {
                e = f;
                break;
            }
        Quadruple q = proper_quadruples(t, e).front();
        SignedSum step = linear_reduction_step(term, cut, q);
        for (const auto& [tm, tc] : step.terms) {
            auto [pos, inserted] = terms.emplace(tm, coeff * tc);
            if (!inserted) {
                pos->second += coeff * tc;
                if (pos->second == 0)
                    terms.erase(pos);
            }
        }
    }
    Int total = 0;
    for (const auto& [tm, tc] : terms)
        total += tc;
    return total;
}

namespace {

Int tree_oracle_recurse(const Monomial& m, bool filter_balanced,
                        std::map<Monomial, Int>& memo) {
    if (auto it = memo.find(m); it != memo.end())
        return it->second;
    Int result;
    if (m.is_clever()) {
        result = 1;
    } else {
        LoadedTree t = monomial_to_tree(m);
        size_t pick = 0;
        while (pick < m.factor_count() && m.exponent_at(pick) < 2)
            ++pick;
        if (pick == m.factor_count())
            throw Error("non-clever proper tree monomial without a repeated factor");
        int e = -1;
        for (int f = 0; f < t.edge_count(); ++f)
            if (t.cut_of(f).part_i() == m.factors()[pick].part_i) {
                e = f;
                break;
            }
        Quadruple q = proper_quadruples(t, e).front();
        result = 0;
        for (const LoadedTree& reduced : tree_reduction(t, e, q, filter_balanced))
            result -= tree_oracle_recurse(tree_to_monomial(reduced), filter_balanced, memo);
    }
    memo.emplace(m, result);
    return result;
}

} // namespace

Int tree_oracle_value(const Monomial& m, int cap, bool filter_balanced) {
    if (m.n() > cap)
        throw CapExceeded("oracle evaluation is capped at n <= " + std::to_string(cap) +
                          ", got n = " + std::to_string(m.n()));
    if (m.degree() != m.n() - 3 || m.first_quadratic_pair())
        return 0;
    std::map<Monomial, Int> memo;
    return tree_oracle_recurse(m, filter_balanced, memo);
}

namespace {

struct SplitPlan {
    int vertex;
    Bits prime_labels;
    std::set<int> prime_branches;
};

bool split_is_stable(const LoadedTree& t, const SplitPlan& p) {
    int nb = static_cast<int>(p.prime_branches.size());
    int nl = static_cast<int>(p.prime_labels.count());
    int deg_prime = nb + 1;
    int deg_rest = t.degree_of(p.vertex) - nb + 1;
    int labels_rest = static_cast<int>(t.labeling(p.vertex).count()) - nl;
    return deg_prime + nl >= 3 && deg_rest + labels_rest >= 3;
}

/// The split tree: the chosen labels and branches move to a new vertex that
/// hangs off the old one by a fresh single edge, and the multi-edge loses one
/// unit of multiplicity.  The fresh edge gets the highest edge index.
LoadedTree build_split(const LoadedTree& t, int e, const SplitPlan& p) {
    int fresh = t.vertex_count();
    std::vector<Bits> labeling;
    labeling.reserve(static_cast<size_t>(fresh) + 1);
    for (int v = 0; v < t.vertex_count(); ++v)
        labeling.push_back(t.labeling(v));
    labeling[static_cast<size_t>(p.vertex)] -= p.prime_labels;
    labeling.push_back(p.prime_labels);
    std::vector<LoadedTree::Edge> edges = t.edges();
    for (int f : p.prime_branches) {
        if (edges[static_cast<size_t>(f)].u == p.vertex)
            edges[static_cast<size_t>(f)].u = fresh;
        else
            edges[static_cast<size_t>(f)].v = fresh;
    }
    edges[static_cast<size_t>(e)].mult -= 1;
    edges.push_back({fresh, p.vertex, 1});
    return LoadedTree(t.labels(), std::move(labeling), std::move(edges));
}

} // namespace

std::optional<LoadedTree> vertex_split(const LoadedTree& t, int e, Quadruple q,
                                       const SplitChoice& choice) {
    if (t.edge(e).mult < 2)
        throw NotMultiEdge("vertex splitting works along an edge of multiplicity >= 2");
    Cut cut = t.cut_of(e);
    Quadruple nq = normalize_quadruple(cut, q);
    if (!is_proper_quadruple(t, e, nq))
        throw ImproperQuadruple("the quadruple is not proper for the edge");
    int eu = t.edge(e).u;
    int ev = t.edge(e).v;
    if (t.vertex_weight(eu) == 0 && t.vertex_weight(ev) == 0)
        return std::nullopt;
    int v = choice.vertex;
    if (v != eu && v != ev)
        throw InvalidChoice("the split vertex must be an endpoint of the edge");
    if (t.vertex_weight(v) == 0)
        throw InvalidChoice("the split vertex must have positive weight");

    int qa = (v == t.part_i_endpoint(e)) ? nq.i : nq.k;
    int qb = (v == t.part_i_endpoint(e)) ? nq.j : nq.l;
    size_t ia = static_cast<size_t>(t.labels().index_of(qa));
    size_t ib = static_cast<size_t>(t.labels().index_of(qb));

    SplitPlan plan;
    plan.vertex = v;
    plan.prime_labels = t.labels().empty_bits();
    for (int label : choice.prime_labels) {
        size_t idx = static_cast<size_t>(t.labels().index_of(label));
        if (!t.labeling(v).test(idx))
            throw InvalidChoice("label " + std::to_string(label) +
                                " is not carried by the split vertex");
        plan.prime_labels.set(idx);
    }
    // The quadruple's labels on this side must end up on the split-off
    // vertex, whether carried directly or through a branch.
    for (size_t qi : {ia, ib})
        if (t.labeling(v).test(qi) && !plan.prime_labels.test(qi))
            throw InvalidChoice("the quadruple labels on the split side must move "
                                "to the split-off vertex");
    for (int f : choice.prime_branches) {
        if (f < 0 || f >= t.edge_count())
            throw InvalidChoice("branch index out of range");
        if (f == e)
            throw InvalidChoice("the multi-edge itself cannot move to the "
                                "split-off vertex");
        if (t.edge(f).u != v && t.edge(f).v != v)
            throw InvalidChoice("branch " + std::to_string(f) +
                                " is not incident to the split vertex");
        if (!plan.prime_branches.insert(f).second)
            throw InvalidChoice("duplicate branch index");
    }
    for (int f : t.incident_edges(v)) {
        if (f == e)
            continue;
        Bits side = t.side_of(f, t.other_endpoint(f, v));
        if ((side.test(ia) || side.test(ib)) && !plan.prime_branches.count(f))
            throw InvalidChoice("branches holding the quadruple labels must move "
                                "to the split-off vertex");
    }
    if (!split_is_stable(t, plan))
        throw InvalidChoice("the split would leave an unstable vertex");
    return build_split(t, e, plan);
}

std::vector<LoadedTree> tree_reduction(const LoadedTree& t, int e, Quadruple q,
                                       bool filter_balanced) {
    if (t.edge(e).mult < 2)
        throw NotMultiEdge("tree reduction works along an edge of multiplicity >= 2");
    Cut cut = t.cut_of(e);
    Quadruple nq = normalize_quadruple(cut, q);
    if (!is_proper_quadruple(t, e, nq))
        throw ImproperQuadruple("the quadruple is not proper for the edge");

    int fresh_edge = t.edge_count();
    std::map<Monomial, LoadedTree> found;
    for (int v : {t.edge(e).u, t.edge(e).v}) {
        if (t.vertex_weight(v) == 0)
            continue;
        int qa = (v == t.part_i_endpoint(e)) ? nq.i : nq.k;
        int qb = (v == t.part_i_endpoint(e)) ? nq.j : nq.l;
        size_t ia = static_cast<size_t>(t.labels().index_of(qa));
        size_t ib = static_cast<size_t>(t.labels().index_of(qb));

        Bits forced_labels = t.labels().empty_bits();
        std::vector<size_t> free_labels;
        const Bits& h = t.labeling(v);
        for (size_t i = h.find_first(); i != Bits::npos; i = h.find_next(i)) {
            if (i == ia || i == ib)
                forced_labels.set(i);
            else
                free_labels.push_back(i);
        }
        std::set<int> forced_branches;
        std::vector<int> free_branches;
        for (int f : t.incident_edges(v)) {
            if (f == e)
                continue;
            Bits side = t.side_of(f, t.other_endpoint(f, v));
            if (side.test(ia) || side.test(ib))
                forced_branches.insert(f);
            else
                free_branches.push_back(f);
        }

        for (size_t lm = 0; lm < (size_t{1} << free_labels.size()); ++lm) {
            SplitPlan plan;
            plan.vertex = v;
            plan.prime_labels = forced_labels;
            for (size_t b = 0; b < free_labels.size(); ++b)
                if (lm & (size_t{1} << b))
                    plan.prime_labels.set(free_labels[b]);
            for (size_t bm = 0; bm < (size_t{1} << free_branches.size()); ++bm) {
                plan.prime_branches = forced_branches;
                for (size_t b = 0; b < free_branches.size(); ++b)
                    if (bm & (size_t{1} << b))
                        plan.prime_branches.insert(free_branches[b]);
                if (!split_is_stable(t, plan))
                    continue;
                LoadedTree result = build_split(t, e, plan);
                if (filter_balanced && !is_balanced_edge(result, fresh_edge))
                    continue;
                found.emplace(tree_to_monomial(result), result);
            }
        }
    }
    std::vector<LoadedTree> out;
    out.reserve(found.size());
    for (auto& [key, tree] : found)
        out.push_back(std::move(tree));
    return out;
}

namespace {

/// One side of an edge cut: the component of `keep` with e removed, with
/// `extra` fresh labels placed on `attach_to` (the old endpoint) or on a new
/// two-label vertex joined to it by an edge of multiplicity `new_mult`
/// (when new_mult > 0).
LoadedTree cut_component(const LoadedTree& t, int e, int keep,
                         const std::vector<int>& fresh, int new_mult) {
    std::vector<int> comp = t.component_of(e, keep);
    std::vector<int> vertex_map(static_cast<size_t>(t.vertex_count()), -1);
    for (size_t i = 0; i < comp.size(); ++i)
        vertex_map[static_cast<size_t>(comp[i])] = static_cast<int>(i);

    Bits side = t.side_of(e, keep);
    std::vector<int> labels = t.labels().labels_of(side);
    labels.insert(labels.end(), fresh.begin(), fresh.end());
    LabelSet ls(labels);

    auto translate = [&](const Bits& mask) {
        Bits out = ls.empty_bits();
        for (size_t i = mask.find_first(); i != Bits::npos; i = mask.find_next(i))
            out.set(static_cast<size_t>(ls.index_of(t.labels().label_at(static_cast<int>(i)))));
        return out;
    };

    std::vector<Bits> labeling;
    labeling.reserve(comp.size() + 1);
    for (int v : comp)
        labeling.push_back(translate(t.labeling(v)));
    std::vector<LoadedTree::Edge> edges;
    for (int f = 0; f < t.edge_count(); ++f) {
        if (f == e)
            continue;
        const LoadedTree::Edge& ed = t.edge(f);
        if (vertex_map[static_cast<size_t>(ed.u)] < 0)
            continue;
        edges.push_back({vertex_map[static_cast<size_t>(ed.u)],
                         vertex_map[static_cast<size_t>(ed.v)], ed.mult});
    }
    int keep_new = vertex_map[static_cast<size_t>(keep)];
    if (new_mult > 0) {
        Bits extra = ls.empty_bits();
        for (int l : fresh)
            extra.set(static_cast<size_t>(ls.index_of(l)));
        labeling.push_back(extra);
        edges.push_back({keep_new, static_cast<int>(labeling.size()) - 1, new_mult});
    } else {
        for (int l : fresh)
            labeling[static_cast<size_t>(keep_new)].set(
                static_cast<size_t>(ls.index_of(l)));
    }
    return LoadedTree(ls, std::move(labeling), std::move(edges));
}

int fringe_sum_of_component(const LoadedTree& t, int e, int keep) {
    std::vector<int> comp = t.component_of(e, keep);
    std::vector<char> in_comp(static_cast<size_t>(t.vertex_count()), 0);
    for (int v : comp)
        in_comp[static_cast<size_t>(v)] = 1;
    int s = 0;
    for (int f = 0; f < t.edge_count(); ++f)
        if (f != e && in_comp[static_cast<size_t>(t.edge(f).u)])
            s += t.edge(f).mult;
    return s;
}

} // namespace

EdgeCutResult cut_single_edge(const LoadedTree& t, int e) {
    if (t.edge(e).mult != 1)
        throw NotSingleEdge("single-edge cutting needs multiplicity exactly one, got " +
                            std::to_string(t.edge(e).mult));
    int u1 = t.part_i_endpoint(e);
    int u2 = t.other_endpoint(e, u1);
    int x = t.labels().labels().back() + 1;
    int y = x + 1;
    EdgeCutResult out;
    out.left = cut_component(t, e, u1, {x}, 0);
    out.right = cut_component(t, e, u2, {y}, 0);
    out.fresh_labels = {x, y};
    out.coefficient = 1;
    return out;
}

EdgeCutResult cut_multi_edge(const LoadedTree& t, int e) {
    int r = t.edge(e).mult;
    if (r < 2)
        throw NotMultiEdge("multi-edge cutting needs multiplicity >= 2, got " +
                           std::to_string(r));
    int u1 = t.part_i_endpoint(e);
    int u2 = t.other_endpoint(e, u1);
    int sz1 = static_cast<int>(t.side_of(e, u1).count());
    int sz2 = t.n() - sz1;
    int s1 = fringe_sum_of_component(t, e, u1);
    int s2 = fringe_sum_of_component(t, e, u2);
    int m1 = sz1 - s1 - 1;
    int m2 = sz2 - s2 - 1;
    int a = t.labels().labels().back() + 1;
    int b = a + 1;
    EdgeCutResult out;
    out.fresh_labels = {a, b};
    out.coefficient = binomial(r - 1, sz1 - s1 - 2);
    if (m1 >= 1)
        out.left = cut_component(t, e, u1, {a, b}, m1);
    if (m2 >= 1)
        out.right = cut_component(t, e, u2, {a, b}, m2);
    return out;
}

int find_star_cut(const LoadedTree& t) {
    int V = t.vertex_count();
    if (V < 3)
        throw TooSmall("star-cut search needs at least three vertices");
    for (int v = 0; v < V; ++v)
        if (t.degree_of(v) == V - 1)
            return 0;
    // Not a star: prune all leaves; a vertex of the pruned tree all of whose
    // pruned-tree neighbors but one are gone is the center of a star hanging
    // off the edge to that neighbor.
    for (int v = 0; v < V; ++v) {
        if (t.degree_of(v) < 2)
            continue;
        int link = -1;
        int inner = 0;
        for (int f : t.incident_edges(v)) {
            int w = t.other_endpoint(f, v);
            if (t.degree_of(w) >= 2) {
                ++inner;
                link = f;
            }
        }
        if (inner == 1)
            return link;
    }
    throw Error("no star-cut found; the tree structure is inconsistent");
}

bool is_balanced_edge(const LoadedTree& t, int e) {
    if (t.edge(e).mult != 1)
        throw NotSingleEdge("balance is defined for multiplicity-one edges");
    int u1 = t.edge(e).u;
    int sz1 = static_cast<int>(t.side_of(e, u1).count());
    int sz2 = t.n() - sz1;
    int s1 = fringe_sum_of_component(t, e, u1);
    int s2 = fringe_sum_of_component(t, e, t.other_endpoint(e, u1));
    return sz1 - s1 == 2 && sz2 - s2 == 2;
}

bool is_balanced(const LoadedTree& t) {
    for (int e = 0; e < t.edge_count(); ++e)
        if (t.edge(e).mult == 1 && !is_balanced_edge(t, e))
            return false;
    return true;
}

} // namespace chowdeg
