// Acceptance suite for the full pipeline: one line per criterion, nonzero
// exit when anything fails.  Everything here is exact integer arithmetic
// except the two timing checks, which use generous bounds.

#include <chowdeg/eval.hpp>
#include <chowdeg/generators.hpp>
#include <chowdeg/identities.hpp>
#include <chowdeg/reduction.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace chowdeg;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] %2d. %s: %s\n", ok ? "PASS" : "FAIL", idx, name,
                detail.c_str());
    if (!ok)
        ++failures;
}

double ms_between(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

// All cuts over {1,...,n} in some fixed order.
std::vector<Bits> all_cut_sides(const LabelSet& ls) {
    int n = ls.size();
    std::vector<Bits> out;
    for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
        Bits side = ls.empty_bits();
        side.set(0);
        for (int i = 1; i < n; ++i)
            if (mask & (1ul << (i - 1)))
                side.set(static_cast<size_t>(i));
        size_t c = side.count();
        if (c >= 2 && static_cast<int>(c) <= n - 2)
            out.push_back(side);
    }
    return out;
}

// Walks every proper tree monomial over {1,...,n}: multisets of pairwise
// compatible cuts with total exponent n-3.
template <typename F>
void for_each_proper_tree_monomial(int n, F&& f) {
    LabelSet ls = LabelSet::first_n(n);
    std::vector<Bits> sides = all_cut_sides(ls);
    size_t m = sides.size();
    std::vector<std::vector<char>> comp(m, std::vector<char>(m));
    for (size_t a = 0; a < m; ++a) {
        Cut ca(ls, sides[a]);
        for (size_t b = 0; b < m; ++b)
            comp[a][b] = compatible(ca, Cut(ls, sides[b])) ? 1 : 0;
    }

    std::vector<size_t> chosen;
    auto rec = [&](auto&& self, size_t start, int remaining) -> void {
        if (remaining == 0) {
            std::vector<std::pair<Bits, int>> raw;
            for (size_t idx : chosen)
                raw.emplace_back(sides[idx], 1);
            f(Monomial(ls, raw));
            return;
        }
        for (size_t idx = start; idx < m; ++idx) {
            bool ok = true;
            for (size_t prev : chosen)
                if (prev != idx && !comp[prev][idx]) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            chosen.push_back(idx);
            self(self, idx, remaining - 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0, n - 3);
}

LoadedTree random_tree_with_multi_edge(int n, std::mt19937& rng) {
    for (;;) {
        LoadedTree t = random_proper_tree(n, rng);
        for (int e = 0; e < t.edge_count(); ++e)
            if (t.edge(e).mult >= 2)
                return t;
    }
}

void criterion_quadratic_fixture() {
    std::vector<double> times;
    EvalReport r;
    for (int i = 0; i < 101; ++i) {
        auto t0 = Clock::now();
        r = evaluate_monomial_text("d{1,2|3,4,5} * d{1,4|2,3,5}");
        times.push_back(ms_between(t0, Clock::now()));
    }
    std::sort(times.begin(), times.end());
    double med = times[times.size() / 2];
    bool ok = r.value == 0 &&
              r.classification == Classification::ZeroByQuadratic && med < 1.0;
    std::ostringstream d;
    d << "value " << r.value << ", " << classification_name(r.classification)
      << ", median " << med << " ms";
    report(1, "quadratic-relation fixture", ok, d.str());
}

void criterion_clever_invariance() {
    std::mt19937 rng(20260822);
    auto t0 = Clock::now();
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
        int n = 3 + static_cast<int>(rng() % 28);
        Monomial m = tree_to_monomial(random_clever_tree(n, rng));
        EvalReport r = evaluate_monomial_text(m.render());
        if (r.value != 1 || r.classification != Classification::Clever)
            ++bad;
    }
    double el = ms_between(t0, Clock::now());
    bool ok = bad == 0 && el < 5000.0;
    std::ostringstream d;
    d << "1000 clever trees, " << bad << " deviations, " << el << " ms";
    report(2, "clever invariance", ok, d.str());
}

void criterion_worked_reductions() {
    Monomial a = Monomial::parse("d{1,2|3,4,5,6}^2 * d{1,2,3,4|5,6}");
    Monomial b = Monomial::parse("d{1,2,3|4,5,6,7}^3 * d{1,2,3,4,5|6,7}");
    Int fa = integral_value(a).value;
    Int fb = integral_value(b).value;
    Int oa = oracle_value(a);
    Int ob = oracle_value(b);
    bool ok = fa == -1 && oa == -1 && fb == 2 && ob == 2;
    std::ostringstream d;
    d << "forest " << fa << "/" << fb << ", oracle " << oa << "/" << ob
      << " (want -1/+2)";
    report(3, "worked reductions", ok, d.str());
}

void criterion_forest_fixture() {
    WeightedTree w;
    w.vertex_weights = {1, 4, 1, 0, 1};
    w.edges = {{0, 1, 4}, {1, 2, 2}, {1, 3, 0}, {3, 4, 1}};
    Int mag = forest_value(redundancy_forest(w));
    int sign = w.edge_weight_sum() % 2 == 0 ? 1 : -1;
    bool ok = mag == 32 && sign == -1;
    std::ostringstream d;
    d << "magnitude " << mag << " (want 32), sign " << (sign < 0 ? "-" : "+")
      << "1 (want -1)";
    report(4, "redundancy-forest fixture", ok, d.str());
}

void criterion_sun_like() {
    auto t0 = Clock::now();
    int checked = 0, bad = 0;
    for (int r = 0; r <= 5; ++r) {
        std::vector<int> w(static_cast<size_t>(r), 1);
        for (;;) {
            int k = std::accumulate(w.begin(), w.end(), 0);
            Int direct = integral_value(tree_to_monomial(sun_like_tree(w))).value;
            if (direct != sun_like_value(k, w))
                ++bad;
            ++checked;
            int i = r - 1;
            while (i >= 0 && w[static_cast<size_t>(i)] == 4)
                w[static_cast<size_t>(i--)] = 1;
            if (i < 0)
                break;
            ++w[static_cast<size_t>(i)];
        }
    }
    double el = ms_between(t0, Clock::now());
    bool ok = bad == 0 && el < 10000.0;
    std::ostringstream d;
    d << checked << " sun-like trees, " << bad << " deviations, " << el << " ms";
    report(5, "sun-like closed form", ok, d.str());
}

void criterion_oracle_equivalence() {
    auto t0 = Clock::now();
    long checked = 0, bad = 0;
    for (int n = 5; n <= 7; ++n)
        for_each_proper_tree_monomial(n, [&](const Monomial& m) {
            ++checked;
            if (integral_value(m).value != oracle_value(m))
                ++bad;
        });
    long exhaustive = checked;

    std::mt19937 rng(8);
    for (int i = 0; i < 500; ++i) {
        Monomial m = tree_to_monomial(random_proper_tree(8, rng));
        ++checked;
        if (integral_value(m).value != oracle_value(m))
            ++bad;
    }
    double el = ms_between(t0, Clock::now());
    bool ok = bad == 0 && el < 300000.0;
    std::ostringstream d;
    d << exhaustive << " exhaustive (n=5,6,7) + 500 random n=8, " << bad
      << " disagreements, " << el << " ms";
    report(6, "oracle equivalence", ok, d.str());
}

void criterion_edge_cutting() {
    std::mt19937 rng(7);
    long edges_checked = 0, bad = 0;
    for (int i = 0; i < 500; ++i) {
        int n = 5 + static_cast<int>(rng() % 8);
        LoadedTree t = random_proper_tree(n, rng);
        Int whole = tree_value(t).value;
        for (int e = 0; e < t.edge_count(); ++e) {
            ++edges_checked;
            EdgeCutResult r = t.edge(e).mult == 1 ? cut_single_edge(t, e)
                                                  : cut_multi_edge(t, e);
            if (!r.left || !r.right) {
                if (r.coefficient != 0 || whole != 0)
                    ++bad;
                continue;
            }
            Int product = r.coefficient * tree_value(*r.left).value *
                          tree_value(*r.right).value;
            if (product != whole)
                ++bad;
        }
    }
    std::ostringstream d;
    d << "500 trees, " << edges_checked << " edge cuts, " << bad << " violations";
    report(7, "edge-cutting laws", bad == 0, d.str());
}

void criterion_reduction_equivalence() {
    std::mt19937 rng(6);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
        int n = 6 + static_cast<int>(rng() % 3);
        LoadedTree t = random_tree_with_multi_edge(n, rng);
        std::vector<int> multis;
        for (int e = 0; e < t.edge_count(); ++e)
            if (t.edge(e).mult >= 2)
                multis.push_back(e);
        int e = multis[rng() % multis.size()];
        auto qs = proper_quadruples(t, e);
        Quadruple q = qs[rng() % qs.size()];

        std::set<Monomial> trees;
        for (const auto& out : tree_reduction(t, e, q))
            trees.insert(tree_to_monomial(out));
        std::set<Monomial> algebra;
        for (const auto& [m, c] : linear_reduction_step(tree_to_monomial(t),
                                                        t.cut_of(e), q)
                                      .terms)
            algebra.insert(m);
        if (trees != algebra)
            ++bad;
    }
    std::ostringstream d;
    d << "200 (tree, edge, quadruple) triples, " << bad << " support mismatches";
    report(8, "tree/algebra reduction equivalence", bad == 0, d.str());
}

void criterion_identities() {
    auto t0 = Clock::now();
    int identity_bad = 0, identity_checked = 0;
    for (int r = 1; r <= 5; ++r) {
        std::vector<int> m(static_cast<size_t>(r), 1);
        for (;;) {
            IdentityInstance inst(r, m);
            for (int variant = 1; variant <= 3; ++variant) {
                if (r < variant)
                    continue;
                ++identity_checked;
                if (!check_identity(variant, inst).ok)
                    ++identity_bad;
            }
            int i = r - 1;
            while (i >= 0 && m[static_cast<size_t>(i)] == 4)
                m[static_cast<size_t>(i--)] = 1;
            if (i < 0)
                break;
            ++m[static_cast<size_t>(i)];
        }
    }

    // Fiber law and the closed fiber formula, exhaustively for s <= 9.
    long fiber_bad = 0, fiber_checked = 0;
    for (int s = 1; s <= 9; ++s) {
        // All compositions of s.
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int left) -> void {
            if (left == 0) {
                comps.push_back(cur);
                return;
            }
            for (int first = 1; first <= left; ++first) {
                cur.push_back(first);
                self(self, left - first);
                cur.pop_back();
            }
        };
        rec(rec, s);
        for (const auto& m : comps) {
            IdentityInstance inst(static_cast<int>(m.size()), m);
            auto counts = fiber_counts(inst);
            XSubset full = static_cast<XSubset>((1u << inst.r) - 1);
            for (XSubset b = 1; b <= full; b += 2) {
                ++fiber_checked;
                if (counts[b] != fiber_formula(inst, b))
                    ++fiber_bad;
            }
            std::vector<long> lowered(m.begin(), m.end());
            lowered[0] -= 1;
            if (counts[full] != multinomial(s - 1, lowered))
                ++fiber_bad;
        }
    }
    double el = ms_between(t0, Clock::now());
    bool ok = identity_bad == 0 && fiber_bad == 0 && el < 120000.0;
    std::ostringstream d;
    d << identity_checked << " identity instances, " << fiber_checked
      << " fibers, " << identity_bad + fiber_bad << " failures, " << el << " ms";
    report(9, "identity suite", ok, d.str());
}

void criterion_order_independence() {
    std::mt19937 rng(5);
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
        int n = 5 + static_cast<int>(rng() % 10);
        RedundancyForest f = redundancy_forest(random_proper_tree(n, rng));
        Int base = forest_value(f);
        std::vector<int> prio(f.nodes.size());
        std::iota(prio.begin(), prio.end(), 0);
        for (int shuffle = 0; shuffle < 3; ++shuffle) {
            std::shuffle(prio.begin(), prio.end(), rng);
            if (forest_value(f, prio) != base)
                ++bad;
        }
    }
    std::ostringstream d;
    d << "500 forests x 3 leaf orders, " << bad << " deviations";
    report(10, "order independence", bad == 0, d.str());
}

double forest_stage_per_op_ms(int n) {
    LoadedTree t = clever_caterpillar(n);
    int iters = 4;
    for (;;) {
        auto t0 = Clock::now();
        Int sink = 0;
        for (int i = 0; i < iters; ++i)
            sink += forest_value(redundancy_forest(t));
        double el = ms_between(t0, Clock::now());
        if (sink < 0)
            std::printf("unreachable\n");
        if (el >= 30.0 || iters >= (1 << 20))
            return el / iters;
        iters *= 4;
    }
}

void criterion_performance() {
    std::string text = tree_to_monomial(clever_caterpillar(1000)).render();
    auto t0 = Clock::now();
    EvalReport r = evaluate_monomial_text(text, true);
    double end_to_end = ms_between(t0, Clock::now());

    double t100 = forest_stage_per_op_ms(100);
    double t200 = forest_stage_per_op_ms(200);
    double t400 = forest_stage_per_op_ms(400);
    // Linear growth predicts 4x from n=100 to n=400; allow a factor of two.
    bool linearish = t400 <= 8.0 * t100;
    bool ok = r.value == 1 && end_to_end < 1000.0 && linearish;
    std::ostringstream d;
    d << "n=1000 end-to-end " << end_to_end << " ms; forest stage per run "
      << t100 << "/" << t200 << "/" << t400 << " ms at n=100/200/400";
    report(11, "performance sanity", ok, d.str());
}

} // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion_quadratic_fixture();
    criterion_clever_invariance();
    criterion_worked_reductions();
    criterion_forest_fixture();
    criterion_sun_like();
    criterion_oracle_equivalence();
    criterion_edge_cutting();
    criterion_reduction_equivalence();
    criterion_identities();
    criterion_order_independence();
    criterion_performance();
    if (failures == 0)
        std::printf("all 11 criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}
