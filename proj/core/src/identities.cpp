#include "chowdeg/identities.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace chowdeg {

IdentityInstance::IdentityInstance(int r_, std::vector<int> m_) : r(r_), m(std::move(m_)) {
    if (r < 1)
        throw VariantPreconditionViolated("the number of parts must be at least one");
    if (static_cast<int>(m.size()) != r)
        throw VariantPreconditionViolated("expected " + std::to_string(r) +
                                          " part sizes, got " + std::to_string(m.size()));
    for (int mi : m)
        if (mi < 1)
            throw VariantPreconditionViolated("part sizes must be positive");
}

int IdentityInstance::s() const {
    return std::accumulate(m.begin(), m.end(), 0);
}

bool is_valid_config(const IdentityInstance& inst, const PartitionConfig& config) {
    if (static_cast<int>(config.parts.size()) != inst.r)
        return false;
    std::set<int> seen;
    for (size_t i = 0; i < config.parts.size(); ++i) {
        if (static_cast<int>(config.parts[i].size()) != inst.m[i])
            return false;
        for (int v : config.parts[i]) {
            if (v < 1 || v > inst.s() || !seen.insert(v).second)
                return false;
        }
    }
    return static_cast<int>(seen.size()) == inst.s();
}

XSubset phi(const PartitionConfig& config) {
    int r = static_cast<int>(config.parts.size());
    auto special_in = [&](const std::vector<int>& part) {
        std::vector<int> out;
        for (int v : part)
            if (v >= 2 && v <= r)
                out.push_back(v);
        return out;
    };
    XSubset b = 1u;
    std::vector<int> a = special_in(config.parts[0]);
    for (int rounds = 0; !a.empty(); ++rounds) {
        if (rounds > r)
            throw Error("marking walk failed to terminate; config is invalid");
        std::vector<int> next;
        for (int i : a) {
            b |= XSubset{1} << (i - 1);
            auto found = special_in(config.parts[static_cast<size_t>(i) - 1]);
            next.insert(next.end(), found.begin(), found.end());
        }
        a = std::move(next);
    }
    return b;
}

void for_each_config(const IdentityInstance& inst,
                     const std::function<void(const PartitionConfig&)>& f) {
    int s = inst.s();
    std::vector<int> pool(static_cast<size_t>(s));
    std::iota(pool.begin(), pool.end(), 1);
    PartitionConfig config;
    config.parts.resize(static_cast<size_t>(inst.r));

    // Depth-first choice of each part as a combination of what is left.
    std::function<void(size_t, std::vector<int>&)> choose_part =
        [&](size_t part, std::vector<int>& remaining) {
            if (part == config.parts.size()) {
                f(config);
                return;
            }
            size_t need = static_cast<size_t>(inst.m[part]);
            std::vector<size_t> pick(need);
            std::function<void(size_t, size_t)> choose =
                [&](size_t slot, size_t from) {
                    if (slot == need) {
                        std::vector<int> rest;
                        rest.reserve(remaining.size() - need);
                        config.parts[part].clear();
                        size_t next_picked = 0;
                        for (size_t i = 0; i < remaining.size(); ++i) {
                            if (next_picked < need && pick[next_picked] == i) {
                                config.parts[part].push_back(remaining[i]);
                                ++next_picked;
                            } else {
                                rest.push_back(remaining[i]);
                            }
                        }
                        choose_part(part + 1, rest);
                        return;
                    }
                    for (size_t i = from; i + (need - slot) <= remaining.size(); ++i) {
                        pick[slot] = i;
                        choose(slot + 1, i + 1);
                    }
                };
            choose(0, 0);
        };
    choose_part(0, pool);
}

namespace {

int subset_weight(const IdentityInstance& inst, XSubset b) {
    int total = 0;
    for (int i = 1; i <= inst.r; ++i)
        if (b & (XSubset{1} << (i - 1)))
            total += inst.g(i);
    return total;
}

Int subset_bracket(const IdentityInstance& inst, XSubset b) {
    std::vector<long> gs;
    for (int i = 1; i <= inst.r; ++i)
        if (b & (XSubset{1} << (i - 1)))
            gs.push_back(inst.g(i));
    return multinomial(subset_weight(inst, b), gs);
}

} // namespace

std::vector<Int> fiber_counts(const IdentityInstance& inst, int cap) {
    if (inst.s() > cap)
        throw CapExceeded("fiber enumeration is capped at s <= " + std::to_string(cap) +
                          ", got s = " + std::to_string(inst.s()));
    std::vector<Int> counts(size_t{1} << inst.r, 0);
    for_each_config(inst, [&](const PartitionConfig& config) {
        counts[phi(config)] += 1;
    });
    return counts;
}

Int count_fiber(const IdentityInstance& inst, int cap) {
    if (inst.s() > cap)
        throw CapExceeded("fiber enumeration is capped at s <= " + std::to_string(cap) +
                          ", got s = " + std::to_string(inst.s()));
    XSubset full = static_cast<XSubset>((size_t{1} << inst.r) - 1);
    Int count = 0;
    for_each_config(inst, [&](const PartitionConfig& config) {
        if (phi(config) == full)
            count += 1;
    });
    return count;
}

Int fiber_formula(const IdentityInstance& inst, XSubset b1) {
    if (!(b1 & 1u))
        throw VariantPreconditionViolated("the fiber formula needs x1 in B1");
    XSubset full = static_cast<XSubset>((size_t{1} << inst.r) - 1);
    XSubset b2 = full & ~b1;
    int s2 = subset_weight(inst, b2);
    int card2 = static_cast<int>(std::popcount(b2));
    return binomial(inst.s() - inst.r + 1, s2 - card2) * subset_bracket(inst, b1) *
           subset_bracket(inst, b2);
}

IdentityCheck check_identity(int variant, const IdentityInstance& inst) {
    if (variant < 1 || variant > 3)
        throw VariantPreconditionViolated("identity variant must be 1, 2 or 3");
    if (inst.r < variant)
        throw VariantPreconditionViolated("variant " + std::to_string(variant) +
                                          " needs r >= " + std::to_string(variant));
    int s = inst.s();
    std::vector<long> parts(inst.m.begin(), inst.m.end());
    IdentityCheck out;
    out.lhs = multinomial(s, parts);
    out.rhs = 0;
    XSubset full = static_cast<XSubset>((size_t{1} << inst.r) - 1);
    for (XSubset b1 = 0; b1 <= full; ++b1) {
        if (!(b1 & 1u))
            continue;
        if (variant >= 2 && (b1 & 2u))
            continue;
        if (variant >= 3 && (b1 & 4u))
            continue;
        XSubset b2 = full & ~b1;
        int s2 = subset_weight(inst, b2);
        int card2 = static_cast<int>(std::popcount(b2));
        Int prefactor;
        switch (variant) {
        case 1:
            prefactor = binomial(s - inst.r + 1, s2 - card2);
            break;
        case 2:
            prefactor = binomial(s - inst.r + 2, s2 - card2 + 1);
            break;
        default:
            prefactor = binomial(s - inst.r + 3, s2 - card2 + 2);
            break;
        }
        out.rhs += prefactor * subset_bracket(inst, b1) * subset_bracket(inst, b2);
    }
    out.ok = out.lhs == out.rhs;
    return out;
}

bool pascal_multinomial(int s, const std::vector<int>& m) {
    if (m.size() < 2)
        throw VariantPreconditionViolated("the recursion needs at least two parts");
    if (s < 1)
        throw VariantPreconditionViolated("the total must be at least one");
    long sum = 0;
    for (int mi : m)
        sum += mi;
    if (sum != s)
        throw VariantPreconditionViolated("part sizes must sum to the total");
    std::vector<long> parts(m.begin(), m.end());
    Int lhs = multinomial(s, parts);
    Int rhs = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0)
            continue;
        std::vector<long> lowered = parts;
        lowered[i] -= 1;
        rhs += multinomial(s - 1, lowered);
    }
    return lhs == rhs;
}

PartitionConfig surjectivity_preimage(const IdentityInstance& inst, XSubset b) {
    if (!(b & 1u))
        throw VariantPreconditionViolated("the preimage construction needs x1 in B");
    XSubset full = static_cast<XSubset>((size_t{1} << inst.r) - 1);
    if (b & ~full)
        throw VariantPreconditionViolated("subset mentions elements beyond x_r");
    std::vector<int> q;
    for (int i = 2; i <= inst.r; ++i)
        if (b & (XSubset{1} << (i - 1)))
            q.push_back(i);

    // Seed a chain P1 -> P_{q1} -> ... -> P_{qt} through the marked special
    // elements; every unmarked special element sits in its own part so the
    // walk never reaches it.  Non-special elements then pad all parts to
    // their required sizes without affecting the walk.
    PartitionConfig config;
    config.parts.resize(static_cast<size_t>(inst.r));
    for (size_t j = 0; j < q.size(); ++j) {
        size_t owner = (j == 0) ? 0 : static_cast<size_t>(q[j - 1]) - 1;
        config.parts[owner].push_back(q[j]);
    }
    for (int i = 2; i <= inst.r; ++i)
        if (!(b & (XSubset{1} << (i - 1))))
            config.parts[static_cast<size_t>(i) - 1].push_back(i);

    std::vector<int> pool;
    pool.push_back(1);
    for (int v = inst.r + 1; v <= inst.s(); ++v)
        pool.push_back(v);
    size_t next = 0;
    for (size_t i = 0; i < config.parts.size(); ++i) {
        while (static_cast<int>(config.parts[i].size()) < inst.m[i]) {
            if (next >= pool.size())
                throw Error("padding pool exhausted; instance is inconsistent");
            config.parts[i].push_back(pool[next++]);
        }
        std::sort(config.parts[i].begin(), config.parts[i].end());
    }
    if (next != pool.size())
        throw Error("padding pool not fully used; instance is inconsistent");
    return config;
}

} // namespace chowdeg
