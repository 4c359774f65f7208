#include <doctest.h>

#include <chowdeg/bigint.hpp>
#include <chowdeg/identities.hpp>

#include <vector>

using namespace chowdeg;

namespace {

// All instances with r parts of sizes 1..mmax.
std::vector<IdentityInstance> sweep(int rmax, int mmax) {
    std::vector<IdentityInstance> out;
    for (int r = 1; r <= rmax; ++r) {
        std::vector<int> m(static_cast<size_t>(r), 1);
        while (true) {
            out.emplace_back(r, m);
            int i = r - 1;
            while (i >= 0 && m[static_cast<size_t>(i)] == mmax)
                m[static_cast<size_t>(i--)] = 1;
            if (i < 0)
                break;
            ++m[static_cast<size_t>(i)];
        }
    }
    return out;
}

PartitionConfig config_of(std::vector<std::vector<int>> parts) {
    PartitionConfig c;
    c.parts = std::move(parts);
    return c;
}

} // namespace

TEST_CASE("integer helpers") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(4, 6) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(-2, 1) == 0);
    CHECK(binomial(60, 30) == Int("118264581564861424"));

    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Int("2432902008176640000"));

    CHECK(multinomial(5, {2, 2, 1}) == 30);
    CHECK(multinomial(5, {5}) == 1);
    CHECK(multinomial(0, {}) == 1);
    CHECK(multinomial(4, {1, 2}) == 0);
    CHECK(multinomial(4, {5, -1}) == 0);
}

TEST_CASE("identity instances validate their shape") {
    IdentityInstance inst(3, {2, 2, 1});
    CHECK(inst.s() == 5);
    CHECK(inst.g(1) == 1);
    CHECK(inst.g(2) == 2);
    CHECK(inst.g(3) == 1);

    CHECK_THROWS_AS(IdentityInstance(0, {}), VariantPreconditionViolated);
    CHECK_THROWS_AS(IdentityInstance(2, {1}), VariantPreconditionViolated);
    CHECK_THROWS_AS(IdentityInstance(2, {1, 0}), VariantPreconditionViolated);
}

TEST_CASE("config validation") {
    IdentityInstance inst(3, {2, 2, 1});
    CHECK(is_valid_config(inst, config_of({{1, 3}, {4, 5}, {2}})));
    CHECK_FALSE(is_valid_config(inst, config_of({{1, 3}, {4}, {2, 5}})));
    CHECK_FALSE(is_valid_config(inst, config_of({{1, 3}, {4, 5}, {4}})));
    CHECK_FALSE(is_valid_config(inst, config_of({{1, 3}, {4, 5}})));
    CHECK_FALSE(is_valid_config(inst, config_of({{1, 3}, {4, 6}, {2}})));
}

TEST_CASE("marking walk on fixed configs") {
    IdentityInstance inst(3, {2, 2, 1});
    (void)inst;
    // 3 in the first part marks x3, whose part holds 2, marking x2.
    CHECK(phi(config_of({{1, 3}, {4, 5}, {2}})) == 0b111u);
    // 2 marks x2, whose part holds 3, marking x3.
    CHECK(phi(config_of({{1, 2}, {3, 4}, {5}})) == 0b111u);
    // No special element in the first part: the walk stops immediately.
    CHECK(phi(config_of({{1, 4}, {2, 3}, {5}})) == 0b001u);
    CHECK(phi(config_of({{1, 4}, {3, 5}, {2}})) == 0b001u);
    // 2 marks x2 but P2 holds no special element.
    CHECK(phi(config_of({{2, 4}, {1, 5}, {3}})) == 0b011u);

    // Single part: x1 is always marked.
    CHECK(phi(config_of({{1}})) == 0b1u);
    CHECK(phi(config_of({{1, 2, 3}})) == 0b1u);
}

TEST_CASE("config enumeration covers every ordered partition") {
    for (const auto& inst : sweep(3, 3)) {
        if (inst.s() > 7)
            continue;
        Int count = 0;
        for_each_config(inst, [&](const PartitionConfig& c) {
            CHECK(is_valid_config(inst, c));
            ++count;
        });
        std::vector<long> parts(inst.m.begin(), inst.m.end());
        CHECK(count == multinomial(inst.s(), parts));
    }
}

TEST_CASE("full fiber sizes") {
    CHECK(count_fiber(IdentityInstance(1, {1})) == 1);
    CHECK(count_fiber(IdentityInstance(2, {1, 1})) == 1);
    CHECK(count_fiber(IdentityInstance(3, {1, 1, 1})) == 2);
    CHECK(count_fiber(IdentityInstance(2, {2, 2})) == 3);

    // The closed form C(s-1; m1-1, m2, ..., mr).
    for (const auto& inst : sweep(3, 3)) {
        if (inst.s() > 8)
            continue;
        std::vector<long> lowered(inst.m.begin(), inst.m.end());
        lowered[0] -= 1;
        CHECK(count_fiber(inst) == multinomial(inst.s() - 1, lowered));
    }

    CHECK_THROWS_AS(count_fiber(IdentityInstance(3, {4, 4, 4})), CapExceeded);
    CHECK_THROWS_AS(fiber_counts(IdentityInstance(2, {9, 9})), CapExceeded);
}

TEST_CASE("fiber counts split the enumeration") {
    for (const auto& inst : sweep(3, 3)) {
        if (inst.s() > 7)
            continue;
        auto counts = fiber_counts(inst);
        XSubset full = static_cast<XSubset>((1u << inst.r) - 1);
        CHECK(counts.size() == static_cast<size_t>(full) + 1);
        Int total = 0;
        for (XSubset b = 0; b <= full; ++b) {
            if (!(b & 1u))
                CHECK(counts[b] == 0);
            total += counts[b];
        }
        std::vector<long> parts(inst.m.begin(), inst.m.end());
        CHECK(total == multinomial(inst.s(), parts));
        CHECK(counts[full] == count_fiber(inst));
    }
}

TEST_CASE("fiber formula predicts every fiber") {
    for (const auto& inst : sweep(4, 3)) {
        if (inst.s() > 7)
            continue;
        auto counts = fiber_counts(inst);
        XSubset full = static_cast<XSubset>((1u << inst.r) - 1);
        for (XSubset b = 1; b <= full; b += 2)
            CHECK(fiber_formula(inst, b) == counts[b]);
    }

    CHECK_THROWS_AS(fiber_formula(IdentityInstance(2, {1, 1}), 0b10u),
                    VariantPreconditionViolated);
}

TEST_CASE("summation identities") {
    IdentityCheck one = check_identity(1, IdentityInstance(3, {2, 2, 1}));
    CHECK(one.lhs == 30);
    CHECK(one.rhs == 30);
    CHECK(one.ok);

    IdentityCheck trivial = check_identity(1, IdentityInstance(1, {3}));
    CHECK(trivial.lhs == 1);
    CHECK(trivial.ok);

    for (const auto& inst : sweep(4, 3))
        for (int variant = 1; variant <= 3; ++variant) {
            if (inst.r < variant)
                continue;
            CHECK(check_identity(variant, inst).ok);
        }

    CHECK_THROWS_AS(check_identity(2, IdentityInstance(1, {2})),
                    VariantPreconditionViolated);
    CHECK_THROWS_AS(check_identity(3, IdentityInstance(2, {2, 2})),
                    VariantPreconditionViolated);
    CHECK_THROWS_AS(check_identity(0, IdentityInstance(1, {2})),
                    VariantPreconditionViolated);
    CHECK_THROWS_AS(check_identity(4, IdentityInstance(1, {2})),
                    VariantPreconditionViolated);
}

TEST_CASE("pascal recursion for multinomials") {
    CHECK(pascal_multinomial(2, {1, 1}));
    CHECK(pascal_multinomial(5, {2, 2, 1}));
    CHECK(pascal_multinomial(9, {3, 3, 3}));
    for (const auto& inst : sweep(4, 4)) {
        if (inst.r < 2)
            continue;
        CHECK(pascal_multinomial(inst.s(), inst.m));
    }

    CHECK_THROWS_AS(pascal_multinomial(3, {3}), VariantPreconditionViolated);
    CHECK_THROWS_AS(pascal_multinomial(0, {}), VariantPreconditionViolated);
    CHECK_THROWS_AS(pascal_multinomial(4, {1, 2}), VariantPreconditionViolated);
}

TEST_CASE("explicit preimages certify surjectivity") {
    for (const auto& inst : sweep(4, 3)) {
        if (inst.s() > 8)
            continue;
        XSubset full = static_cast<XSubset>((1u << inst.r) - 1);
        for (XSubset b = 1; b <= full; b += 2) {
            PartitionConfig c = surjectivity_preimage(inst, b);
            CHECK(is_valid_config(inst, c));
            CHECK(phi(c) == b);
        }
    }

    CHECK_THROWS_AS(surjectivity_preimage(IdentityInstance(2, {1, 1}), 0b10u),
                    VariantPreconditionViolated);
}
