#pragma once

#include "chowdeg/bigint.hpp"
#include "chowdeg/errors.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace chowdeg {

/// Parameters (m_1, ..., m_r) of the multinomial identities, all positive.
/// The attached value map g weighs x_1 as m_1 - 1 and x_i as m_i for i > 1.
struct IdentityInstance {
    int r;
    std::vector<int> m;

    IdentityInstance(int r_, std::vector<int> m_);

    int s() const;
    /// g(x_i) for one-based i.
    int g(int i) const { return i == 1 ? m[0] - 1 : m[static_cast<size_t>(i) - 1]; }
};

/// Ordered partition (P_1, ..., P_r) of {1, ..., s} with |P_i| = m_i.
struct PartitionConfig {
    std::vector<std::vector<int>> parts;
};

bool is_valid_config(const IdentityInstance& inst, const PartitionConfig& config);

/// Subset of {x_1, ..., x_r} as a bitmask; bit i-1 stands for x_i.
using XSubset = std::uint32_t;

/// The marking walk: start from B = {x_1} and A = L_r intersect P_1, then
/// repeatedly add X_A to B and replace A by the special elements lying in
/// the parts indexed by A, until A is empty.  L_r = {2, ..., r} are the
/// special elements.  Terminates because the successive A are disjoint.
XSubset phi(const PartitionConfig& config);

/// Enumerates every ordered partition of the instance and calls f on it.
void for_each_config(const IdentityInstance& inst,
                     const std::function<void(const PartitionConfig&)>& f);

inline constexpr int kDefaultFiberCap = 10;

/// Number of configs with phi(config) = all of {x_1,...,x_r}, by exhaustive
/// enumeration; equals C(s-1; m_1 - 1, m_2, ..., m_r).  Throws CapExceeded
/// when s > cap.
Int count_fiber(const IdentityInstance& inst, int cap = kDefaultFiberCap);

/// Fiber size of every subset at once: entry b counts configs with
/// phi(config) = b.  Entries without x_1 are zero.
std::vector<Int> fiber_counts(const IdentityInstance& inst, int cap = kDefaultFiberCap);

/// Predicted fiber size of b1 (which must contain x_1): with B2 the
/// complementary subset, C(s-r+1, S(B2)-|B2|) times the bracket of B1 times
/// the bracket of B2, where S(B) sums g over B and the bracket of B is
/// S(B)! divided by the product of g(x)! over B.
Int fiber_formula(const IdentityInstance& inst, XSubset b1);

struct IdentityCheck {
    Int lhs;
    Int rhs;
    bool ok;
};

/// The three summation identities for the multinomial C(s; m_1, ..., m_r).
/// All sum the bracket products over splittings {B1, B2} of {x_1,...,x_r}
/// with x_1 in B1; they differ in the binomial prefactor and the extra
/// membership constraints:
///   1: no constraint,        C(s-r+1, S(B2)-|B2|)
///   2: x_2 in B2 (r >= 2),   C(s-r+2, S(B2)-|B2|+1)
///   3: x_2,x_3 in B2 (r >= 3), C(s-r+3, S(B2)-|B2|+2)
/// Throws VariantPreconditionViolated when r is below the variant's bound.
IdentityCheck check_identity(int variant, const IdentityInstance& inst);

/// Pascal-style recursion for multinomials: C(s; m) equals the sum over i of
/// C(s-1; m with m_i lowered), vanishing terms skipped.  Needs at least two
/// parts summing to s >= 1; throws VariantPreconditionViolated otherwise.
bool pascal_multinomial(int s, const std::vector<int>& m);

/// A config whose phi equals b (which must contain x_1): the chain
/// construction with the non-special elements distributed to meet the part
/// sizes.  Padding never changes phi, so the result certifies surjectivity.
PartitionConfig surjectivity_preimage(const IdentityInstance& inst, XSubset b);

} // namespace chowdeg
