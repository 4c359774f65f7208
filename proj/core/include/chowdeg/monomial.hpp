#pragma once

#include "chowdeg/cut.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chowdeg {

/// Monomial in the boundary divisor classes of a fixed ground set, stored as
/// a sorted list of distinct cuts with positive exponents.
///
/// The empty monomial (the constant 1) is allowed; its integral is 1 exactly
/// when the ground set has three labels.
class Monomial {
public:
    struct Factor {
        Bits part_i;
        Bits part_j;
        int exponent;
    };

    /// The empty monomial over the given ground set.
    explicit Monomial(LabelSet labels);

    /// Builds a monomial from (side mask, exponent) pairs.  Sides are
    /// canonicalized, equal cuts are merged by adding exponents, and factors
    /// are sorted into rendering order.
    Monomial(LabelSet labels, const std::vector<std::pair<Bits, int>>& factors);

    /// Parses the textual form, e.g. "d{1,2|3,4,5}^2 * d{1,2,3|4,5}".
    /// An optional header "n=5;" declares the ground set {1,...,5}; without
    /// it the ground set is the union of the labels of the factors.  The
    /// empty monomial "1" is only accepted with a header.
    static Monomial parse(const std::string& text);

    const LabelSet& labels() const { return labels_; }
    int n() const { return labels_.size(); }

    /// Total degree, i.e. the sum of all exponents.
    int degree() const;

    const std::vector<Factor>& factors() const { return factors_; }
    size_t factor_count() const { return factors_.size(); }
    Cut cut_at(size_t idx) const { return Cut(labels_, factors_[idx].part_i); }
    int exponent_at(size_t idx) const { return factors_[idx].exponent; }

    /// Index of the factor with the given canonical part-I mask, if present.
    std::optional<size_t> find_factor(const Bits& part_i) const;
    std::optional<size_t> find_factor(const Cut& cut) const;

    /// Canonical textual form; parse(render()) reproduces the monomial.
    std::string render() const;

    /// First pair of factor indices killed by the quadratic relation.
    std::optional<std::pair<size_t, size_t>> first_quadratic_pair() const;
    bool is_tree_monomial() const { return !first_quadratic_pair().has_value(); }

    /// Tree monomial of degree n-3 with all exponents equal to one.
    bool is_clever() const;

    /// Copy with the exponent of factor idx lowered by one; the factor is
    /// dropped when its exponent reaches zero.
    Monomial with_factor_decremented(size_t idx) const;

    /// Copy with the cut of the given canonical side mask multiplied in.
    Monomial with_extra_cut(const Bits& side, int delta = 1) const;

    bool operator==(const Monomial& other) const;
    bool operator!=(const Monomial& other) const { return !(*this == other); }
    /// Total order usable as a map key: ground set first, then factor lists.
    bool operator<(const Monomial& other) const;

private:
    LabelSet labels_;
    std::vector<Factor> factors_;

    void normalize_and_validate(std::vector<std::pair<Bits, int>> raw);
};

} // namespace chowdeg
