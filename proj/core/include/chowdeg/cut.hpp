#pragma once

#include "chowdeg/label_set.hpp"

#include <string>
#include <utility>

namespace chowdeg {

/// Bipartition {I, J} of a ground set with both parts of size at least two.
///
/// The canonical side I is the part containing the smallest label, so that
/// the symmetric divisor classes d{I|J} and d{J|I} compare equal.
class Cut {
public:
    /// Builds the cut with the given side as one of its parts, swapping the
    /// parts if needed so that part I contains the smallest label.
    Cut(LabelSet labels, Bits side);

    const LabelSet& labels() const { return labels_; }
    const Bits& part_i() const { return part_i_; }
    const Bits& part_j() const { return part_j_; }

    std::vector<int> part_i_labels() const { return labels_.labels_of(part_i_); }
    std::vector<int> part_j_labels() const { return labels_.labels_of(part_j_); }

    /// True if the label lies in part I.
    bool on_part_i(int label) const;

    std::string render() const;

    bool operator==(const Cut& other) const;
    bool operator!=(const Cut& other) const { return !(*this == other); }

private:
    LabelSet labels_;
    Bits part_i_;
    Bits part_j_;
};

/// True if the product of the two divisor classes vanishes by the quadratic
/// relation, i.e. all four part intersections are nonempty.  Throws
/// MismatchedLabelSets when the cuts live over different ground sets.
bool fulfills_quadratic_relation(const Cut& a, const Cut& b);

/// Two cuts are compatible when their product survives the quadratic relation.
inline bool compatible(const Cut& a, const Cut& b) {
    return !fulfills_quadratic_relation(a, b);
}

/// Rendering order for cuts over one ground set: ascending smallest label of
/// part J, ties broken by part I compared as a sorted label sequence.
bool cut_less(const Cut& a, const Cut& b);

/// The same order expressed on raw part-I bit masks.
bool cut_bits_less(const Bits& ai, const Bits& bi);

} // namespace chowdeg
