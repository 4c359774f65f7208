#pragma once

#include "chowdeg/errors.hpp"

#include <boost/dynamic_bitset.hpp>

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

namespace chowdeg {

/// Subset of a label set, stored over dense indices 0..n-1.
using Bits = boost::dynamic_bitset<>;

/// Immutable ground set of marked-point labels.
///
/// Labels are arbitrary distinct positive integers; they need not be
/// contiguous.  Copies share storage, so passing a LabelSet by value is cheap.
class LabelSet {
public:
    LabelSet() : labels_(std::make_shared<const std::vector<int>>()) {}
    explicit LabelSet(std::vector<int> labels);
    LabelSet(std::initializer_list<int> labels)
        : LabelSet(std::vector<int>(labels)) {}

    /// The ground set {1, ..., n}.
    static LabelSet first_n(int n);

    int size() const { return static_cast<int>(labels_->size()); }
    const std::vector<int>& labels() const { return *labels_; }

    bool contains(int label) const;
    /// Dense index of a label; throws LabelError if absent.
    int index_of(int label) const;
    int label_at(int index) const { return (*labels_)[static_cast<size_t>(index)]; }

    Bits empty_bits() const { return Bits(static_cast<size_t>(size())); }
    Bits full_bits() const { return ~empty_bits(); }
    Bits bits_of(const std::vector<int>& labels) const;
    std::vector<int> labels_of(const Bits& bits) const;

    /// True if the sets are {1,...,n} for some n.
    bool is_contiguous() const;

    std::string render(const Bits& bits) const;

    bool operator==(const LabelSet& other) const;
    bool operator!=(const LabelSet& other) const { return !(*this == other); }
    bool operator<(const LabelSet& other) const { return *labels_ < *other.labels_; }

private:
    std::shared_ptr<const std::vector<int>> labels_;
};

} // namespace chowdeg
