#include "chowdeg/label_set.hpp"

#include <algorithm>
#include <sstream>

namespace chowdeg {

LabelSet::LabelSet(std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    for (size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] <= 0)
            throw LabelError("labels must be positive, got " + std::to_string(labels[i]));
        if (i > 0 && labels[i] == labels[i - 1])
            throw LabelError("duplicate label " + std::to_string(labels[i]));
    }
    labels_ = std::make_shared<const std::vector<int>>(std::move(labels));
}

LabelSet LabelSet::first_n(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i)] = i + 1;
    return LabelSet(std::move(v));
}

bool LabelSet::contains(int label) const {
    return std::binary_search(labels_->begin(), labels_->end(), label);
}

int LabelSet::index_of(int label) const {
    auto it = std::lower_bound(labels_->begin(), labels_->end(), label);
    if (it == labels_->end() || *it != label)
        throw LabelError("label " + std::to_string(label) + " is not in the ground set");
    return static_cast<int>(it - labels_->begin());
}

Bits LabelSet::bits_of(const std::vector<int>& labels) const {
    Bits b = empty_bits();
    for (int l : labels)
        b.set(static_cast<size_t>(index_of(l)));
    return b;
}

std::vector<int> LabelSet::labels_of(const Bits& bits) const {
    std::vector<int> out;
    out.reserve(bits.count());
    for (size_t i = bits.find_first(); i != Bits::npos; i = bits.find_next(i))
        out.push_back(label_at(static_cast<int>(i)));
    return out;
}

bool LabelSet::is_contiguous() const {
    for (size_t i = 0; i < labels_->size(); ++i)
        if ((*labels_)[i] != static_cast<int>(i) + 1)
            return false;
    return true;
}

std::string LabelSet::render(const Bits& bits) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) {
        if (!first)
            os << ",";
        os << label_at(static_cast<int>(i));
        first = false;
    }
    return os.str();
}

bool LabelSet::operator==(const LabelSet& other) const {
    return labels_ == other.labels_ || *labels_ == *other.labels_;
}

} // namespace chowdeg
