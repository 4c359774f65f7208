#include "chowdeg/cut.hpp"

namespace chowdeg {

Cut::Cut(LabelSet labels, Bits side) : labels_(std::move(labels)) {
    if (side.size() != static_cast<size_t>(labels_.size()))
        throw InvalidCut("cut mask size does not match the ground set");
    if (!side.test(0))
        side.flip();
    part_i_ = std::move(side);
    part_j_ = ~part_i_;
    size_t ni = part_i_.count();
    size_t nj = part_j_.count();
    if (ni < 2 || nj < 2)
        throw InvalidCut("both parts of a cut need at least two labels, got " +
                         std::to_string(ni) + " and " + std::to_string(nj));
}

bool Cut::on_part_i(int label) const {
    return part_i_.test(static_cast<size_t>(labels_.index_of(label)));
}

std::string Cut::render() const {
    return "d{" + labels_.render(part_i_) + "|" + labels_.render(part_j_) + "}";
}

bool Cut::operator==(const Cut& other) const {
    return labels_ == other.labels_ && part_i_ == other.part_i_;
}

bool fulfills_quadratic_relation(const Cut& a, const Cut& b) {
    if (a.labels() != b.labels())
        throw MismatchedLabelSets("cuts live over different ground sets");
    return a.part_i().intersects(b.part_i()) && a.part_i().intersects(b.part_j()) &&
           a.part_j().intersects(b.part_i()) && a.part_j().intersects(b.part_j());
}

bool cut_bits_less(const Bits& ai, const Bits& bi) {
    if (ai == bi)
        return false;
    // Smallest label of part J is the lowest index missing from part I.
    size_t aj = (~ai).find_first();
    size_t bj = (~bi).find_first();
    if (aj != bj)
        return aj < bj;
    // Then part I as an ascending label sequence.  Below the first
    // differing index the sequences agree, so the side holding that index
    // sorts first unless the other side has run out of labels entirely (a
    // shorter sequence that is a prefix of the longer one sorts first).
    size_t d = (ai ^ bi).find_first();
    if (ai.test(d))
        return bi.find_next(d) != Bits::npos;
    return ai.find_next(d) == Bits::npos;
}

bool cut_less(const Cut& a, const Cut& b) {
    if (a.labels() != b.labels())
        throw MismatchedLabelSets("cuts live over different ground sets");
    return cut_bits_less(a.part_i(), b.part_i());
}

} // namespace chowdeg
