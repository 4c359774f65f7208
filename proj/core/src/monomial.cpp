#include "chowdeg/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace chowdeg {

namespace {

bool factor_pair_quadratic(const Monomial::Factor& a, const Monomial::Factor& b) {
    return a.part_i.intersects(b.part_i) && a.part_i.intersects(b.part_j) &&
           a.part_j.intersects(b.part_i) && a.part_j.intersects(b.part_j);
}

} // namespace

Monomial::Monomial(LabelSet labels) : labels_(std::move(labels)) {
    if (labels_.size() < 3)
        throw LabelError("a ground set needs at least three labels");
}

Monomial::Monomial(LabelSet labels, const std::vector<std::pair<Bits, int>>& factors)
    : labels_(std::move(labels)) {
    if (labels_.size() < 3)
        throw LabelError("a ground set needs at least three labels");
    normalize_and_validate(factors);
}

void Monomial::normalize_and_validate(std::vector<std::pair<Bits, int>> raw) {
    size_t n = static_cast<size_t>(labels_.size());
    for (auto& [side, exp] : raw) {
        if (side.size() != n)
            throw InvalidCut("cut mask size does not match the ground set");
        if (exp < 1)
            throw InvalidCut("factor exponents must be positive");
        if (!side.test(0))
            side.flip();
        size_t ni = side.count();
        if (ni < 2 || n - ni < 2)
            throw InvalidCut("both parts of a cut need at least two labels");
    }
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return cut_bits_less(a.first, b.first); });
    factors_.clear();
    for (auto& [side, exp] : raw) {
        if (!factors_.empty() && factors_.back().part_i == side)
            factors_.back().exponent += exp;
        else
            factors_.push_back(Factor{side, ~side, exp});
    }
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& f : factors_)
        d += f.exponent;
    return d;
}

std::optional<size_t> Monomial::find_factor(const Bits& part_i) const {
    for (size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].part_i == part_i)
            return i;
    return std::nullopt;
}

std::optional<size_t> Monomial::find_factor(const Cut& cut) const {
    if (cut.labels() != labels_)
        throw MismatchedLabelSets("cut lives over a different ground set");
    return find_factor(cut.part_i());
}

std::optional<std::pair<size_t, size_t>> Monomial::first_quadratic_pair() const {
    for (size_t i = 0; i + 1 < factors_.size(); ++i)
        for (size_t j = i + 1; j < factors_.size(); ++j)
            if (factor_pair_quadratic(factors_[i], factors_[j]))
                return std::make_pair(i, j);
    return std::nullopt;
}

bool Monomial::is_clever() const {
    if (degree() != n() - 3)
        return false;
    for (const auto& f : factors_)
        if (f.exponent != 1)
            return false;
    return is_tree_monomial();
}

Monomial Monomial::with_factor_decremented(size_t idx) const {
    std::vector<std::pair<Bits, int>> raw;
    raw.reserve(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) {
        int exp = factors_[i].exponent - (i == idx ? 1 : 0);
        if (exp > 0)
            raw.emplace_back(factors_[i].part_i, exp);
    }
    Monomial out(labels_);
    out.normalize_and_validate(std::move(raw));
    return out;
}

Monomial Monomial::with_extra_cut(const Bits& side, int delta) const {
    std::vector<std::pair<Bits, int>> raw;
    raw.reserve(factors_.size() + 1);
    for (const auto& f : factors_)
        raw.emplace_back(f.part_i, f.exponent);
    raw.emplace_back(side, delta);
    Monomial out(labels_);
    out.normalize_and_validate(std::move(raw));
    return out;
}

bool Monomial::operator==(const Monomial& other) const {
    if (labels_ != other.labels_ || factors_.size() != other.factors_.size())
        return false;
    for (size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].part_i != other.factors_[i].part_i ||
            factors_[i].exponent != other.factors_[i].exponent)
            return false;
    return true;
}

bool Monomial::operator<(const Monomial& other) const {
    if (labels_ != other.labels_)
        return labels_ < other.labels_;
    size_t m = std::min(factors_.size(), other.factors_.size());
    for (size_t i = 0; i < m; ++i) {
        if (factors_[i].part_i != other.factors_[i].part_i)
            return cut_bits_less(factors_[i].part_i, other.factors_[i].part_i);
        if (factors_[i].exponent != other.factors_[i].exponent)
            return factors_[i].exponent < other.factors_[i].exponent;
    }
    return factors_.size() < other.factors_.size();
}

std::string Monomial::render() const {
    if (factors_.empty()) {
        if (!labels_.is_contiguous())
            throw LabelError("the empty monomial over a non-contiguous ground set "
                             "has no textual form");
        return "n=" + std::to_string(n()) + "; 1";
    }
    std::ostringstream os;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0)
            os << " * ";
        os << "d{" << labels_.render(factors_[i].part_i) << "|"
           << labels_.render(factors_[i].part_j) << "}";
        if (factors_[i].exponent >= 2)
            os << "^" << factors_[i].exponent;
    }
    return os.str();
}

namespace {

/// Hand-rolled scanner for the monomial grammar.  The language is tiny, so a
/// cursor over the raw text keeps error positions easy to report.
class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Monomial run() {
        skip_ws();
        std::optional<int> header_n;
        if (peek() == 'n') {
            ++pos_;
            skip_ws();
            expect('=');
            skip_ws();
            header_n = read_uint();
            skip_ws();
            expect(';');
            skip_ws();
        }
        if (peek() == '1') {
            ++pos_;
            skip_ws();
            if (pos_ != text_.size())
                fail("unexpected characters after the empty monomial");
            if (!header_n)
                throw LabelError("the empty monomial needs a ground set header, "
                                 "e.g. \"n=3; 1\"");
            if (*header_n < 3)
                throw LabelError("a ground set needs at least three labels");
            return Monomial(LabelSet::first_n(*header_n));
        }
        std::vector<RawTerm> terms;
        terms.push_back(read_term());
        skip_ws();
        while (pos_ < text_.size()) {
            expect('*');
            skip_ws();
            terms.push_back(read_term());
            skip_ws();
        }
        return assemble(header_n, terms);
    }

private:
    struct RawTerm {
        std::vector<int> part_i;
        std::vector<int> part_j;
        int exponent = 1;
    };

    const std::string& text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " (position " + std::to_string(pos_) + ")");
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }

    int read_uint() {
        if (!isdigit(static_cast<unsigned char>(peek())))
            fail("expected a number");
        long v = 0;
        while (isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000)
                fail("number too large");
            ++pos_;
        }
        return static_cast<int>(v);
    }

    std::vector<int> read_labels() {
        std::vector<int> out;
        skip_ws();
        out.push_back(read_label());
        skip_ws();
        while (peek() == ',') {
            ++pos_;
            skip_ws();
            out.push_back(read_label());
            skip_ws();
        }
        return out;
    }

    int read_label() {
        int v = read_uint();
        if (v == 0)
            throw LabelError("labels must be positive");
        return v;
    }

    RawTerm read_term() {
        RawTerm t;
        expect('d');
        skip_ws();
        expect('{');
        t.part_i = read_labels();
        expect('|');
        t.part_j = read_labels();
        expect('}');
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            t.exponent = read_uint();
            if (t.exponent < 1)
                fail("exponents must be at least one");
        }
        return t;
    }

    static void check_part(std::vector<int>& part) {
        std::sort(part.begin(), part.end());
        for (size_t i = 1; i < part.size(); ++i)
            if (part[i] == part[i - 1])
                throw InvalidCut("duplicate label " + std::to_string(part[i]) +
                                 " in a cut part");
    }

    Monomial assemble(std::optional<int> header_n, std::vector<RawTerm>& terms) {
        std::set<int> all_labels;
        for (auto& t : terms) {
            check_part(t.part_i);
            check_part(t.part_j);
            all_labels.insert(t.part_i.begin(), t.part_i.end());
            all_labels.insert(t.part_j.begin(), t.part_j.end());
        }
        LabelSet ls;
        if (header_n) {
            if (*header_n < 3)
                throw LabelError("a ground set needs at least three labels");
            for (int l : all_labels)
                if (l > *header_n)
                    throw LabelError("label " + std::to_string(l) +
                                     " exceeds the declared ground set n=" +
                                     std::to_string(*header_n));
            ls = LabelSet::first_n(*header_n);
        } else {
            ls = LabelSet(std::vector<int>(all_labels.begin(), all_labels.end()));
        }
        std::vector<std::pair<Bits, int>> raw;
        raw.reserve(terms.size());
        for (const auto& t : terms) {
            Bits bi = ls.bits_of(t.part_i);
            Bits bj = ls.bits_of(t.part_j);
            if (bi.intersects(bj))
                throw InvalidCut("cut parts overlap");
            if (!(bi | bj).all())
                throw InvalidCut("cut does not cover the ground set");
            raw.emplace_back(bi, t.exponent);
        }
        return Monomial(ls, raw);
    }
};

} // namespace

Monomial Monomial::parse(const std::string& text) {
    return Parser(text).run();
}

} // namespace chowdeg
