#pragma once

#include "chowdeg/forest.hpp"
#include "chowdeg/monomial.hpp"

#include <optional>
#include <string>

namespace chowdeg {

/// One evaluated input line, with per-stage wall-clock times.
struct EvalReport {
    /// Canonical rendering of the parsed monomial (or the original text when
    /// no textual form exists).
    std::string input;
    int n = 0;
    int degree = 0;
    Int value;
    int sign = 1;
    Int magnitude;
    bool proper = false;
    Classification classification = Classification::General;
    /// Set when the oracle cross-check ran.
    std::optional<Int> oracle;

    /// Microseconds: parsing, degree and quadratic screening, tree building,
    /// forest construction plus evaluation.
    long parse_us = 0;
    long screen_us = 0;
    long tree_us = 0;
    long forest_us = 0;
    long total_us = 0;
};

/// Full pipeline on one textual monomial.  With force_forest set, the tree
/// and forest stages run even for monomials the screening already decided
/// (clever ones in particular), which keeps stage timings meaningful on
/// benchmark shapes; the reported value is unaffected.
EvalReport evaluate_monomial_text(const std::string& text, bool force_forest = false);

/// Same pipeline on an already parsed monomial.
EvalReport evaluate_monomial(const Monomial& m, bool force_forest = false);

std::string report_to_line(const EvalReport& r);
std::string report_to_json(const EvalReport& r);

} // namespace chowdeg
