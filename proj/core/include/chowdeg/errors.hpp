#pragma once

#include <stdexcept>
#include <string>

namespace chowdeg {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text (bad token, unexpected end, stray characters).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// A cut whose parts overlap, miss labels, or are too small.
struct InvalidCut : Error {
    explicit InvalidCut(const std::string& msg) : Error(msg) {}
};

/// Labels that are non-positive, duplicated, or outside the ground set.
struct LabelError : Error {
    explicit LabelError(const std::string& msg) : Error(msg) {}
};

/// Two objects that were expected to live over the same ground set do not.
struct MismatchedLabelSets : Error {
    explicit MismatchedLabelSets(const std::string& msg) : Error(msg) {}
};

/// A loaded tree violating one of its defining conditions (connectivity,
/// label partition, multiplicities, or vertex stability).
struct InvalidTree : Error {
    explicit InvalidTree(const std::string& msg) : Error(msg) {}
};

/// The monomial contains a pair of factors annihilated by the quadratic relation.
struct NotATreeMonomial : Error {
    explicit NotATreeMonomial(const std::string& msg) : Error(msg) {}
};

/// An empty monomial over a ground set with other than three labels has no tree.
struct EmptyMonomialBadN : Error {
    explicit EmptyMonomialBadN(const std::string& msg) : Error(msg) {}
};

/// A single-vertex tree with other than three labels corresponds to no monomial.
struct NoCorrespondingMonomial : Error {
    explicit NoCorrespondingMonomial(const std::string& msg) : Error(msg) {}
};

/// Operation requires a proper tree (fringe count equal to label count minus three).
struct NotProper : Error {
    explicit NotProper(const std::string& msg) : Error(msg) {}
};

/// The four labels of a quadruple must be pairwise distinct.
struct DuplicateLabels : Error {
    explicit DuplicateLabels(const std::string& msg) : Error(msg) {}
};

/// Linear reduction needs a factor of exponent at least two.
struct ExponentTooLow : Error {
    explicit ExponentTooLow(const std::string& msg) : Error(msg) {}
};

/// The quadruple is not proper for the designated edge.
struct ImproperQuadruple : Error {
    explicit ImproperQuadruple(const std::string& msg) : Error(msg) {}
};

/// A vertex-splitting choice violating one of the admissibility requirements.
struct InvalidChoice : Error {
    explicit InvalidChoice(const std::string& msg) : Error(msg) {}
};

/// Operation requires an edge of multiplicity one.
struct NotSingleEdge : Error {
    explicit NotSingleEdge(const std::string& msg) : Error(msg) {}
};

/// Operation requires an edge of multiplicity at least two.
struct NotMultiEdge : Error {
    explicit NotMultiEdge(const std::string& msg) : Error(msg) {}
};

/// The tree is too small for the requested operation.
struct TooSmall : Error {
    explicit TooSmall(const std::string& msg) : Error(msg) {}
};

/// A size cap protecting exponential enumerations was exceeded.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

/// An identity variant was requested outside its range of validity.
struct VariantPreconditionViolated : Error {
    explicit VariantPreconditionViolated(const std::string& msg) : Error(msg) {}
};

} // namespace chowdeg
