#pragma once

#include <stdexcept>
#include <string>

namespace qforest {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction was asked to build something out of nothing.
class EmptyInputError : public Error {
public:
    using Error::Error;
};

/// A vertex label outside the permitted range (labels are >= 1).
class BadVertexError : public Error {
public:
    using Error::Error;
};

/// Input violates a value-level invariant (non-positive f-vector entry,
/// self-loop, malformed sequence, ...).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// An operation would exceed its documented size guard.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// Exact integer arithmetic left the representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Malformed text input (files or command-line sequences).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A face passed where a facet of the complex was required.
class NotAFacetError : public Error {
public:
    using Error::Error;
};

/// An ordering that is not a permutation of the facet set.
class NotAPermutationError : public Error {
public:
    using Error::Error;
};

/// A c-sequence failed the suffix-sum condition required by the caller.
/// failing_k = 0 flags a violated sum identity, otherwise the smallest
/// suffix index k with sum_{i=k}^d c_i <= 0.
class ConditionViolatedError : public Error {
public:
    ConditionViolatedError(const std::string& what, int failing_k)
        : Error(what), failing_k(failing_k) {}
    int failing_k;
};

/// Delta/e sequences that violate the construction preconditions.
class InvalidSequencesError : public Error {
public:
    using Error::Error;
};

} // namespace qforest
