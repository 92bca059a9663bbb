#pragma once

#include <stdexcept>
#include <string>

namespace demroots {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vectors of mismatched length fed to an operation.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Input outside an operation's domain (zero vector, weight outside the
/// monoid, vector that is not a dual ray, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input violating a structural precondition (non-full-dimensional cone,
/// non-strictly-convex cone where rays are requested, degenerate datum).
class StructureError : public Error {
public:
    using Error::Error;
};

/// A bounded search exhausted its box; enlarging the box may succeed.
class BoxTooSmallError : public Error {
public:
    using Error::Error;
};

/// A classifier precondition failed (e.g. the root lies in the rational span
/// of the weight monoid, so the datum is outside the classified family).
class TheoremPreconditionError : public Error {
public:
    using Error::Error;
};

/// A cross-check that must hold by theory failed; signals a bug or corrupted
/// input rather than a user error.
class InternalError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace demroots
