#pragma once

#include <stdexcept>
#include <string>

namespace catcomp {

/// Base class for all catcomp errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Composition or typing mismatch (cod/dom disagreement and friends).
struct TypeMismatchError : Error {
  using Error::Error;
};

/// A name (object, morphism, label, workspace entity) failed to resolve.
struct LookupError : Error {
  using Error::Error;
};

/// Structurally malformed input: duplicate names, dangling references,
/// incomplete composition tables, ill-typed relation pairs.
struct InvalidInputError : Error {
  using Error::Error;
};

/// A mathematical hypothesis of a construction is violated (missing
/// pullback, functor fails to preserve pullbacks or monos, model not
/// total, CM2 failure of a built model).
struct HypothesisError : Error {
  using Error::Error;
};

/// A configured size guard was exceeded.
struct LimitError : Error {
  using Error::Error;
};

} // namespace catcomp
