#pragma once

#include <stdexcept>

namespace aho {

/// A request lies outside what a method can answer (e.g. a coupled state
/// beyond first order, or a potential that is unbounded below).
class ScopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two coupled states stay degenerate at first order, so the seed ratio is undetermined.
class AccidentalDegeneracy : public ScopeError {
 public:
  using ScopeError::ScopeError;
};

/// A numerical procedure failed to reach its own accuracy target.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aho
