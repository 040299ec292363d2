#pragma once

#include <stdexcept>
#include <string>

namespace dk {

/// Morphisms or maps whose ranks do not line up.
class CompositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inputs that violate a constructor's algebraic preconditions.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request beyond the degrees a truncated object can answer exactly.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed object descriptors or command-line input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dk
