#pragma once

#include <stdexcept>

namespace zdp {

// Input integer outside the supported range.
class RangeError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The zero-divisor graph has no vertices (n prime).
class EmptyGraphError : public std::domain_error {
  using std::domain_error::domain_error;
};

// An engine cap (vertex count, class count, dense degree) was exceeded.
class SizeCapError : public std::length_error {
  using std::length_error::length_error;
};

// No closed form exists for the family of n.
class UnsupportedFamilyError : public std::domain_error {
  using std::domain_error::domain_error;
};

// Malformed polynomial file.
class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zdp
