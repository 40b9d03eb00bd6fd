#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dessin {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (cycle notation, dessin files, pattern files).
class parse_error : public error {
public:
  using error::error;
};

// Well-formed input that violates a structural requirement, e.g. a
// non-transitive permutation pair or mismatched degrees.
class validation_error : public error {
public:
  using error::error;
};

class degree_mismatch : public validation_error {
public:
  degree_mismatch(std::size_t lhs, std::size_t rhs)
      : validation_error("degree mismatch: " + std::to_string(lhs) + " vs " +
                         std::to_string(rhs)) {}
};

} // namespace dessin
