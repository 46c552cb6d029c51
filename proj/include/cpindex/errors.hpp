#pragma once

#include <stdexcept>
#include <string>

namespace cpindex {

/// Inconsistent operands: mismatched moduli or generator sets, non-homogeneous
/// input where homogeneity is required, or an internal invariant that failed.
class StructuralError : public std::logic_error {
 public:
  explicit StructuralError(const std::string& what) : std::logic_error(what) {}
};

/// An argument outside the domain of an operation (even prime, k >= n, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A search ran past its configured bound without finding an answer.
class BoundExceeded : public std::runtime_error {
 public:
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed text input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cpindex
