#pragma once

#include <stdexcept>
#include <string>

namespace fracchern {

// Malformed input text: expressions, JSON, unknown names.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its contract (bad n, l, k, cap, ring mismatch ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Something that must hold by construction did not. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fracchern
