#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spinwedge {

// Bad arguments: out-of-range vertices, self-loops, invalid k, dimension
// mismatches. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size guard refused to allocate (full Hilbert space too large, block too
// large, tensor oracle too large).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at byte " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An internal identity that must hold exactly did not, e.g. a nonzero entry
// of the full Hamiltonian coupling two different excitation sectors.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace spinwedge
