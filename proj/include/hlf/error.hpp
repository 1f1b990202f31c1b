#pragma once

#include <stdexcept>
#include <string>

namespace hlf {

/// Malformed input, dimension mismatch, out-of-range index. CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two verification routes disagree, or a structural invariant the theory
/// guarantees was found broken. CLI exit code 3.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap (rank cap, statevector qubit cap, brute-force cap)
/// would be exceeded. CLI exit code 4.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hlf
