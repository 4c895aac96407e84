#pragma once

#include <stdexcept>
#include <string>

namespace semimod {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: non-coprime pair, empty generator list, non-gap where a gap
// is required, malformed path, unknown render format.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The pairwise-intersection syzygy of a principal semimodule is empty.
class DegenerateSyzygy : public Error {
 public:
  using Error::Error;
};

// Two routes that must agree did not. Always an implementation bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace semimod
