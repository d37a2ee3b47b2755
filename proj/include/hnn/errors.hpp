// Error taxonomy for the hnn-forge library.
//
// All failures surface as exceptions derived from hnn::Error; the CLI maps
// them onto its exit-code contract (2 = usage, 3 = instance validation /
// oracle contract).

#pragma once

#include <stdexcept>
#include <string>

namespace hnn {

// Base class for every library error.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed instance data: bad multiplication table, bad subgroup, invalid
// tuple sequence, out-of-range parameters.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An oracle callback broke its contract (e.g. theta called off H, a coset
// representative that does not absorb its argument).  Never recoverable:
// the presentation itself is inconsistent.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Operation requires data the instance does not provide (e.g. coset
// enumeration on an instance without representative lists, or a finite
// verdict on an ascending extension).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Word / instance-token / file syntax errors.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A documented resource cap was exceeded (ball size, enumeration width).
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace hnn
