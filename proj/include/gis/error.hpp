#pragma once

#include <stdexcept>
#include <string>

namespace gis {

//! Domain error: invalid input data, violated precondition, unknown id.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! A computation was requested beyond the materialized bound.  Callers that
//! sweep bounded slices treat this as "skip", not as a failure.
class BoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace gis
