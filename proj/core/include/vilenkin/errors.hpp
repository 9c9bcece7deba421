#pragma once

#include <stdexcept>
#include <string>

namespace vilenkin {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generating sequence entry is < 2 or the sequence is empty.
class InvalidGeneratingSequence : public Error {
 public:
  using Error::Error;
};

/// The requested model exceeds the configured point budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An index, depth or truncation level does not fit the group model.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// A numeric parameter is outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The operation is defined for a narrower class of groups (e.g. dyadic only).
class UnsupportedGroupError : public Error {
 public:
  using Error::Error;
};

/// A search-based construction ran out of room; carries the failed condition.
class ConstructionInfeasible : public Error {
 public:
  ConstructionInfeasible(const std::string& what, std::string condition)
      : Error(what), failed_condition(std::move(condition)) {}

  std::string failed_condition;
};

}  // namespace vilenkin
