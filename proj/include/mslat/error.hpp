#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mslat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an input document does not describe a valid ranked meet
/// semi-lattice. `witnesses()` names the offending element ids.
class PosetError : public Error {
 public:
  enum class Kind {
    Parse,
    DuplicateId,
    UnknownId,
    MissingBottom,
    DuplicateBottom,
    NegativeRank,
    RankStep,
    NoLowerCover,
    MeetFailure,
  };

  PosetError(Kind kind, std::string message, std::vector<std::string> witnesses = {})
      : Error(std::move(message)), kind_(kind), witnesses_(std::move(witnesses)) {}

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::string>& witnesses() const noexcept { return witnesses_; }

 private:
  Kind kind_;
  std::vector<std::string> witnesses_;
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two independently seeded runs of a generic construction disagreed, or a
/// generic-only postcondition (such as shiftedness) failed.
class GenericityError : public Error {
 public:
  using Error::Error;
};

/// A postcondition that must hold for every valid input was violated.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace mslat
