#pragma once

#include <stdexcept>
#include <string>

namespace holobrace {

enum class ErrorKind {
  InvalidArgument,
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotOrder2p2,
  InvalidAction,
  NoSuchTwist,
  TooLarge,
  NotRegular,
  NonIntegral,
  DegreeMismatch,
  MismatchAgainstClosedForm,
  UnmatchedFamily,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace holobrace
