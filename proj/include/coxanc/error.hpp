#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxanc {

enum class ErrorKind {
  UnknownType,
  RankOutOfRange,
  InvalidMatrix,
  NotFinite,
  NumericalInstability,
  OrderGuardExceeded,
  BadLetter,
  TooLarge,
  NotIndependent,
  IdentityHasNoAncestor,
  EmptyWord,
  WordTooLong,
  Io,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace coxanc
