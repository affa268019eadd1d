#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfish {

enum class ErrorKind {
  NonMonomial,
  ZeroScalar,
  MissingSymbol,
  NotInvertible,
  NotUnitaryMonomial,
  ZeroIndex,
  NotCoprime,
  NotSimple,
  WindowTooSmall,
  ParseError,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the text grammar. `offset` is the byte offset of the first
/// character that could not be consumed.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected);
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace hopfish
