#include "hopfish/error.hpp"

namespace hopfish {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonMonomial: return "NonMonomial";
    case ErrorKind::ZeroScalar: return "ZeroScalar";
    case ErrorKind::MissingSymbol: return "MissingSymbol";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotUnitaryMonomial: return "NotUnitaryMonomial";
    case ErrorKind::ZeroIndex: return "ZeroIndex";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

namespace {
std::string describe(std::size_t offset, const std::vector<std::string>& expected) {
  std::string msg = "at offset " + std::to_string(offset) + ", expected one of {";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) msg += ", ";
    msg += expected[i];
  }
  return msg + "}";
}
}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected)
    : Error(ErrorKind::ParseError, describe(offset, expected)),
      offset_(offset),
      expected_(std::move(expected)) {}

}  // namespace hopfish
