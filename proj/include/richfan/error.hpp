#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace richfan {

enum class ErrorCode {
  DisconnectedGraph,
  UnknownEdge,
  DimensionMismatch,
  NotAMember,
  EmptySet,
  NotRClose,
  AllZero,
  NotRRich,
  NotAFace,
  ShapeMismatch,
  InvalidChoice,
  NotMinimalOrder,
  UnknownCoordinate,
  MalformedFan,
  RankNotThree,
  InvalidArgument,
  ArithmeticOverflow,
  MalformedInput,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every operation in the library. The code is the
/// machine-readable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace richfan
