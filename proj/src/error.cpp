#include "richfan/error.hpp"

namespace richfan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NotRClose: return "NotRClose";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::NotRRich: return "NotRRich";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidChoice: return "InvalidChoice";
    case ErrorCode::NotMinimalOrder: return "NotMinimalOrder";
    case ErrorCode::UnknownCoordinate: return "UnknownCoordinate";
    case ErrorCode::MalformedFan: return "MalformedFan";
    case ErrorCode::RankNotThree: return "RankNotThree";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace richfan
