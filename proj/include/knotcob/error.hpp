#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knotcob {

enum class ErrorCode {
  MalformedToken,
  OccurrenceCount,
  FlagConflict,
  SignConflict,
  InapplicableMove,
  BadSignDomain,
  OddEuler,
  Disconnected,
  PathNotOnGraph,
  DoesNotLift,
  ResourceLimit,
  NotSkew,
  NotNormal,
  WrongRing,
  SizeCap,
  NotANormal,
  Overflow,
  InvalidArgument,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::OccurrenceCount: return "OccurrenceCount";
    case ErrorCode::FlagConflict: return "FlagConflict";
    case ErrorCode::SignConflict: return "SignConflict";
    case ErrorCode::InapplicableMove: return "InapplicableMove";
    case ErrorCode::BadSignDomain: return "BadSignDomain";
    case ErrorCode::OddEuler: return "OddEuler";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::PathNotOnGraph: return "PathNotOnGraph";
    case ErrorCode::DoesNotLift: return "DoesNotLift";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::WrongRing: return "WrongRing";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::NotANormal: return "NotANormal";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Domain error raised by every knotcob operation. The code is stable and
/// is what the CLI reports in its machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace knotcob
