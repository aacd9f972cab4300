#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace railprice {

enum class ErrorCode {
  DuplicateNodeId,
  DanglingLinkEndpoint,
  NonPositiveLength,
  UnknownNode,
  Unreachable,
  ChainNotOnRoute,
  InvalidChain,
  InvalidYardParams,
  InvalidProfile,
  NonIntegerInterval,
  InvalidHorizon,
  UnknownYard,
  InvalidCostParams,
  UnknownCategory,
  InvalidTariff,
  NegativeInput,
  InvalidTradeoffInputs,
  BetaOutOfRange,
  EmptyPortfolio,
  UnsortedGrid,
  BadRange,
  ParseError,
  ValidationError,
  IoError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateNodeId: return "DuplicateNodeId";
    case ErrorCode::DanglingLinkEndpoint: return "DanglingLinkEndpoint";
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::ChainNotOnRoute: return "ChainNotOnRoute";
    case ErrorCode::InvalidChain: return "InvalidChain";
    case ErrorCode::InvalidYardParams: return "InvalidYardParams";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::NonIntegerInterval: return "NonIntegerInterval";
    case ErrorCode::InvalidHorizon: return "InvalidHorizon";
    case ErrorCode::UnknownYard: return "UnknownYard";
    case ErrorCode::InvalidCostParams: return "InvalidCostParams";
    case ErrorCode::UnknownCategory: return "UnknownCategory";
    case ErrorCode::InvalidTariff: return "InvalidTariff";
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::InvalidTradeoffInputs: return "InvalidTradeoffInputs";
    case ErrorCode::BetaOutOfRange: return "BetaOutOfRange";
    case ErrorCode::EmptyPortfolio: return "EmptyPortfolio";
    case ErrorCode::UnsortedGrid: return "UnsortedGrid";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an Error carrying a code that
/// callers (and the CLI exit-code mapping) can switch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace detail

}  // namespace railprice
