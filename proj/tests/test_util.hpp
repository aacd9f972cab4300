#pragma once

#include <functional>

#include <gtest/gtest.h>

#include "railprice/error.hpp"

namespace railprice::testing {

/// Code of the Error thrown by f; records a failure if nothing is thrown.
inline ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected railprice::Error";
  return ErrorCode::ValidationError;
}

}  // namespace railprice::testing
