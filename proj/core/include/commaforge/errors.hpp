#pragma once

#include <stdexcept>
#include <string>

namespace commaforge {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotComposable : Error { using Error::Error; };
struct UnknownObject : Error { using Error::Error; };
struct UnknownArrow : Error { using Error::Error; };
struct EndpointMismatch : Error { using Error::Error; };
struct NotAPartialOrder : Error { using Error::Error; };
struct InvalidFactor : Error { using Error::Error; };
struct BoundaryMismatch : Error { using Error::Error; };
struct SizeBudgetExceeded : Error { using Error::Error; };
struct CaseShapeMismatch : Error { using Error::Error; };
struct UndefinedAction : Error { using Error::Error; };
struct NotCommutative : Error { using Error::Error; };
struct MalformedLabel : Error { using Error::Error; };
struct NoBaseLimit : Error { using Error::Error; };

}  // namespace commaforge
