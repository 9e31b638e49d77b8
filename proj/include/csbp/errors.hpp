#pragma once

#include <stdexcept>
#include <string>

namespace csbp {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error { using Error::Error; };
struct SolverError : Error { using Error::Error; };
struct HypothesisError : Error { using Error::Error; };
struct UnsupportedFamilyError : Error { using Error::Error; };
struct MergeMismatchError : Error { using Error::Error; };
struct InversionError : Error { using Error::Error; };
struct FitError : Error { using Error::Error; };

}  // namespace csbp
