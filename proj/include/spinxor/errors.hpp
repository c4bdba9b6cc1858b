// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace spinxor {

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct LengthMismatch : std::invalid_argument {
  explicit LengthMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NotHermitian : std::invalid_argument {
  explicit NotHermitian(const std::string& what) : std::invalid_argument(what) {}
};

struct NotUnitary : std::invalid_argument {
  explicit NotUnitary(const std::string& what) : std::invalid_argument(what) {}
};

struct NotNormal : std::invalid_argument {
  explicit NotNormal(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidOptions : std::invalid_argument {
  explicit InvalidOptions(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ConvergenceFailure : std::runtime_error {
  explicit ConvergenceFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spinxor
