#pragma once

#include <stdexcept>
#include <string>

namespace langnet {

enum class ErrorCode {
  kInvalidArgument = 1,
  kDimension = 2,
  kRange = 3,
  kParse = 4,
  kIo = 5,
  kGeneration = 6,
  kFormat = 7,
  kConfig = 8,
  kInternal = 9,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct InvalidArgumentError : Error {
  explicit InvalidArgumentError(const std::string& what)
      : Error(ErrorCode::kInvalidArgument, what) {}
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& what)
      : Error(ErrorCode::kDimension, what) {}
};

struct RangeError : Error {
  explicit RangeError(const std::string& what)
      : Error(ErrorCode::kRange, what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what)
      : Error(ErrorCode::kParse, what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(ErrorCode::kIo, what) {}
};

struct GenerationError : Error {
  explicit GenerationError(const std::string& what)
      : Error(ErrorCode::kGeneration, what) {}
};

struct FormatError : Error {
  explicit FormatError(const std::string& what)
      : Error(ErrorCode::kFormat, what) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what)
      : Error(ErrorCode::kConfig, what) {}
};

}  // namespace langnet
