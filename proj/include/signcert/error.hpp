#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace signcert {

enum class ErrorKind {
  domain,
  precision,
  numeric,
  classification,
  consistency,
  input,
  mode,
  generation,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::precision: return "precision_insufficient";
    case ErrorKind::numeric: return "numeric";
    case ErrorKind::classification: return "classification";
    case ErrorKind::consistency: return "internal_consistency";
    case ErrorKind::input: return "input";
    case ErrorKind::mode: return "mode";
    case ErrorKind::generation: return "generation";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Operation applied outside its mathematical domain (zero polynomial,
/// root at the origin, positive roots where none are allowed, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

/// A sign or comparison cannot be decided at the current working precision.
/// Retrying with more bits may succeed.
struct PrecisionError : Error {
  explicit PrecisionError(const std::string& what) : Error(ErrorKind::precision, what) {}
};

struct NumericError : Error {
  explicit NumericError(const std::string& what) : Error(ErrorKind::numeric, what) {}
};

struct ClassificationError : Error {
  explicit ClassificationError(const std::string& what) : Error(ErrorKind::classification, what) {}
};

/// An identity that must hold by construction did not. Indicates a bug.
struct ConsistencyError : Error {
  explicit ConsistencyError(const std::string& what) : Error(ErrorKind::consistency, what) {}
};

struct InputError : Error {
  InputError(const std::string& what, std::size_t offset)
      : Error(ErrorKind::input, what + " at offset " + std::to_string(offset)), offset_(offset) {}
  explicit InputError(const std::string& what) : Error(ErrorKind::input, what), offset_(0) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

struct ModeError : Error {
  explicit ModeError(const std::string& what) : Error(ErrorKind::mode, what) {}
};

struct GenerationError : Error {
  explicit GenerationError(const std::string& what) : Error(ErrorKind::generation, what) {}
};

}  // namespace signcert
