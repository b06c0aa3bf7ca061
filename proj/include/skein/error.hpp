#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skein {

/// Domain failures raised by the algebra layer. The CLI maps every one of
/// these to exit code 3.
enum class ErrorKind {
  NotAUnit,
  ZeroEvaluationPoint,
  NotSymmetric,
  NotPrimitive,
  BadDeterminant,
  DegenerateLens,
  NoDecomposition,
  IdempotentUndefined,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::ZeroEvaluationPoint: return "ZeroEvaluationPoint";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::BadDeterminant: return "BadDeterminant";
    case ErrorKind::DegenerateLens: return "DegenerateLens";
    case ErrorKind::NoDecomposition: return "NoDecomposition";
    case ErrorKind::IdempotentUndefined: return "IdempotentUndefined";
  }
  return "Unknown";
}

class DomainError : public std::domain_error {
 public:
  DomainError(ErrorKind kind, const std::string& detail)
      : std::domain_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace skein
