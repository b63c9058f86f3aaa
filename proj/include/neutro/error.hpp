#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace neutro {

enum class ErrorCode {
  dimension_mismatch,
  range_violation,
  duplicate_label,
  interval_inversion,
  flavor_mismatch,
  universe_mismatch,
  undefined_similarity,
  weight_error,
  syntax_error,
  schema_error,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::range_violation: return "RangeViolation";
    case ErrorCode::duplicate_label: return "DuplicateLabel";
    case ErrorCode::interval_inversion: return "IntervalInversion";
    case ErrorCode::flavor_mismatch: return "FlavorMismatch";
    case ErrorCode::universe_mismatch: return "UniverseMismatch";
    case ErrorCode::undefined_similarity: return "UndefinedSimilarity";
    case ErrorCode::weight_error: return "WeightError";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::schema_error: return "SchemaError";
  }
  return "Unknown";
}

/// Validation or evaluation failure. `path()` locates the offending datum,
/// e.g. "A1/C2/truth[0]"; it is built outward as the error propagates.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail, std::string path = {})
      : std::runtime_error(compose(code, detail, path)),
        code_(code),
        detail_(std::move(detail)),
        path_(std::move(path)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::string& path() const noexcept { return path_; }

  /// Returns a copy whose path is `prefix/old_path`.
  Error prefixed(std::string_view prefix) const {
    std::string p(prefix);
    if (!path_.empty()) {
      if (path_.front() != '[') p += '/';
      p += path_;
    }
    return Error(code_, detail_, std::move(p));
  }

 private:
  static std::string compose(ErrorCode code, const std::string& detail, const std::string& path) {
    std::string msg(to_string(code));
    if (!path.empty()) msg += " at " + path;
    if (!detail.empty()) msg += ": " + detail;
    return msg;
  }

  ErrorCode code_;
  std::string detail_;
  std::string path_;
};

namespace detail {

// Runs `fn`, re-throwing any neutro::Error with `prefix` prepended to its path.
template <class Fn>
decltype(auto) with_path(std::string_view prefix, Fn&& fn) {
  try {
    return std::forward<Fn>(fn)();
  } catch (const Error& e) {
    throw e.prefixed(prefix);
  }
}

}  // namespace detail
}  // namespace neutro
