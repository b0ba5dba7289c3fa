#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "softcvx/error.hpp"
#include "softcvx/soft_set.hpp"

namespace softcvx {

/// One axiom or law violation. `members` are the offending inputs (a pair
/// of members, a subfamily, an operator argument); `computed` is the soft
/// set that should have been present or the value that broke the law.
struct Witness {
  std::string axiom;
  std::vector<SoftSet> members;
  std::optional<SoftSet> computed;
  std::string detail;
};

struct ValidationReport {
  std::vector<Witness> witnesses;
  /// Axioms certified by a reduction instead of a search.
  std::vector<std::string> notes;

  bool valid() const noexcept { return witnesses.empty(); }
};

enum class CheckMode {
  /// Finite reductions: pairwise closure, finite collapse of directed families.
  Fast,
  /// Enumerates subfamilies up to `cap` and applies the axioms as written.
  Literal,
};

struct ValidationOptions {
  CheckMode mode = CheckMode::Fast;
  std::size_t cap = 5;
  /// Per-axiom limit on recorded witnesses.
  std::size_t witness_limit = 8;
  /// Stop at the first violation of any axiom.
  bool stop_at_first = false;
};

/// One-line text form: axiom, members, computed set and detail.
std::string describe(const Witness& w);

/// Thrown by constructors that require a valid input; carries the report.
class ValidationError : public Error {
 public:
  ValidationError(ErrorCode code, const std::string& message, ValidationReport report)
      : Error(code, message), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace softcvx
