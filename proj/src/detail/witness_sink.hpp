#pragma once

#include <map>
#include <string>

#include "softcvx/report.hpp"

namespace softcvx::detail {

/// Collects witnesses under the per-axiom limit of ValidationOptions.
class WitnessSink {
 public:
  WitnessSink(ValidationReport& report, const ValidationOptions& options)
      : report_(report), options_(options) {}

  // Returns false once the caller should stop searching altogether.
  bool add(Witness w) {
    auto& n = counts_[w.axiom];
    if (n < options_.witness_limit) report_.witnesses.push_back(std::move(w));
    ++n;
    return !options_.stop_at_first;
  }

  bool full(const std::string& axiom) const {
    auto it = counts_.find(axiom);
    return it != counts_.end() && it->second >= options_.witness_limit;
  }

  bool stopped() const { return options_.stop_at_first && !report_.witnesses.empty(); }

 private:
  ValidationReport& report_;
  const ValidationOptions& options_;
  std::map<std::string, std::size_t> counts_;
};

}  // namespace softcvx::detail
