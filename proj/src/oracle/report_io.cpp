#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "softcvx/oracle.hpp"

namespace softcvx {

std::string describe(const Witness& w) {
  std::string out = w.axiom + ":";
  if (w.members.empty()) out += " (no members)";
  for (std::size_t i = 0; i < w.members.size(); ++i) out += (i ? " & " : " ") + to_string(w.members[i]);
  if (w.computed) out += " -> " + to_string(*w.computed);
  if (!w.detail.empty()) out += " (" + w.detail + ")";
  return out;
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream s;
  s << "space: " << r.space << "\n";
  s << "strategy: " << (r.strategy == Strategy::Filter ? "filter" : "generator")
    << "  candidates: " << r.candidates << "  structures: " << r.structures << "\n";
  s << "functions: " << r.functions << "  structure pairs: " << r.structure_pairs << "\n";
  s << std::left << std::setw(28) << "check" << std::right << std::setw(10) << "passed" << std::setw(8)
    << "failed" << std::setw(9) << "skipped" << "\n";
  for (const auto& c : r.checks) {
    s << std::left << std::setw(28) << c.name << std::right << std::setw(10) << c.passed << std::setw(8)
      << c.failed << std::setw(9) << c.skipped << "\n";
  }
  for (const auto& c : r.checks)
    if (c.failed) s << "first failure " << c.name << ": " << c.first_failure << "\n";
  for (const auto& i : r.injected) {
    s << "injected " << i.name << ": " << (i.valid ? "valid" : "invalid");
    if (!i.valid) s << " [" << i.first_witness << "]";
    s << "\n";
  }
  for (const auto& n : r.notes) s << "note: " << n << "\n";
  s << "result: " << (r.failures() == 0 ? "PASS" : "FAIL") << " (" << r.failures() << " failures)\n";
  return s.str();
}

std::string to_json(const SuiteReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["command"] = "verify-suite";
  j["valid"] = r.failures() == 0;
  ordered_json witnesses = ordered_json::array();
  for (const auto& c : r.checks)
    if (c.failed) witnesses.push_back({{"check", c.name}, {"detail", c.first_failure}});
  j["witnesses"] = std::move(witnesses);

  ordered_json counts;
  counts["candidates"] = r.candidates;
  counts["structures"] = r.structures;
  counts["functions"] = r.functions;
  counts["structure_pairs"] = r.structure_pairs;
  counts["failures"] = r.failures();
  ordered_json checks = ordered_json::object();
  for (const auto& c : r.checks)
    checks[c.name] = {{"passed", c.passed}, {"failed", c.failed}, {"skipped", c.skipped}};
  counts["checks"] = std::move(checks);
  j["counts"] = std::move(counts);

  ordered_json result;
  result["space"] = r.space;
  result["strategy"] = r.strategy == Strategy::Filter ? "filter" : "generator";
  ordered_json injected = ordered_json::array();
  for (const auto& i : r.injected)
    injected.push_back({{"name", i.name}, {"valid", i.valid}, {"witness", i.first_witness}});
  result["injected"] = std::move(injected);
  result["notes"] = r.notes;
  j["result"] = std::move(result);
  return j.dump(2) + "\n";
}

}  // namespace softcvx
