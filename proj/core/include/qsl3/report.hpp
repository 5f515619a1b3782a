#ifndef QSL3_REPORT_HPP
#define QSL3_REPORT_HPP

/// Plain result records for the verification suites. Kept free of any JSON
/// dependency so the core library stays lightweight; the CLI renders these.

#include <optional>
#include <string>
#include <vector>

namespace qsl3 {

struct CheckResult {
  std::string check;                         // stable identifier, e.g. "relations.nil-hecke"
  std::string params;                        // human-readable parameter summary
  bool pass = false;
  std::optional<std::string> counterexample; // set when pass == false
};

struct Report {
  std::vector<CheckResult> results;

  void add(std::string check, std::string params, bool pass,
           std::optional<std::string> counterexample = std::nullopt) {
    results.push_back({std::move(check), std::move(params), pass, std::move(counterexample)});
  }

  void merge(const Report& other) {
    results.insert(results.end(), other.results.begin(), other.results.end());
  }

  [[nodiscard]] bool allPass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
};

}  // namespace qsl3

#endif  // QSL3_REPORT_HPP
