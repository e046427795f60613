#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace diagcalc {

enum class Verdict { holds, refuted, inconclusive };

std::string to_string(Verdict v);

/// Outcome of an exhaustive check. A refuted report carries the offending
/// elements as canonical texts.
struct CheckReport {
  std::string name;
  Verdict verdict = Verdict::holds;
  std::vector<std::string> witness;
  std::vector<std::pair<std::string, std::int64_t>> counts;
  std::string detail;
  std::vector<CheckReport> checks;

  CheckReport() = default;
  explicit CheckReport(std::string n) : name(std::move(n)) {}

  bool holds() const noexcept { return verdict == Verdict::holds; }

  void count(const std::string& key, std::int64_t value);
  std::int64_t count_of(const std::string& key) const;

  void refute(std::string why, std::vector<std::string> offending = {});
  void give_up(std::string why);

  /// Appends a sub-report; the combined verdict is the worst of the two
  /// (refuted over inconclusive over holds). A worsened report without a
  /// witness takes the child's.
  void absorb(CheckReport child);
};

nlohmann::ordered_json to_json(const CheckReport& r);

}  // namespace diagcalc
