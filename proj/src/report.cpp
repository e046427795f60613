#include "diagcalc/report.hpp"

#include <algorithm>

namespace diagcalc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::refuted:
      return "refuted";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

void CheckReport::count(const std::string& key, std::int64_t value) {
  for (auto& [k, v] : counts) {
    if (k == key) {
      v = value;
      return;
    }
  }
  counts.emplace_back(key, value);
}

std::int64_t CheckReport::count_of(const std::string& key) const {
  for (const auto& [k, v] : counts) {
    if (k == key) return v;
  }
  return -1;
}

void CheckReport::refute(std::string why, std::vector<std::string> offending) {
  if (verdict == Verdict::refuted) return;
  verdict = Verdict::refuted;
  detail = std::move(why);
  witness = std::move(offending);
}

void CheckReport::give_up(std::string why) {
  if (verdict != Verdict::holds) return;
  verdict = Verdict::inconclusive;
  detail = std::move(why);
}

void CheckReport::absorb(CheckReport child) {
  auto rank = [](Verdict v) { return v == Verdict::refuted ? 2 : v == Verdict::inconclusive ? 1 : 0; };
  if (rank(child.verdict) > rank(verdict)) {
    verdict = child.verdict;
    if (detail.empty()) detail = child.name + ": " + child.detail;
    if (witness.empty()) witness = child.witness;
  }
  checks.push_back(std::move(child));
}

nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["holds"] = r.holds();
  j["status"] = to_string(r.verdict);
  j["witness"] = r.witness;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  j["counts"] = counts;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!r.checks.empty()) {
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
  }
  return j;
}

}  // namespace diagcalc
