#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "diagcalc/diagcalc.hpp"

using namespace diagcalc;

namespace {

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

void text_report(std::ostream& out, const CheckReport& r, int depth) {
  out << std::string(static_cast<std::size_t>(2 * depth), ' ') << r.name << ": " << to_string(r.verdict);
  for (const auto& [k, v] : r.counts) out << ' ' << k << '=' << v;
  if (!r.detail.empty()) out << " (" << r.detail << ')';
  out << '\n';
  for (const auto& w : r.witness) out << std::string(static_cast<std::size_t>(2 * depth + 2), ' ') << "witness " << w << '\n';
  for (const auto& c : r.checks) text_report(out, c, depth + 1);
}

int verify(const RunConfig& config) {
  const auto report = run_target(config);
  if (config.format == "text") {
    std::ostringstream out;
    text_report(out, report, 0);
    emit(out.str(), config.output);
  } else {
    emit(dump(to_json(report)), config.output);
  }
  return exit_code(report.verdict, config.expect_fail);
}

int enumerate(const RunConfig& config, bool list) {
  if (!config.target.empty()) {
    auto s = parse_schema(config.target);
    if (!s) throw UsageError("unknown schema " + config.target);
    if (config.n < 2) throw UsageError("presentations need --n >= 2");
    const auto p = schema(*s, config.n);
    const auto result = enumerate_presented(p, config.budget);
    if (result.status == EnumerationResult::Status::exhausted) {
      std::cerr << "budget exhausted after " << result.nodes_used << " nodes\n";
      return kExitInconclusive;
    }
    if (config.format == "json") {
      nlohmann::ordered_json j;
      j["presentation"] = p.schema;
      j["n"] = config.n;
      j["size"] = result.size;
      if (list) {
        j["words"] = nlohmann::ordered_json::array();
        for (const auto& w : result.words) j["words"].push_back(to_string(w));
      }
      emit(dump(j), config.output);
    } else {
      std::ostringstream out;
      out << result.size << '\n';
      if (list) {
        for (const auto& w : result.words) out << (w.empty() ? "()" : to_string(w)) << '\n';
      }
      emit(out.str(), config.output);
    }
    return kExitVerified;
  }

  const auto family = parse_family(config.monoid);
  if (!family) throw UsageError("unknown monoid '" + config.monoid + "'");
  if (config.n < 1) throw UsageError("--n must be positive");
  const auto m = build_family(*family, config.n, config.budget);
  if (!m.complete()) {
    std::cerr << "budget exhausted at " << m.size() << " elements\n";
    return kExitInconclusive;
  }
  const auto expected = closed_form_size(*family, config.n);
  const bool agrees = !expected || *expected == static_cast<std::int64_t>(m.size());
  if (config.format == "dot") {
    emit(cayley_dot(m), config.output);
  } else if (config.format == "json") {
    nlohmann::ordered_json j;
    j["monoid"] = family_name(*family);
    j["n"] = config.n;
    j["size"] = m.size();
    if (expected) j["closed_form"] = *expected;
    if (list) j["cayley"] = cayley_json(m);
    emit(dump(j), config.output);
  } else {
    std::ostringstream out;
    out << m.size() << '\n';
    if (list) {
      for (const auto& a : m.elements()) out << to_string(a) << '\n';
    }
    emit(out.str(), config.output);
  }
  if (!agrees) {
    std::cerr << "size " << m.size() << " differs from the closed form " << *expected << '\n';
    return kExitRefuted;
  }
  return kExitVerified;
}

int factorize(const std::string& input, const std::string& mode_name, const std::string& check, const RunConfig& config) {
  const auto a = parse_partition(input);
  const auto kind = classify(a);
  FactorMode mode;
  if (mode_name == "on-dn" || (mode_name.empty() && kind.planar_full_domain)) {
    if (!kind.planar_full_domain) throw UsageError("input is not in PP_n^fd");
    mode = FactorMode::on_dn;
  } else {
    if (!kind.full_domain) throw UsageError("input is not in P_n^fd");
    mode = FactorMode::tn_en;
  }
  const auto [left, right] = factor_product(a, mode);
  if (left * right != a) throw std::logic_error("factors do not multiply back");
  const auto word = factor_word(a, mode);

  bool accepted = true;
  if (!check.empty()) {
    if (a.degree() < 2) throw UsageError("--check needs degree >= 2");
    const auto schema = mode == FactorMode::on_dn ? Schema::planar_zo : Schema::full_yq;
    accepted = eval_word(standard_assignment(schema, a.degree()), parse_word(check)) == a;
  }

  if (config.format == "text") {
    std::ostringstream out;
    out << "left  " << to_string(left) << '\n' << "right " << to_string(right) << '\n';
    out << "word  " << (word.empty() ? "()" : to_string(word)) << '\n';
    if (!check.empty()) out << "check " << (accepted ? "accepted" : "rejected") << '\n';
    emit(out.str(), config.output);
  } else {
    nlohmann::ordered_json j;
    j["input"] = to_string(a);
    j["mode"] = mode == FactorMode::on_dn ? "on-dn" : "tn-en";
    j["left"] = to_string(left);
    j["right"] = to_string(right);
    j["word"] = to_string(word);
    if (!check.empty()) j["check"] = accepted;
    emit(dump(j), config.output);
  }
  return accepted ? kExitVerified : kExitRefuted;
}

int evaluate_word(const std::string& word_text, const RunConfig& config) {
  auto s = parse_schema(config.target);
  if (!s) throw UsageError("unknown schema '" + config.target + "'");
  if (config.n < 2) throw UsageError("presentations need --n >= 2");
  const auto value = eval_word(standard_assignment(*s, config.n), parse_word(word_text));
  if (config.format == "svg") {
    emit(render_svg(value), config.output);
  } else if (config.format == "json") {
    nlohmann::ordered_json j;
    j["word"] = word_text;
    j["value"] = to_string(value);
    emit(dump(j), config.output);
  } else {
    emit(to_string(value) + "\n", config.output);
  }
  return kExitVerified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diagram monoid workbench"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RunConfig config;
  config.budget = budget_from_env();
  std::string side = "right";
  bool list = false;
  std::string input, mode, check, word;

  auto common = [&](CLI::App* cmd, const std::vector<std::string>& formats) {
    cmd->add_option("--n", config.n, "Degree")->capture_default_str();
    cmd->add_option("--budget", config.budget, "Node or element cap")->check(CLI::PositiveNumber);
    cmd->add_option("--output", config.output, "Write here instead of stdout");
    cmd->add_option("--format", config.format, "Output format")->check(CLI::IsMember(formats));
  };

  auto* verify_cmd = app.add_subcommand("verify", "Verify a presentation or structure theorem");
  common(verify_cmd, {"json", "text"});
  verify_cmd->add_option("--target", config.target, "One of: " + [] {
    std::string all;
    for (const auto& t : verify_targets()) all += (all.empty() ? "" : ", ") + t;
    return all;
  }())->required();
  verify_cmd->add_option("--monoid", config.monoid, "Family selector, or U:S for action-pair");
  verify_cmd->add_option("--seed", config.seed, "Seed for random samples");
  verify_cmd->add_option("--side", side, "Restriction side")->check(CLI::IsMember({"left", "right"}));
  verify_cmd->add_flag("--expect-fail", config.expect_fail, "Succeed only when the check is refuted");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Count a family or a presented monoid");
  common(enumerate_cmd, {"text", "json", "dot"});
  enumerate_cmd->add_option("--monoid", config.monoid, "Family selector");
  enumerate_cmd->add_option("--target", config.target, "Presentation schema, enumerated abstractly");
  enumerate_cmd->add_flag("--list", list, "Also list elements");

  auto* factorize_cmd = app.add_subcommand("factorize", "Split a partition into a map and a projection");
  common(factorize_cmd, {"json", "text"});
  factorize_cmd->add_option("partition", input, "Partition text")->required();
  factorize_cmd->add_option("--mode", mode, "Factorization")->check(CLI::IsMember({"tn-en", "on-dn"}));
  factorize_cmd->add_option("--check", check, "A word that should evaluate to the input");

  auto* render_cmd = app.add_subcommand("render", "Draw a partition as SVG");
  render_cmd->add_option("partition", input, "Partition text")->required();
  render_cmd->add_option("--output", config.output, "Write here instead of stdout");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a word through a standard assignment");
  common(eval_cmd, {"text", "json", "svg"});
  eval_cmd->add_option("--target", config.target, "Presentation schema")->required();
  eval_cmd->add_option("word", word, "Whitespace-separated symbols")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  config.side = side == "left" ? Side::left : Side::right;

  try {
    if (*verify_cmd) return verify(config);
    if (*enumerate_cmd) {
      if (config.format == "json" && enumerate_cmd->count("--format") == 0) config.format = "text";
      if (config.monoid.empty() == config.target.empty()) throw UsageError("give exactly one of --monoid and --target");
      return enumerate(config, list);
    }
    if (*factorize_cmd) return factorize(input, mode, check, config);
    if (*render_cmd) {
      emit(render_svg(parse_partition(input)), config.output);
      return kExitVerified;
    }
    if (*eval_cmd) {
      if (eval_cmd->count("--format") == 0) config.format = "text";
      return evaluate_word(word, config);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
