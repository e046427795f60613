// One PASS or FAIL line per acceptance criterion. Sizes are compared as
// exact integers against the oracles in oracles.hpp.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "diagcalc/diagcalc.hpp"
#include "oracles.hpp"

using namespace diagcalc;

namespace {

struct Criterion {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void equal(std::int64_t got, std::int64_t want, const std::string& what) {
    if (got != want) failures.push_back(what + ": got " + std::to_string(got) + ", want " + std::to_string(want));
  }
  void holds(const CheckReport& r, const std::string& what) {
    if (!r.holds()) failures.push_back(what + ": " + to_string(r.verdict) + " (" + r.detail + ")");
  }
};

const CheckReport* child(const CheckReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

// A verified presentation whose presented size, image size and concrete size
// all equal the oracle value.
void presentation(Criterion& c, Schema s, int n, std::int64_t want) {
  const auto label = schema_name(s) + " n=" + std::to_string(n);
  const auto r = verify_presentation(s, n);
  c.holds(r, label);
  const auto* size = child(r, "size");
  const auto* image = child(r, "image");
  if (size == nullptr || image == nullptr) {
    c.expect(false, label + ": missing subreport");
    return;
  }
  c.equal(size->count_of("presented"), want, label + " presented size");
  c.equal(image->count_of("closure"), want, label + " image size");
  c.equal(image->count_of("concrete"), want, label + " concrete size");
}

std::int64_t full_domain_count(int n) {
  return oracle::count_partitions(n, [n](const std::vector<int>& l) { return oracle::full_domain(l, n); });
}

std::int64_t planar_full_domain_count(int n) {
  return oracle::count_partitions(n, [n](const std::vector<int>& l) { return oracle::full_domain(l, n) && oracle::planar_partition(l, n); });
}

std::int64_t size_of(Family f, int n) { return static_cast<std::int64_t>(concrete_elements(f, n).size()); }
std::int64_t closure_size(Family f, int n) { return static_cast<std::int64_t>(build_family(f, n).size()); }

void criterion1(Criterion& c) {
  for (int n = 2; n <= 4; ++n) presentation(c, Schema::sing_xr, n, full_domain_count(n) - oracle::factorial(n));
}

void criterion2(Criterion& c) {
  for (int n = 2; n <= 4; ++n) presentation(c, Schema::full_yq, n, full_domain_count(n));
}

void criterion3(Criterion& c) {
  c.equal(planar_full_domain_count(2), 4, "|PP_2^fd| by brute force");
  for (int n = 2; n <= 5; ++n) presentation(c, Schema::planar_zo, n, planar_full_domain_count(n));
}

void criterion4(Criterion& c) {
  for (int n = 2; n <= 6; ++n) {
    c.equal(oracle::count_planar_equivalences(n), oracle::catalan(n), "planar equivalences n=" + std::to_string(n));
    presentation(c, Schema::dn, n, oracle::count_planar_equivalences(n));
  }
}

void criterion5(Criterion& c) {
  for (int n = 2; n <= 4; ++n) {
    presentation(c, Schema::en, n, oracle::bell(n));
    presentation(c, Schema::sing_tn, n, oracle::power(n, n) - oracle::factorial(n));
    presentation(c, Schema::tn, n, oracle::power(n, n));
    presentation(c, Schema::on, n, oracle::binomial(2 * n - 1, n - 1));
    presentation(c, Schema::planar_intermediate, n, planar_full_domain_count(n));
    // Uniform block bijections, counted by brute force over P_n.
    const auto uniform = oracle::count_partitions(n, [n](const std::vector<int>& l) {
      for (int b = 0; b < 2 * n; ++b) {
        int up = 0, down = 0;
        for (int x = 0; x < n; ++x) up += l[static_cast<std::size_t>(x)] == b;
        for (int x = n; x < 2 * n; ++x) down += l[static_cast<std::size_t>(x)] == b;
        if (up != down) return false;
      }
      return true;
    });
    presentation(c, Schema::fn, n, uniform);
  }
}

void criterion6(Criterion& c) {
  c.holds(ehresmann_suite(Family::pn, 3), "Ehresmann P_3");
  c.holds(ehresmann_suite(Family::pnfd, 3), "Ehresmann P_3^fd");

  for (int n = 2; n <= 4; ++n) {
    const auto label = " P_" + std::to_string(n) + "^fd";
    c.holds(restriction_suite(Family::pnfd, n, Side::right), "(R) on" + label);
    const auto left = restriction_suite(Family::pnfd, n, Side::left);
    c.expect(left.verdict == Verdict::refuted, "(L) should fail on" + label);
    c.expect(left.witness.size() == 2 &&
                 !restriction_identity(parse_partition(left.witness[0]), parse_partition(left.witness[1]), Side::left),
             "(L) witness on" + label + " re-verifies");
  }

  const auto singletons = parse_partition("[[1],[2],[-1],[-2]]"), block = parse_partition("[[1,2,-1,-2]]");
  for (auto side : {Side::left, Side::right}) {
    const auto r = restriction_suite(Family::pn, 2, side);
    const auto* known = child(r, "known-witness");
    const std::string name = side == Side::left ? "(L)" : "(R)";
    c.expect(r.verdict == Verdict::refuted, name + " should fail on P_2");
    c.expect(known != nullptr && known->verdict == Verdict::refuted, name + " known pair refutes on P_2");
  }
  c.expect(!restriction_identity(singletons, block, Side::left), "(L) fails at (singletons, block)");
  c.expect(!restriction_identity(block, singletons, Side::right), "(R) fails at (block, singletons)");

  for (int n = 2; n <= 4; ++n) c.holds(grrac_suite(n), "grrac n=" + std::to_string(n));
  for (int n = 1; n <= 6; ++n) c.holds(band_suite(n), "D_n band n=" + std::to_string(n));
  for (int n = 2; n <= 4; ++n) {
    c.holds(action_pair_suite(Family::en, Family::tn, n), "(E_n,T_n) n=" + std::to_string(n));
    c.holds(action_pair_suite(Family::en, Family::sing_tn, n), "(E_n,Sing T_n) n=" + std::to_string(n));
  }
  for (int n = 2; n <= 5; ++n) c.holds(action_pair_suite(Family::dn, Family::on, n), "(D_n,O_n) n=" + std::to_string(n));

  const auto pe = action_pair_suite(Family::pen, Family::on, 3);
  c.expect(pe.verdict == Verdict::refuted && pe.detail.find("A1") != std::string::npos, "(PE_3,PT_3) A1 should fail");
  const auto* known = child(pe, "known-witness");
  c.expect(known != nullptr && known->verdict == Verdict::refuted, "(PE_3,PT_3) known pair refutes A1");
  const auto u = parse_partition("[[1,-1],[2,3,-2,-3]]"), f = parse_partition("[[1,2,-1],[3,-3],[-2]]");
  c.expect(!absorbs(u, f, concrete_elements(Family::pen, 3)), "uf outside f PE_3");
}

void criterion7(Criterion& c) {
  for (int n = 2; n <= 5; ++n) c.holds(theta_suite(n), "theta laws n=" + std::to_string(n));
}

void criterion8(Criterion& c) {
  for (int n = 1; n <= 6; ++n) c.holds(normal_form_suite(n), "normal forms n=" + std::to_string(n));
  for (int n = 2; n <= 5; ++n) c.holds(successor_suite(n), "successor law n=" + std::to_string(n));
  const auto full = factorization_suite(Family::pnfd, 4);
  c.holds(full, "factorization P_4^fd");
  c.equal(full.count_of("elements"), full_domain_count(4), "factored elements of P_4^fd");
  const auto planar = factorization_suite(Family::ppnfd, 5);
  c.holds(planar, "factorization PP_5^fd");
  c.equal(planar.count_of("elements"), planar_full_domain_count(5), "factored elements of PP_5^fd");
  for (int n = 2; n <= 5; ++n) c.holds(derived_word_suite(n, 1), "derived words n=" + std::to_string(n));
}

void criterion9(Criterion& c) {
  for (int n = 1; n <= 3; ++n) {
    c.equal(size_of(Family::pn, n), oracle::bell(2 * n), "|P_n| n=" + std::to_string(n));
    c.equal(oracle::count_partitions(n, [](const std::vector<int>&) { return true; }), oracle::bell(2 * n),
            "brute-force |P_n| n=" + std::to_string(n));
    c.equal(closure_size(Family::pn, n), oracle::bell(2 * n), "closure |P_n| n=" + std::to_string(n));
  }
  c.equal(size_of(Family::pn, 4), oracle::bell(8), "|P_4|");
  for (int n = 1; n <= 5; ++n) {
    const auto tag = " n=" + std::to_string(n);
    c.equal(size_of(Family::en, n), oracle::bell(n), "|E_n|" + tag);
    c.equal(closure_size(Family::en, n), oracle::bell(n), "closure |E_n|" + tag);
    c.equal(size_of(Family::on, n), oracle::binomial(2 * n - 1, n - 1), "|O_n|" + tag);
    c.equal(closure_size(Family::on, n), oracle::binomial(2 * n - 1, n - 1), "closure |O_n|" + tag);
    c.equal(size_of(Family::sn, n), oracle::factorial(n), "|S_n|" + tag);
    c.equal(closure_size(Family::sn, n), oracle::factorial(n), "closure |S_n|" + tag);
  }
  for (int n = 1; n <= 4; ++n) {
    const auto tag = " n=" + std::to_string(n);
    c.equal(size_of(Family::ppn, n), oracle::catalan(2 * n), "|PP_n|" + tag);
    c.equal(closure_size(Family::ppn, n), oracle::catalan(2 * n), "closure |PP_n|" + tag);
    c.equal(oracle::count_partitions(n, [n](const std::vector<int>& l) { return oracle::planar_partition(l, n); }),
            oracle::catalan(2 * n), "brute-force |PP_n|" + tag);
  }
}

void criterion10(Criterion& c) {
  const auto first = to_json(verification_suite()).dump(2);
  const auto second = to_json(verification_suite()).dump(2);
  c.expect(first == second, "two runs of the verification suite differ");
  c.expect(first.find("\"status\": \"holds\"") == first.find("\"status\""), "verification suite does not hold");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"Sing(P_n^fd) = Sgp<X|R>, n = 2..4", criterion1},
      {"P_n^fd = Mon<Y|Q>, n = 2..4", criterion2},
      {"PP_n^fd = Mon<Z|O>, n = 2..5", criterion3},
      {"D_n = Mon<X_Dn|R_Dn>, n = 2..6", criterion4},
      {"sub-presentations E_n, Sing T_n, T_n, F_n, O_n, intermediate PP, n = 2..4", criterion5},
      {"structure suites", criterion6},
      {"theta-law suites", criterion7},
      {"normal forms and factorizations", criterion8},
      {"counting cross-checks", criterion9},
      {"deterministic reports", criterion10},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (c.failures.empty() ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first;
    line.precision(2);
    line << std::fixed << " [" << seconds << "s]";
    std::cout << line.str() << '\n';
    for (const auto& f : c.failures) std::cout << "    " << f << '\n';
    failed += c.failures.empty() ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << '\n';
  return failed == 0 ? 0 : 1;
}
