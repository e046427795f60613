#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diagcalc/ehresmann.hpp"
#include "diagcalc/families.hpp"
#include "diagcalc/finite_monoid.hpp"
#include "diagcalc/presentation.hpp"
#include "diagcalc/report.hpp"

namespace diagcalc {

inline constexpr std::string_view kVersion = "0.1.0";

inline constexpr int kExitVerified = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 3;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  int n = 3;
  std::string target;
  std::string monoid;
  std::size_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  std::string output;
  std::string format = "json";
  bool expect_fail = false;
  Side side = Side::right;
};

/// DIAGCALC_BUDGET when set to a positive integer, otherwise fallback.
std::size_t budget_from_env(std::size_t fallback = kDefaultBudget);

std::vector<std::string> verify_targets();

/// Runs one verification target. Throws UsageError for unknown targets,
/// unknown monoids and out-of-range degrees.
CheckReport run_target(const RunConfig& config);

/// 0 verified, 1 refuted, 2 inconclusive; with expect_fail a refutation is
/// the success case and a verified report counts as refuted.
int exit_code(Verdict v, bool expect_fail = false);

/// Closed-form size of a family where one is known.
std::optional<std::int64_t> closed_form_size(Family f, int n);

CheckReport ehresmann_suite(Family f, int n);
CheckReport restriction_suite(Family f, int n, Side side);
/// (U,S) as families; U is built as a monoid and S in its own kind.
CheckReport action_pair_suite(Family acting_on, Family acted_by, int n);
CheckReport grrac_suite(int n);
/// Right regular band identities and L-triviality of D_n.
CheckReport band_suite(int n);
/// Join law and single-pair generation of theta over T_n and Sing T_n,
/// single-pair generation and the join over caps of adjacent points over O_n.
CheckReport theta_suite(int n);
/// w_word, bricks, ker_hat and cokernel of d_of for every planar equivalence.
CheckReport normal_form_suite(int n);
/// h_ij d_eta = d_mu with the successor update, every planar eta and i < j.
CheckReport successor_suite(int n);
/// factor_product over every element of P_n^fd (family pnfd) or PP_n^fd
/// (family ppnfd).
CheckReport factorization_suite(Family f, int n);
/// Shift, epsilon, tau, alpha and beta words, the letter-by-letter
/// translation of X-words into Y-words on random words, and the alpha lift
/// of normal forms.
CheckReport derived_word_suite(int n, std::uint64_t seed);
/// h_ij times f_k and g_k against the case table.
CheckReport commutation_suite(int n);
/// Closure size against the brute-force build and the closed form.
CheckReport count_suite(Family f, int n, std::size_t budget = kDefaultBudget);
/// Product decompositions, the T/I/Tf parts of P_n^fd and the groups of units.
CheckReport decomposition_suite(int n);

/// Every theorem and structure check at the degrees the acceptance criteria
/// name. Subreports are computed in parallel and merged in a fixed order.
CheckReport verification_suite(std::size_t budget = kDefaultBudget);

/// a as a word over the Y alphabet (tn_en) or Z alphabet (on_dn), built
/// from the two factors; the word is evaluated back before it is returned.
Word factor_word(const Partition& a, FactorMode mode);

}  // namespace diagcalc
