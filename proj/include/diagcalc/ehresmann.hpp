#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "diagcalc/finite_monoid.hpp"
#include "diagcalc/partition.hpp"
#include "diagcalc/report.hpp"

namespace diagcalc {

/// id of the kernel. Computed in P_n for any input.
Partition domain_projection(const Partition& a);
/// id of the cokernel. Computed in P_n for any input, planar or not.
Partition range_projection(const Partition& a);
/// d of the cokernel; requires a planar full-domain input.
Partition planar_range(const Partition& a);

/// Closure under both projections, then the Ehresmann identities in both
/// forms and their consequences, over all elements and pairs of m.
CheckReport check_ehresmann(const FiniteMonoid& m);

/// The ordering law R(ab) = R(b) when R(a) >= D(b), R(ap) = p for
/// projections p <= R(a), and that the projections are exactly the
/// idempotents fixed by both operations.
CheckReport check_projection_laws(const FiniteMonoid& m);

enum class Side { left, right };

/// a D(b) = D(ab) a for the left side, R(a) b = b R(ab) for the right.
bool restriction_identity(const Partition& a, const Partition& b, Side side);
CheckReport check_restriction(const FiniteMonoid& m, Side side);

/// p a = a R(p a) for every projection p and element a.
CheckReport check_projection_action(const FiniteMonoid& m);

struct Parts {
  std::vector<FiniteMonoid::Index> total;    // R(a) = 1
  std::vector<FiniteMonoid::Index> ideal;    // D(a) != 1
  std::vector<FiniteMonoid::Index> proper;   // both
  CheckReport validation;
};

/// Requires m to be a monoid closed under both projections.
Parts parts(const FiniteMonoid& m);

struct ActionPairOptions {
  /// Also require u^s = R(us).
  bool action_is_range = false;
};

/// Strong right action pair: U a submonoid and S a subsemigroup of the
/// ambient monoid, Us inside sU for every s, and su = tv only when u = v.
CheckReport check_action_pair(std::span<const Partition> acting_on, std::span<const Partition> acted_by,
                              ActionPairOptions options = {});

/// Whether u s = s v for some v in U.
bool absorbs(const Partition& u, const Partition& s, std::span<const Partition> acting_on);

/// An equivalence on S^1 closed under left multiplication. Carrier indices
/// below s.size() are elements of s; if s lacks an identity, index s.size()
/// is an adjoined one.
class LeftCongruence {
 public:
  LeftCongruence() = default;
  explicit LeftCongruence(std::vector<int> labels);

  std::size_t carrier_size() const noexcept { return class_of_.size(); }
  int class_of(std::size_t i) const { return class_of_.at(i); }
  int class_count() const noexcept { return classes_; }
  bool related(std::size_t i, std::size_t j) const { return class_of(i) == class_of(j); }
  const std::vector<int>& labels() const noexcept { return class_of_; }
  std::size_t pair_count() const;

  friend bool operator==(const LeftCongruence&, const LeftCongruence&) = default;

 private:
  std::vector<int> class_of_;
  int classes_ = 0;
};

std::size_t carrier_size(const FiniteMonoid& s);
Partition carrier_element(const FiniteMonoid& s, std::size_t i);
std::size_t carrier_index(const FiniteMonoid& s, const Partition& a);
/// Generator g times carrier element i.
std::size_t carrier_left(const FiniteMonoid& s, int g, std::size_t i);

/// Pairs (x,y) of S^1 with xu = yu.
LeftCongruence theta(const Partition& u, const FiniteMonoid& s);

/// Least left congruence containing the given pairs of carrier indices.
LeftCongruence left_congruence_closure(const FiniteMonoid& s, std::span<const std::pair<std::size_t, std::size_t>> pairs);

/// Least equivalence containing every member; throws DegreeMismatch on
/// differing carriers and DomainError if the result is not left compatible.
LeftCongruence join_left_congruences(const FiniteMonoid& s, std::span<const LeftCongruence> parts);

bool is_left_compatible(const FiniteMonoid& s, const LeftCongruence& c);

/// The eight identities of the unary operation planar_range over all
/// elements and pairs of m, which must consist of planar full-domain
/// partitions.
CheckReport check_grrac(const FiniteMonoid& m);

}  // namespace diagcalc
