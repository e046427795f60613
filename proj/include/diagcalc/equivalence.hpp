#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace diagcalc {

class Partition;
class Transformation;

/// An equivalence relation on {1..n}, stored as a restricted-growth string:
/// class indices appear in order of first occurrence, so equality of the
/// encoding is equality of relations.
class Equivalence {
 public:
  Equivalence() = default;

  /// The trivial relation (all classes singletons).
  static Equivalence identity(int n);
  /// The universal relation (one class).
  static Equivalence universal(int n);
  /// Canonicalizes arbitrary class labels, one per point 1..n.
  static Equivalence from_labels(std::span<const int> labels);
  /// Builds from a list of classes over 1..n; every point must occur once.
  static Equivalence from_classes(int n, const std::vector<std::vector<int>>& classes);

  int degree() const noexcept { return static_cast<int>(class_of_.size()); }
  int class_count() const noexcept { return classes_; }
  /// Class index of point x (1-based).
  int class_of(int x) const { return class_of_.at(static_cast<std::size_t>(x - 1)); }
  bool related(int x, int y) const { return class_of(x) == class_of(y); }
  std::span<const std::uint8_t> labels() const noexcept { return class_of_; }

  /// Classes in canonical order, members ascending.
  std::vector<std::vector<int>> classes() const;
  std::vector<int> class_members(int x) const;

  friend bool operator==(const Equivalence&, const Equivalence&) = default;
  friend auto operator<=>(const Equivalence&, const Equivalence&) = default;

 private:
  std::vector<std::uint8_t> class_of_;
  int classes_ = 0;
};

struct EquivalenceHash {
  std::size_t operator()(const Equivalence& e) const noexcept;
};

/// Least equivalence containing both.
Equivalence join(const Equivalence& e, const Equivalence& f);

/// The equivalence whose only non-trivial class is {i,j}.
Equivalence atom(int i, int j, int n);

/// Every pair of classes is separated or nested.
bool is_planar(const Equivalence& e);
/// Every class is an interval.
bool is_convex(const Equivalence& e);

/// Next element of the class of x above x, or x itself at the class maximum.
int successor(const Equivalence& e, int x);

/// The convex kernel of d_of(e): classes [min B, max B] over un-nested classes B.
Equivalence ker_hat(const Equivalence& e);

/// Upper-row image of an equivalence as a partition with every block transversal.
Partition embed(const Equivalence& e);

/// The idempotent whose cokernel is the planar equivalence e and whose
/// transversals cap each un-nested class by its spanning interval.
Partition d_of(const Equivalence& e);

/// Each point sent to the minimum of its (interval) class.
Transformation f_of_convex(const Equivalence& e);

/// A word over the letters h_{ij}, i < j.
struct BlockWord {
  std::vector<std::pair<int, int>> letters;

  bool empty() const noexcept { return letters.empty(); }
  std::size_t size() const noexcept { return letters.size(); }
  friend bool operator==(const BlockWord&, const BlockWord&) = default;
};

std::string to_string(const BlockWord& w);
Partition evaluate(const BlockWord& w, int n);

/// Normal form h_{1 k_1} ... h_{n k_n} with k_x the successor of x,
/// identity letters dropped.
BlockWord w_word(const Equivalence& e);

/// w_word(e) cut at the interval boundaries of ker_hat(e); empty bricks are
/// omitted.
std::vector<BlockWord> bricks(const Equivalence& e);

enum class EquivalenceFilter { all, planar, convex };

/// Restartable enumerator over equivalences in lexicographic restricted-growth
/// order.
class EquivalenceEnumerator {
 public:
  EquivalenceEnumerator(int n, EquivalenceFilter filter);
  std::optional<Equivalence> next();
  void reset();

 private:
  bool advance();

  int n_;
  EquivalenceFilter filter_;
  std::vector<int> rgs_;
  std::vector<int> prefix_max_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Equivalence> enumerate_equivalences(int n, EquivalenceFilter filter = EquivalenceFilter::all);

std::string to_string(const Equivalence& e);
Equivalence parse_equivalence(std::string_view text);
std::ostream& operator<<(std::ostream& os, const Equivalence& e);

}  // namespace diagcalc
