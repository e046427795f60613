#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "diagcalc/partition.hpp"

namespace diagcalc {

inline constexpr std::size_t kDefaultBudget = 2'000'000;

enum class MonoidKind { monoid, semigroup };

struct Generator {
  std::string symbol;
  Partition value;
};

/// A word as a sequence of generator positions.
using LetterWord = std::vector<int>;

/// The closure of a labeled generating set inside P_n.
///
/// Elements are numbered in breadth-first discovery order, so the stored
/// representative of each element is its shortlex-least word over the
/// generators in the order supplied. For the monoid kind element 0 is the
/// identity.
class FiniteMonoid {
 public:
  using Index = std::uint32_t;

  std::size_t size() const noexcept { return elements_.size(); }
  int degree() const noexcept { return degree_; }
  MonoidKind kind() const noexcept { return kind_; }
  /// False when the budget ran out before closure.
  bool complete() const noexcept { return complete_; }

  const std::vector<Partition>& elements() const noexcept { return elements_; }
  const Partition& at(std::size_t i) const { return elements_.at(i); }
  std::optional<Index> index_of(const Partition& a) const;
  bool contains(const Partition& a) const { return index_of(a).has_value(); }

  /// Index of the identity when it lies in the closure.
  std::optional<Index> identity_index() const noexcept { return identity_; }

  const std::vector<Generator>& generators() const noexcept { return generators_; }
  Index generator_element(int g) const { return generator_elements_.at(static_cast<std::size_t>(g)); }

  /// Element i times generator g.
  Index right(Index i, int g) const { return right_[i * generators_.size() + static_cast<std::size_t>(g)]; }
  /// Generator g times element i. The left table is built on first use.
  Index left(int g, Index i) const { return left_table()[i * generators_.size() + static_cast<std::size_t>(g)]; }
  const std::vector<Index>& left_table() const;

  /// Product of two elements, traced through the right Cayley table.
  Index product(Index i, Index j) const;

  LetterWord rep_word(Index i) const;
  std::string word_text(const LetterWord& w) const;

  /// Evaluates a word directly through the generator values.
  Partition evaluate(const LetterWord& w) const;

 private:
  friend FiniteMonoid closure(std::vector<Generator> generators, int degree, MonoidKind kind, std::size_t budget);

  int degree_ = 0;
  MonoidKind kind_ = MonoidKind::monoid;
  bool complete_ = true;
  std::vector<Generator> generators_;
  std::vector<Index> generator_elements_;
  std::vector<Partition> elements_;
  std::unordered_map<Partition, Index, PartitionHash> index_;
  std::optional<Index> identity_;
  std::vector<Index> right_;
  // Parent element and last letter of each rep word; roots have parent == self.
  std::vector<Index> parent_;
  std::vector<int> last_letter_;

  mutable std::shared_ptr<std::mutex> left_guard_ = std::make_shared<std::mutex>();
  mutable std::shared_ptr<const std::vector<Index>> left_;
};

/// Breadth-first closure with canonical-form interning. When the element
/// count would exceed budget the result is marked incomplete.
FiniteMonoid closure(std::vector<Generator> generators, int degree, MonoidKind kind = MonoidKind::monoid,
                     std::size_t budget = kDefaultBudget);

/// Green's R, L and J classes, numbered by first occurrence in element order.
struct GreenData {
  std::vector<int> r_class;
  std::vector<int> l_class;
  std::vector<int> j_class;
  int r_count = 0;
  int l_count = 0;
  int j_count = 0;
};

GreenData green(const FiniteMonoid& m);

struct UnitsSplit {
  std::vector<FiniteMonoid::Index> units;
  std::vector<FiniteMonoid::Index> singular;
  bool singular_is_ideal = false;
};

UnitsSplit units_and_singular(const FiniteMonoid& m);

enum class BandType { not_band, band, right_regular_band, semilattice };
std::string to_string(BandType t);
BandType band_type(const FiniteMonoid& m);

/// Stored representative word of a; throws DomainError if a is not in m.
LetterWord word_for(const FiniteMonoid& m, const Partition& a);

nlohmann::ordered_json cayley_json(const FiniteMonoid& m);
std::string cayley_dot(const FiniteMonoid& m);

}  // namespace diagcalc
