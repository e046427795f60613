#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "diagcalc/families.hpp"
#include "diagcalc/finite_monoid.hpp"
#include "diagcalc/partition.hpp"
#include "diagcalc/report.hpp"

namespace diagcalc {

using Word = std::vector<std::string>;

std::string to_string(const Word& w);
/// Whitespace-separated symbols.
Word parse_word(std::string_view text);

struct Relation {
  Word lhs;
  Word rhs;
  std::string label;
};

enum class Schema { sing_xr, full_yq, planar_zo, dn, en, sing_tn, tn, fn, on, planar_intermediate };

std::optional<Schema> parse_schema(std::string_view name);
std::string schema_name(Schema s);
std::vector<Schema> all_schemas();
/// The concrete monoid a schema presents.
Family schema_target(Schema s);

struct Presentation {
  MonoidKind kind = MonoidKind::monoid;
  std::vector<std::string> alphabet;
  std::vector<Relation> relations;
  std::string schema;
  int degree = 0;

  std::optional<std::size_t> letter(const std::string& symbol) const;
};

/// Fully expanded relations at degree n >= 2. Relations whose letters do
/// not exist at this degree are left out, as are trivial and repeated ones.
Presentation schema(Schema s, int n);

nlohmann::ordered_json to_json(const Presentation& p);

/// Symbol to partition, all of one degree, in alphabet order.
class GeneratorAssignment {
 public:
  GeneratorAssignment() = default;
  explicit GeneratorAssignment(int degree) : degree_(degree) {}

  void assign(const std::string& symbol, const Partition& image);
  const Partition& image(const std::string& symbol) const;
  bool covers(const Presentation& p) const;

  int degree() const noexcept { return degree_; }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  const std::vector<Partition>& images() const noexcept { return images_; }

  std::vector<Generator> generators() const;

 private:
  int degree_ = 0;
  std::vector<std::string> symbols_;
  std::vector<Partition> images_;
  std::unordered_map<std::string, std::size_t> index_;
};

GeneratorAssignment standard_assignment(Schema s, int n);

/// Left-to-right product of images; the empty word gives the identity.
Partition eval_word(const GeneratorAssignment& asg, const Word& w);

enum class DerivedKind { shift, shift_inverse, epsilon, tau, alpha, beta };

/// Named words over s_i, e, t (shift, epsilon, tau) or over f_i, g_i, h_i
/// (alpha, beta). tau with i > j gives the word for the reverse collapse.
Word derived_word(DerivedKind kind, int i, int j, int n);

CheckReport check_soundness(const Presentation& p, const GeneratorAssignment& asg);

struct EnumerationResult {
  enum class Status { completed, exhausted };
  Status status = Status::exhausted;
  std::size_t size = 0;
  /// Right Cayley table over the elements, row-major by letter; for the
  /// semigroup kind the elements exclude the root.
  std::vector<std::uint32_t> table;
  std::vector<Word> words;
  std::size_t nodes_used = 0;
};

/// Todd-Coxeter enumeration of the presented monoid or semigroup. An
/// exhausted result never reports a size.
EnumerationResult enumerate_presented(const Presentation& p, std::size_t budget = kDefaultBudget);

/// Soundness, equality of the image closure with the independently built
/// target, and equality of the presented and concrete sizes.
CheckReport verify_presentation(Schema s, int n, std::size_t budget = kDefaultBudget);

enum class FactorMode { tn_en, on_dn };

/// a = left * right with right the range projection (tn_en) or planar range
/// (on_dn) and left a map sending each upper point to the least lower point
/// of its block.
std::pair<Partition, Partition> factor_product(const Partition& a, FactorMode mode);

}  // namespace diagcalc
