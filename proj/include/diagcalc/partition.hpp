#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "diagcalc/equivalence.hpp"

namespace diagcalc {

/// Largest supported degree. Partitions are stored inline.
inline constexpr int kMaxDegree = 32;

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegreeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A set partition of {1..n} u {1'..n'}.
///
/// Positions 0..n-1 hold the block indices of the upper vertices 1..n and
/// positions n..2n-1 those of the lower vertices 1'..n'. Block indices are
/// numbered by first occurrence in that order, which makes the encoding
/// canonical: two partitions are equal iff their encodings are.
class Partition {
 public:
  using Code = std::uint8_t;

  Partition() = default;

  static Partition identity(int n);
  /// Canonicalizes arbitrary block labels given for the 2n positions.
  static Partition from_labels(int n, std::span<const int> labels);
  /// Blocks as signed vertex lists (x for upper x, -x for lower x').
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int degree() const noexcept { return n_; }
  int block_count() const noexcept { return blocks_; }

  /// Block index of upper vertex x (1-based).
  Code upper(int x) const noexcept { return codes_[static_cast<std::size_t>(x - 1)]; }
  /// Block index of lower vertex x' (1-based).
  Code lower(int x) const noexcept { return codes_[static_cast<std::size_t>(n_ + x - 1)]; }

  std::span<const Code> codes() const noexcept {
    return {codes_.data(), static_cast<std::size_t>(2 * n_)};
  }

  /// Blocks in canonical order as signed vertex lists, upper vertices first.
  std::vector<std::vector<int>> blocks() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::array<Code, 2 * kMaxDegree> codes_{};
  std::uint8_t n_ = 0;
  std::uint8_t blocks_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& a) const noexcept;
};

/// Product via the three-row product graph.
Partition multiply(const Partition& a, const Partition& b);
inline Partition operator*(const Partition& a, const Partition& b) { return multiply(a, b); }

/// (Co)domain, (co)kernel and rank.
struct StructureSummary {
  std::vector<int> dom;
  std::vector<int> codom;
  Equivalence ker;
  Equivalence coker;
  int rank = 0;
};

StructureSummary structure(const Partition& a);
Equivalence kernel(const Partition& a);
Equivalence cokernel(const Partition& a);
int rank(const Partition& a);
bool is_full_domain(const Partition& a);

/// Non-crossing with respect to the boundary order 1..n, n'..1'.
bool is_planar(const Partition& a);

/// Membership of a partition in the named submonoids of P_n.
struct Membership {
  bool symmetric = false;               // S_n
  bool full_transformation = false;     // T_n
  bool order_preserving = false;        // O_n
  bool semilattice = false;             // E_n
  bool uniform_block_bijection = false; // F_n
  bool symmetric_inverse = false;       // I_n
  bool block_bijection = false;         // J_n
  bool full_domain = false;             // P_n^fd
  bool planar = false;                  // PP_n
  bool planar_full_domain = false;      // PP_n^fd
  bool right_regular_band = false;      // D_n
};

Membership classify(const Partition& a);

/// A map {1..n} -> {1..n}, composed left to right: x(fg) = (xf)g.
class Transformation {
 public:
  Transformation() = default;
  explicit Transformation(std::vector<int> image);

  static Transformation identity(int n);

  int degree() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_.at(static_cast<std::size_t>(x - 1)); }
  const std::vector<int>& image() const noexcept { return image_; }

  bool is_order_preserving() const;
  bool is_permutation() const;

  friend bool operator==(const Transformation&, const Transformation&) = default;
  friend auto operator<=>(const Transformation&, const Transformation&) = default;

 private:
  std::vector<int> image_;
};

Transformation compose(const Transformation& f, const Transformation& g);

Partition from_transformation(const Transformation& f);
/// Requires a in T_n.
Transformation to_transformation(const Partition& a);

Partition parse_partition(std::string_view text);
std::string to_string(const Partition& a);
std::ostream& operator<<(std::ostream& os, const Partition& a);
std::string to_string(const Transformation& f);

/// Upper-row and lower-row validator for the canonical-form invariants.
bool is_canonical(const Partition& a);

}  // namespace diagcalc
