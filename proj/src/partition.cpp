#include "diagcalc/partition.hpp"

#include "text_format.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string_view>

namespace diagcalc {

namespace {

void check_degree(int n) {
  if (n < 0 || n > kMaxDegree) {
    throw DomainError("degree " + std::to_string(n) + " outside 0.." + std::to_string(kMaxDegree));
  }
}

// Union-find over at most 4 * kMaxDegree nodes, sized for block-level merging.
class SmallDisjointSet {
 public:
  explicit SmallDisjointSet(int size) {
    for (int i = 0; i < size; ++i) parent_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  }

  int find(int x) {
    auto ux = static_cast<std::size_t>(x);
    while (parent_[ux] != ux) {
      parent_[ux] = parent_[parent_[ux]];
      ux = parent_[ux];
    }
    return static_cast<int>(ux);
  }

  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (x > y) std::swap(x, y);
    parent_[static_cast<std::size_t>(y)] = static_cast<std::uint8_t>(x);
  }

 private:
  std::array<std::uint8_t, 4 * kMaxDegree> parent_{};
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<std::vector<int>> lists() {
    std::vector<std::vector<int>> out;
    expect('[');
    do {
      out.push_back(list());
    } while (accept(','));
    expect(']');
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return out;
  }

 private:
  std::vector<int> list() {
    std::vector<int> out;
    expect('[');
    do {
      out.push_back(integer());
    } while (accept(','));
    expect(']');
    return out;
  }

  int integer() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    if (value == 0) fail("vertex 0 is not allowed");
    return static_cast<int>(negative ? -value : value);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::vector<int>> detail::parse_int_lists(std::string_view text) { return Parser(text).lists(); }

Partition Partition::identity(int n) {
  check_degree(n);
  Partition a;
  a.n_ = static_cast<std::uint8_t>(n);
  a.blocks_ = static_cast<std::uint8_t>(n);
  for (int x = 0; x < n; ++x) {
    a.codes_[static_cast<std::size_t>(x)] = static_cast<Code>(x);
    a.codes_[static_cast<std::size_t>(n + x)] = static_cast<Code>(x);
  }
  return a;
}

Partition Partition::from_labels(int n, std::span<const int> labels) {
  check_degree(n);
  if (labels.size() != static_cast<std::size_t>(2 * n)) {
    throw DomainError("expected " + std::to_string(2 * n) + " labels");
  }
  Partition a;
  a.n_ = static_cast<std::uint8_t>(n);
  // Labels are arbitrary ints; map them by first occurrence.
  std::array<int, 2 * kMaxDegree> seen{};
  int next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int code = 0;
    while (code < next && seen[static_cast<std::size_t>(code)] != labels[i]) ++code;
    if (code == next) seen[static_cast<std::size_t>(next++)] = labels[i];
    a.codes_[i] = static_cast<Code>(code);
  }
  a.blocks_ = static_cast<std::uint8_t>(next);
  return a;
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  check_degree(n);
  std::vector<int> labels(static_cast<std::size_t>(2 * n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw DomainError("empty block");
    for (int v : blocks[b]) {
      if (v == 0 || v > n || v < -n) {
        throw DomainError("vertex " + std::to_string(v) + " outside the range of degree " + std::to_string(n));
      }
      std::size_t pos = v > 0 ? static_cast<std::size_t>(v - 1) : static_cast<std::size_t>(n - v - 1);
      if (labels[pos] != -1) throw DomainError("vertex " + std::to_string(v) + " repeated");
      labels[pos] = static_cast<int>(b);
    }
  }
  for (std::size_t pos = 0; pos < labels.size(); ++pos) {
    if (labels[pos] == -1) {
      int v = pos < static_cast<std::size_t>(n) ? static_cast<int>(pos) + 1 : -(static_cast<int>(pos) - n + 1);
      throw DomainError("vertex " + std::to_string(v) + " missing");
    }
  }
  return from_labels(n, labels);
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(blocks_);
  for (int x = 1; x <= n_; ++x) out[upper(x)].push_back(x);
  for (int x = 1; x <= n_; ++x) out[lower(x)].push_back(-x);
  return out;
}

std::size_t PartitionHash::operator()(const Partition& a) const noexcept {
  auto codes = a.codes();
  std::size_t h = 1469598103934665603ULL ^ static_cast<std::size_t>(a.degree());
  for (auto c : codes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Partition multiply(const Partition& a, const Partition& b) {
  const int n = a.degree();
  if (b.degree() != n) {
    throw DegreeMismatch("cannot multiply partitions of degrees " + std::to_string(n) + " and " +
                         std::to_string(b.degree()));
  }
  // Components of the product graph, merged at block granularity: block of a
  // containing x' meets the block of b containing x in the middle row.
  const int ka = a.block_count();
  SmallDisjointSet dsu(ka + b.block_count());
  for (int x = 1; x <= n; ++x) dsu.unite(a.lower(x), ka + b.upper(x));

  std::array<int, 2 * kMaxDegree> labels{};
  for (int x = 1; x <= n; ++x) {
    labels[static_cast<std::size_t>(x - 1)] = dsu.find(a.upper(x));
    labels[static_cast<std::size_t>(n + x - 1)] = dsu.find(ka + b.lower(x));
  }
  return Partition::from_labels(n, std::span<const int>(labels.data(), static_cast<std::size_t>(2 * n)));
}

Equivalence kernel(const Partition& a) {
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(a.degree()));
  for (int x = 1; x <= a.degree(); ++x) labels.push_back(a.upper(x));
  return Equivalence::from_labels(labels);
}

Equivalence cokernel(const Partition& a) {
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(a.degree()));
  for (int x = 1; x <= a.degree(); ++x) labels.push_back(a.lower(x));
  return Equivalence::from_labels(labels);
}

namespace {

struct RowMask {
  std::array<bool, 2 * kMaxDegree> in_upper{};
  std::array<bool, 2 * kMaxDegree> in_lower{};
};

RowMask row_masks(const Partition& a) {
  RowMask m;
  for (int x = 1; x <= a.degree(); ++x) {
    m.in_upper[a.upper(x)] = true;
    m.in_lower[a.lower(x)] = true;
  }
  return m;
}

}  // namespace

int rank(const Partition& a) {
  auto m = row_masks(a);
  int r = 0;
  for (int b = 0; b < a.block_count(); ++b) {
    if (m.in_upper[static_cast<std::size_t>(b)] && m.in_lower[static_cast<std::size_t>(b)]) ++r;
  }
  return r;
}

bool is_full_domain(const Partition& a) {
  auto m = row_masks(a);
  for (int x = 1; x <= a.degree(); ++x) {
    if (!m.in_lower[a.upper(x)]) return false;
  }
  return true;
}

StructureSummary structure(const Partition& a) {
  StructureSummary s;
  auto m = row_masks(a);
  for (int x = 1; x <= a.degree(); ++x) {
    if (m.in_lower[a.upper(x)]) s.dom.push_back(x);
    if (m.in_upper[a.lower(x)]) s.codom.push_back(x);
  }
  s.ker = kernel(a);
  s.coker = cokernel(a);
  s.rank = rank(a);
  return s;
}

bool is_planar(const Partition& a) {
  const int n = a.degree();
  // Boundary order 1..n, n'..1'; a partition is non-crossing iff a block can
  // only be revisited when it is the innermost open block.
  std::array<int, 2 * kMaxDegree> seq{};
  for (int x = 1; x <= n; ++x) seq[static_cast<std::size_t>(x - 1)] = a.upper(x);
  for (int x = n; x >= 1; --x) seq[static_cast<std::size_t>(2 * n - x)] = a.lower(x);
  std::array<int, 2 * kMaxDegree> last{};
  for (int i = 0; i < 2 * n; ++i) last[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])] = i;
  std::array<bool, 2 * kMaxDegree> opened{};
  std::array<int, 2 * kMaxDegree> stack{};
  int top = 0;
  for (int i = 0; i < 2 * n; ++i) {
    const auto b = static_cast<std::size_t>(seq[static_cast<std::size_t>(i)]);
    if (opened[b]) {
      if (top == 0 || stack[static_cast<std::size_t>(top - 1)] != static_cast<int>(b)) return false;
      if (last[b] == i) --top;
    } else {
      opened[b] = true;
      if (last[b] != i) stack[static_cast<std::size_t>(top++)] = static_cast<int>(b);
    }
  }
  return true;
}

Membership classify(const Partition& a) {
  const int n = a.degree();
  Membership m;
  auto s = structure(a);
  const bool dom_full = static_cast<int>(s.dom.size()) == n;
  const bool codom_full = static_cast<int>(s.codom.size()) == n;
  const bool ker_trivial = s.ker.class_count() == n;
  const bool coker_trivial = s.coker.class_count() == n;

  m.symmetric = s.rank == n;
  m.full_transformation = dom_full && coker_trivial;
  if (m.full_transformation) m.order_preserving = to_transformation(a).is_order_preserving();
  m.block_bijection = dom_full && codom_full;
  m.symmetric_inverse = ker_trivial && coker_trivial;
  m.full_domain = dom_full;
  m.planar = is_planar(a);
  m.planar_full_domain = m.planar && m.full_domain;

  // Block-wise conditions on transversals.
  auto blocks = a.blocks();
  bool uniform = m.block_bijection;
  bool identical_rows = m.block_bijection;
  bool min_max = m.planar_full_domain;
  for (const auto& block : blocks) {
    std::vector<int> up, low;
    for (int v : block) (v > 0 ? up : low).push_back(v > 0 ? v : -v);
    if (up.empty() || low.empty()) continue;
    std::sort(low.begin(), low.end());
    if (up.size() != low.size()) uniform = false;
    if (up != low) identical_rows = false;
    if (up.front() != low.front() || up.back() != low.back()) min_max = false;
  }
  m.uniform_block_bijection = uniform;
  m.semilattice = identical_rows;
  m.right_regular_band = min_max;
  return m;
}

bool is_canonical(const Partition& a) {
  int next = 0;
  for (auto c : a.codes()) {
    if (c > next) return false;
    if (c == next) ++next;
  }
  return next == a.block_count();
}

Transformation::Transformation(std::vector<int> image) : image_(std::move(image)) {
  const int n = degree();
  for (int v : image_) {
    if (v < 1 || v > n) throw DomainError("transformation image " + std::to_string(v) + " outside 1.." + std::to_string(n));
  }
}

Transformation Transformation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return Transformation(std::move(image));
}

bool Transformation::is_order_preserving() const {
  return std::is_sorted(image_.begin(), image_.end());
}

bool Transformation::is_permutation() const {
  std::vector<bool> hit(image_.size(), false);
  for (int v : image_) {
    if (hit[static_cast<std::size_t>(v - 1)]) return false;
    hit[static_cast<std::size_t>(v - 1)] = true;
  }
  return true;
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.degree() != g.degree()) throw DegreeMismatch("cannot compose transformations of different degrees");
  std::vector<int> image;
  image.reserve(f.image().size());
  for (int v : f.image()) image.push_back(g(v));
  return Transformation(std::move(image));
}

Partition from_transformation(const Transformation& f) {
  const int n = f.degree();
  // Block of x is labelled by its image xf; lower y' carries label y.
  std::vector<int> labels(static_cast<std::size_t>(2 * n));
  for (int x = 1; x <= n; ++x) {
    labels[static_cast<std::size_t>(x - 1)] = f(x);
    labels[static_cast<std::size_t>(n + x - 1)] = x;
  }
  return Partition::from_labels(n, labels);
}

Transformation to_transformation(const Partition& a) {
  const int n = a.degree();
  auto s = structure(a);
  if (static_cast<int>(s.dom.size()) != n || s.coker.class_count() != n) {
    throw DomainError("partition " + to_string(a) + " is not a full transformation");
  }
  std::vector<int> lower_of_block(static_cast<std::size_t>(a.block_count()), 0);
  for (int y = 1; y <= n; ++y) lower_of_block[a.lower(y)] = y;
  std::vector<int> image;
  image.reserve(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) image.push_back(lower_of_block[a.upper(x)]);
  return Transformation(std::move(image));
}

Partition parse_partition(std::string_view text) {
  auto blocks = detail::parse_int_lists(text);
  int n = 0;
  for (const auto& b : blocks) {
    for (int v : b) n = std::max(n, v < 0 ? -v : v);
  }
  if (n > kMaxDegree) throw DomainError("degree " + std::to_string(n) + " exceeds " + std::to_string(kMaxDegree));
  try {
    return Partition::from_blocks(n, blocks);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string to_string(const Partition& a) {
  std::ostringstream os;
  os << '[';
  auto blocks = a.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) os << ',';
    os << '[';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) os << ',';
      os << blocks[b][i];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& a) { return os << to_string(a); }

std::string to_string(const Transformation& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.image().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f.image()[i]);
  }
  return out + "]";
}

}  // namespace diagcalc
