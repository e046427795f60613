#include "diagcalc/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "diagcalc/partition.hpp"
#include "text_format.hpp"

namespace diagcalc {

namespace {

struct Span {
  int lo;
  int hi;
};

// Minimum and maximum of every class, indexed by class.
std::vector<Span> class_spans(const Equivalence& e) {
  std::vector<Span> spans(static_cast<std::size_t>(e.class_count()), Span{0, 0});
  for (int x = e.degree(); x >= 1; --x) spans[static_cast<std::size_t>(e.class_of(x))].lo = x;
  for (int x = 1; x <= e.degree(); ++x) spans[static_cast<std::size_t>(e.class_of(x))].hi = x;
  return spans;
}

void require_planar(const Equivalence& e, const char* what) {
  if (!is_planar(e)) throw DomainError(std::string(what) + " requires a planar equivalence, got " + to_string(e));
}

}  // namespace

Equivalence Equivalence::identity(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(labels);
}

Equivalence Equivalence::universal(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  return from_labels(labels);
}

Equivalence Equivalence::from_labels(std::span<const int> labels) {
  if (labels.size() > static_cast<std::size_t>(kMaxDegree)) throw DomainError("equivalence degree too large");
  Equivalence e;
  e.class_of_.resize(labels.size());
  std::vector<int> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find(seen.begin(), seen.end(), labels[i]);
    if (it == seen.end()) {
      seen.push_back(labels[i]);
      it = seen.end() - 1;
    }
    e.class_of_[i] = static_cast<std::uint8_t>(it - seen.begin());
  }
  e.classes_ = static_cast<int>(seen.size());
  return e;
}

Equivalence Equivalence::from_classes(int n, const std::vector<std::vector<int>>& classes) {
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int x : classes[c]) {
      if (x < 1 || x > n) throw DomainError("point " + std::to_string(x) + " outside 1.." + std::to_string(n));
      if (labels[static_cast<std::size_t>(x - 1)] != -1) throw DomainError("point " + std::to_string(x) + " repeated");
      labels[static_cast<std::size_t>(x - 1)] = static_cast<int>(c);
    }
  }
  for (int x = 1; x <= n; ++x) {
    if (labels[static_cast<std::size_t>(x - 1)] == -1) throw DomainError("point " + std::to_string(x) + " missing");
  }
  return from_labels(labels);
}

std::vector<std::vector<int>> Equivalence::classes() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(classes_));
  for (int x = 1; x <= degree(); ++x) out[static_cast<std::size_t>(class_of(x))].push_back(x);
  return out;
}

std::vector<int> Equivalence::class_members(int x) const {
  std::vector<int> out;
  const int c = class_of(x);
  for (int y = 1; y <= degree(); ++y) {
    if (class_of(y) == c) out.push_back(y);
  }
  return out;
}

std::size_t EquivalenceHash::operator()(const Equivalence& e) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto c : e.labels()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h ^ static_cast<std::size_t>(e.degree());
}

Equivalence join(const Equivalence& e, const Equivalence& f) {
  if (e.degree() != f.degree()) throw DegreeMismatch("join of equivalences of different degrees");
  const int n = e.degree();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
  };
  // Link each point to the first point of its class in either relation.
  for (const Equivalence* g : {&e, &f}) {
    std::vector<int> first(static_cast<std::size_t>(g->class_count()), -1);
    for (int x = 0; x < n; ++x) {
      auto& slot = first[static_cast<std::size_t>(g->class_of(x + 1))];
      if (slot < 0) {
        slot = x;
      } else {
        unite(slot, x);
      }
    }
  }
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) labels[static_cast<std::size_t>(x)] = find(x);
  return Equivalence::from_labels(labels);
}

Equivalence atom(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n)) {
    throw DomainError("atom(" + std::to_string(i) + "," + std::to_string(j) + ") outside 1 <= i < j <= " +
                      std::to_string(n));
  }
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 0);
  labels[static_cast<std::size_t>(j - 1)] = i - 1;
  return Equivalence::from_labels(labels);
}

bool is_planar(const Equivalence& e) {
  // Classes pairwise separated or nested is the non-crossing condition on
  // the line: a revisited class must be the innermost open one.
  const int n = e.degree();
  auto spans = class_spans(e);
  std::vector<int> stack;
  for (int x = 1; x <= n; ++x) {
    const int c = e.class_of(x);
    const auto& s = spans[static_cast<std::size_t>(c)];
    if (s.lo == x) {
      if (s.hi != x) stack.push_back(c);
    } else {
      if (stack.empty() || stack.back() != c) return false;
      if (s.hi == x) stack.pop_back();
    }
  }
  return true;
}

bool is_convex(const Equivalence& e) {
  // Classes are numbered by first occurrence, so intervals appear as a
  // non-decreasing label sequence.
  for (int x = 2; x <= e.degree(); ++x) {
    if (e.class_of(x) < e.class_of(x - 1)) return false;
  }
  return true;
}

int successor(const Equivalence& e, int x) {
  if (x < 1 || x > e.degree()) throw DomainError("point " + std::to_string(x) + " out of range");
  for (int y = x + 1; y <= e.degree(); ++y) {
    if (e.class_of(y) == e.class_of(x)) return y;
  }
  return x;
}

Equivalence ker_hat(const Equivalence& e) {
  require_planar(e, "ker_hat");
  const int n = e.degree();
  auto spans = class_spans(e);
  // Merge class spans; for a planar relation the maximal spans are those of
  // the un-nested classes and they tile 1..n.
  std::vector<int> reach(static_cast<std::size_t>(n + 1), 0);
  for (const auto& s : spans) reach[static_cast<std::size_t>(s.lo)] = std::max(reach[static_cast<std::size_t>(s.lo)], s.hi);
  std::vector<int> labels(static_cast<std::size_t>(n));
  int interval = -1;
  int end = 0;
  for (int x = 1; x <= n; ++x) {
    if (x > end) ++interval;
    end = std::max(end, reach[static_cast<std::size_t>(x)]);
    labels[static_cast<std::size_t>(x - 1)] = interval;
  }
  return Equivalence::from_labels(labels);
}

Partition embed(const Equivalence& e) {
  const int n = e.degree();
  std::vector<int> labels(static_cast<std::size_t>(2 * n));
  for (int x = 1; x <= n; ++x) {
    labels[static_cast<std::size_t>(x - 1)] = e.class_of(x);
    labels[static_cast<std::size_t>(n + x - 1)] = e.class_of(x);
  }
  return Partition::from_labels(n, labels);
}

Partition d_of(const Equivalence& e) {
  require_planar(e, "d_of");
  const int n = e.degree();
  const Equivalence hat = ker_hat(e);
  auto spans = class_spans(e);
  auto hat_spans = class_spans(hat);
  std::vector<int> labels(static_cast<std::size_t>(2 * n));
  for (int x = 1; x <= n; ++x) labels[static_cast<std::size_t>(x - 1)] = hat.class_of(x);
  for (int x = 1; x <= n; ++x) {
    const int c = e.class_of(x);
    const auto& s = spans[static_cast<std::size_t>(c)];
    const auto& h = hat_spans[static_cast<std::size_t>(hat.class_of(s.lo))];
    const bool unnested = s.lo == h.lo && s.hi == h.hi;
    labels[static_cast<std::size_t>(n + x - 1)] = unnested ? hat.class_of(x) : hat.class_count() + c;
  }
  return Partition::from_labels(n, labels);
}

Transformation f_of_convex(const Equivalence& e) {
  if (!is_convex(e)) throw DomainError("f_of_convex requires a convex equivalence, got " + to_string(e));
  auto spans = class_spans(e);
  std::vector<int> image;
  image.reserve(static_cast<std::size_t>(e.degree()));
  for (int x = 1; x <= e.degree(); ++x) image.push_back(spans[static_cast<std::size_t>(e.class_of(x))].lo);
  return Transformation(std::move(image));
}

std::string to_string(const BlockWord& w) {
  if (w.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += "h_" + std::to_string(w.letters[i].first) + "_" + std::to_string(w.letters[i].second);
  }
  return out;
}

Partition evaluate(const BlockWord& w, int n) {
  Partition out = Partition::identity(n);
  for (const auto& [i, j] : w.letters) out = out * d_of(atom(i, j, n));
  return out;
}

BlockWord w_word(const Equivalence& e) {
  require_planar(e, "w_word");
  BlockWord w;
  for (int x = 1; x <= e.degree(); ++x) {
    const int k = successor(e, x);
    if (k != x) w.letters.emplace_back(x, k);
  }
  return w;
}

std::vector<BlockWord> bricks(const Equivalence& e) {
  const BlockWord w = w_word(e);
  const Equivalence hat = ker_hat(e);
  std::vector<BlockWord> out(static_cast<std::size_t>(hat.class_count()));
  for (const auto& letter : w.letters) out[static_cast<std::size_t>(hat.class_of(letter.first))].letters.push_back(letter);
  std::erase_if(out, [](const BlockWord& b) { return b.empty(); });
  return out;
}

EquivalenceEnumerator::EquivalenceEnumerator(int n, EquivalenceFilter filter) : n_(n), filter_(filter) {
  if (n < 0 || n > kMaxDegree) throw DomainError("enumeration degree out of range");
  reset();
}

void EquivalenceEnumerator::reset() {
  rgs_.assign(static_cast<std::size_t>(n_), 0);
  prefix_max_.assign(static_cast<std::size_t>(n_), 0);
  started_ = false;
  done_ = false;
}

bool EquivalenceEnumerator::advance() {
  if (!started_) {
    started_ = true;
    return true;
  }
  // Rightmost position that can still grow.
  for (int i = n_ - 1; i >= 1; --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (rgs_[ui] <= prefix_max_[ui - 1]) {
      ++rgs_[ui];
      prefix_max_[ui] = std::max(prefix_max_[ui - 1], rgs_[ui]);
      for (auto k = ui + 1; k < rgs_.size(); ++k) {
        rgs_[k] = 0;
        prefix_max_[k] = prefix_max_[k - 1];
      }
      return true;
    }
  }
  return false;
}

std::optional<Equivalence> EquivalenceEnumerator::next() {
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    Equivalence e = Equivalence::from_labels(rgs_);
    switch (filter_) {
      case EquivalenceFilter::all:
        return e;
      case EquivalenceFilter::planar:
        if (is_planar(e)) return e;
        break;
      case EquivalenceFilter::convex:
        if (is_convex(e)) return e;
        break;
    }
  }
  return std::nullopt;
}

std::vector<Equivalence> enumerate_equivalences(int n, EquivalenceFilter filter) {
  std::vector<Equivalence> out;
  EquivalenceEnumerator it(n, filter);
  while (auto e = it.next()) out.push_back(std::move(*e));
  return out;
}

std::string to_string(const Equivalence& e) {
  std::ostringstream os;
  os << '[';
  auto cls = e.classes();
  for (std::size_t c = 0; c < cls.size(); ++c) {
    if (c) os << ',';
    os << '[';
    for (std::size_t i = 0; i < cls[c].size(); ++i) {
      if (i) os << ',';
      os << cls[c][i];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Equivalence parse_equivalence(std::string_view text) {
  auto classes = detail::parse_int_lists(text);
  int n = 0;
  for (const auto& c : classes) {
    for (int x : c) {
      if (x < 0) throw DomainError("equivalence points must be positive");
      n = std::max(n, x);
    }
  }
  return Equivalence::from_classes(n, classes);
}

std::ostream& operator<<(std::ostream& os, const Equivalence& e) { return os << to_string(e); }

}  // namespace diagcalc
