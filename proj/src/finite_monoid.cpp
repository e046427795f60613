#include "diagcalc/finite_monoid.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

namespace diagcalc {

namespace {

constexpr FiniteMonoid::Index kUnset = std::numeric_limits<FiniteMonoid::Index>::max();

// Strongly connected components of a graph on 0..n-1 given by an edge
// enumerator; labels are numbered by first occurrence in vertex order.
std::pair<std::vector<int>, int> components(std::size_t n, const std::function<void(std::size_t, std::vector<std::size_t>&)>& out) {
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  struct Frame {
    std::size_t v;
    std::vector<std::size_t> succ;
    std::size_t next;
  };
  int counter = 0;
  int comps = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<Frame> frames;
    auto open = [&](std::size_t v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = 1;
      Frame f{v, {}, 0};
      out(v, f.succ);
      frames.push_back(std::move(f));
    };
    open(root);
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < f.succ.size()) {
        const std::size_t w = f.succ[f.next++];
        if (index[w] < 0) {
          open(w);
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      if (low[v] == index[v]) {
        for (;;) {
          const std::size_t w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = comps;
          if (w == v) break;
        }
        ++comps;
      }
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
    }
  }
  std::vector<int> relabel(static_cast<std::size_t>(comps), -1);
  int next = 0;
  for (auto& c : comp) {
    auto& r = relabel[static_cast<std::size_t>(c)];
    if (r < 0) r = next++;
    c = r;
  }
  return {comp, comps};
}

}  // namespace

std::optional<FiniteMonoid::Index> FiniteMonoid::index_of(const Partition& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<FiniteMonoid::Index>& FiniteMonoid::left_table() const {
  std::lock_guard lock(*left_guard_);
  if (!left_) {
    const std::size_t gens = generators_.size();
    auto table = std::make_shared<std::vector<Index>>(elements_.size() * gens, kUnset);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (std::size_t g = 0; g < gens; ++g) {
        auto hit = index_.find(generators_[g].value * elements_[i]);
        if (hit != index_.end()) (*table)[i * gens + g] = hit->second;
      }
    }
    left_ = std::move(table);
  }
  return *left_;
}

FiniteMonoid::Index FiniteMonoid::product(Index i, Index j) const {
  thread_local std::vector<int> letters;
  letters.clear();
  for (Index k = j;; k = parent_[k]) {
    if (last_letter_[k] >= 0) letters.push_back(last_letter_[k]);
    if (parent_[k] == k) break;
  }
  Index out = i;
  for (auto it = letters.rbegin(); it != letters.rend() && out != kUnset; ++it) out = right(out, *it);
  return out;
}

LetterWord FiniteMonoid::rep_word(Index i) const {
  LetterWord w;
  for (Index k = i;; k = parent_[k]) {
    if (last_letter_[k] >= 0) w.push_back(last_letter_[k]);
    if (parent_[k] == k) break;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::string FiniteMonoid::word_text(const LetterWord& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += generators_.at(static_cast<std::size_t>(w[i])).symbol;
  }
  return out;
}

Partition FiniteMonoid::evaluate(const LetterWord& w) const {
  Partition out = Partition::identity(degree_);
  for (int g : w) out = out * generators_.at(static_cast<std::size_t>(g)).value;
  return out;
}

FiniteMonoid closure(std::vector<Generator> generators, int degree, MonoidKind kind, std::size_t budget) {
  for (const auto& g : generators) {
    if (g.value.degree() != degree) throw DegreeMismatch("generator " + g.symbol + " has the wrong degree");
  }
  FiniteMonoid m;
  m.degree_ = degree;
  m.kind_ = kind;
  m.generators_ = std::move(generators);
  const std::size_t gens = m.generators_.size();

  auto intern = [&](const Partition& a, FiniteMonoid::Index parent, int letter) -> FiniteMonoid::Index {
    auto [it, fresh] = m.index_.try_emplace(a, static_cast<FiniteMonoid::Index>(m.elements_.size()));
    if (!fresh) return it->second;
    if (m.elements_.size() >= budget) {
      m.index_.erase(it);
      m.complete_ = false;
      return kUnset;
    }
    const auto self = it->second;
    m.elements_.push_back(a);
    m.parent_.push_back(parent == kUnset ? self : parent);
    m.last_letter_.push_back(letter);
    m.right_.resize(m.elements_.size() * gens, kUnset);
    return self;
  };

  if (kind == MonoidKind::monoid) intern(Partition::identity(degree), kUnset, -1);
  for (std::size_t g = 0; g < gens; ++g) {
    const auto idx = kind == MonoidKind::monoid ? kUnset : intern(m.generators_[g].value, kUnset, static_cast<int>(g));
    m.generator_elements_.push_back(idx);
  }

  for (std::size_t i = 0; i < m.elements_.size() && m.complete_; ++i) {
    const Partition a = m.elements_[i];
    for (std::size_t g = 0; g < gens; ++g) {
      const auto idx = intern(a * m.generators_[g].value, static_cast<FiniteMonoid::Index>(i), static_cast<int>(g));
      if (idx == kUnset) break;
      m.right_[i * gens + g] = idx;
    }
  }
  if (kind == MonoidKind::monoid) {
    for (std::size_t g = 0; g < gens && m.complete_; ++g) m.generator_elements_[g] = m.right_[g];
  }
  m.identity_ = m.index_of(Partition::identity(degree));
  return m;
}

GreenData green(const FiniteMonoid& m) {
  const std::size_t n = m.size();
  const std::size_t gens = m.generators().size();
  const auto& left = m.left_table();
  GreenData g;
  auto right_edges = [&](std::size_t v, std::vector<std::size_t>& out) {
    for (std::size_t k = 0; k < gens; ++k) out.push_back(m.right(static_cast<FiniteMonoid::Index>(v), static_cast<int>(k)));
  };
  auto left_edges = [&](std::size_t v, std::vector<std::size_t>& out) {
    for (std::size_t k = 0; k < gens; ++k) out.push_back(left[v * gens + k]);
  };
  std::tie(g.r_class, g.r_count) = components(n, right_edges);
  std::tie(g.l_class, g.l_count) = components(n, left_edges);
  std::tie(g.j_class, g.j_count) = components(n, [&](std::size_t v, std::vector<std::size_t>& out) {
    right_edges(v, out);
    left_edges(v, out);
  });
  return g;
}

UnitsSplit units_and_singular(const FiniteMonoid& m) {
  UnitsSplit split;
  const auto one = m.identity_index();
  std::vector<char> is_unit(m.size(), 0);
  if (one) {
    // In a finite monoid a right-invertible element is a unit, and the
    // right-invertible elements form the R-class of the identity.
    const GreenData g = green(m);
    for (std::size_t i = 0; i < m.size(); ++i) is_unit[i] = g.r_class[i] == g.r_class[*one];
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    (is_unit[i] ? split.units : split.singular).push_back(static_cast<FiniteMonoid::Index>(i));
  }
  const std::size_t gens = m.generators().size();
  const auto& left = m.left_table();
  split.singular_is_ideal = std::all_of(split.singular.begin(), split.singular.end(), [&](FiniteMonoid::Index s) {
    for (std::size_t k = 0; k < gens; ++k) {
      if (is_unit[m.right(s, static_cast<int>(k))] || is_unit[left[s * gens + k]]) return false;
    }
    return true;
  });
  return split;
}

std::string to_string(BandType t) {
  switch (t) {
    case BandType::not_band:
      return "not-band";
    case BandType::band:
      return "band";
    case BandType::right_regular_band:
      return "right-regular-band";
    case BandType::semilattice:
      return "semilattice";
  }
  return "unknown";
}

BandType band_type(const FiniteMonoid& m) {
  using Index = FiniteMonoid::Index;
  const auto n = static_cast<Index>(m.size());
  for (Index x = 0; x < n; ++x) {
    if (m.product(x, x) != x) return BandType::not_band;
  }
  bool right_regular = true;
  bool commutative = true;
  for (Index x = 0; x < n && (right_regular || commutative); ++x) {
    for (Index y = 0; y < n; ++y) {
      const Index xy = m.product(x, y);
      const Index yx = m.product(y, x);
      if (xy != yx) commutative = false;
      if (m.product(xy, x) != yx) right_regular = false;
    }
  }
  if (commutative) return BandType::semilattice;
  return right_regular ? BandType::right_regular_band : BandType::band;
}

LetterWord word_for(const FiniteMonoid& m, const Partition& a) {
  const auto i = m.index_of(a);
  if (!i) throw DomainError(to_string(a) + " is not an element of the monoid");
  return m.rep_word(*i);
}

nlohmann::ordered_json cayley_json(const FiniteMonoid& m) {
  nlohmann::ordered_json j;
  j["degree"] = m.degree();
  j["kind"] = m.kind() == MonoidKind::monoid ? "monoid" : "semigroup";
  j["complete"] = m.complete();
  j["generators"] = nlohmann::ordered_json::array();
  for (const auto& g : m.generators()) j["generators"].push_back(g.symbol);
  j["elements"] = nlohmann::ordered_json::array();
  for (const auto& a : m.elements()) j["elements"].push_back(to_string(a));
  j["edges"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t g = 0; g < m.generators().size(); ++g) {
      const auto to = m.right(static_cast<FiniteMonoid::Index>(i), static_cast<int>(g));
      if (to != kUnset) j["edges"].push_back({i, m.generators()[g].symbol, to});
    }
  }
  return j;
}

std::string cayley_dot(const FiniteMonoid& m) {
  std::ostringstream os;
  os << "digraph cayley {\n";
  for (std::size_t i = 0; i < m.size(); ++i) os << "  " << i << " [label=\"" << to_string(m.elements()[i]) << "\"];\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t g = 0; g < m.generators().size(); ++g) {
      const auto to = m.right(static_cast<FiniteMonoid::Index>(i), static_cast<int>(g));
      if (to != kUnset) os << "  " << i << " -> " << to << " [label=\"" << m.generators()[g].symbol << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace diagcalc
