#include "diagcalc/ehresmann.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <variant>

#include "diagcalc/detail/parallel.hpp"
#include "diagcalc/equivalence.hpp"

namespace diagcalc {

namespace {

using Index = FiniteMonoid::Index;

struct Failure {
  std::string law;
  std::vector<Index> elements;
};

std::vector<std::string> texts(const FiniteMonoid& m, const std::vector<Index>& ids) {
  std::vector<std::string> out;
  for (Index i : ids) out.push_back(to_string(m.at(i)));
  return out;
}

struct Projections {
  std::vector<Index> d;
  std::vector<Index> r;
};

// Indices of D(a) and R(a); the first element whose image escapes m is
// reported instead.
std::variant<Projections, Failure> projection_tables(const FiniteMonoid& m) {
  Projections p;
  p.d.reserve(m.size());
  p.r.reserve(m.size());
  for (Index a = 0; a < m.size(); ++a) {
    auto d = m.index_of(domain_projection(m.at(a)));
    if (!d) return Failure{"not closed under D", {a}};
    auto r = m.index_of(range_projection(m.at(a)));
    if (!r) return Failure{"not closed under R", {a}};
    p.d.push_back(*d);
    p.r.push_back(*r);
  }
  return p;
}

void closure_failure(CheckReport& report, const FiniteMonoid& m, const Failure& f) {
  const Partition& a = m.at(f.elements.front());
  const Partition image = f.law == "not closed under D" ? domain_projection(a) : range_projection(a);
  report.refute(f.law, {to_string(a), to_string(image)});
}

// Runs a per-element check and then a per-pair check, both in element order.
template <class Unary, class Binary>
void exhaust(CheckReport& report, const FiniteMonoid& m, Unary unary, Binary binary) {
  const auto n = static_cast<Index>(m.size());
  for (Index a = 0; a < n; ++a) {
    if (auto law = unary(a)) {
      report.refute(*law + " fails", texts(m, {a}));
      return;
    }
  }
  report.count("elements", n);
  auto hit = detail::first_failing_row<Failure>(n, [&](std::size_t row) -> std::optional<Failure> {
    const auto a = static_cast<Index>(row);
    for (Index b = 0; b < n; ++b) {
      if (auto law = binary(a, b)) return Failure{*law, {a, b}};
    }
    return std::nullopt;
  });
  if (hit) {
    report.refute(hit->second.law + " fails", texts(m, hit->second.elements));
    return;
  }
  report.count("pairs", static_cast<std::int64_t>(n) * n);
}

using Law = std::optional<std::string>;

Law law(bool ok, const char* name) { return ok ? Law{} : Law{name}; }

}  // namespace

Partition domain_projection(const Partition& a) { return embed(kernel(a)); }

Partition range_projection(const Partition& a) { return embed(cokernel(a)); }

Partition planar_range(const Partition& a) {
  if (!is_full_domain(a) || !is_planar(a)) throw DomainError(to_string(a) + " is not planar with full domain");
  return d_of(cokernel(a));
}

CheckReport check_ehresmann(const FiniteMonoid& m) {
  CheckReport report("ehresmann");
  auto tables = projection_tables(m);
  if (auto* f = std::get_if<Failure>(&tables)) {
    closure_failure(report, m, *f);
    return report;
  }
  const auto& [D, R] = std::get<Projections>(tables);
  auto p = [&](Index x, Index y) { return m.product(x, y); };
  exhaust(
      report, m,
      [&](Index a) -> Law {
        if (p(D[a], a) != a) return "E1";
        if (p(a, R[a]) != a) return "E1 (range form)";
        if (R[D[a]] != D[a]) return "E5";
        if (D[R[a]] != R[a]) return "E5 (range form)";
        if (D[D[a]] != D[a]) return "E6";
        if (R[R[a]] != R[a]) return "E6 (range form)";
        if (p(D[a], D[a]) != D[a]) return "E7";
        if (p(R[a], R[a]) != R[a]) return "E7 (range form)";
        return {};
      },
      [&](Index a, Index b) -> Law {
        const Index ab = p(a, b);
        if (p(D[a], D[b]) != p(D[b], D[a])) return "E2";
        if (p(R[a], R[b]) != p(R[b], R[a])) return "E2 (range form)";
        if (D[ab] != D[p(a, D[b])]) return "E3";
        if (R[ab] != R[p(R[a], b)]) return "E3 (range form)";
        if (D[ab] != p(D[a], D[ab])) return "E4";
        if (R[ab] != p(R[ab], R[b])) return "E4 (range form)";
        if (p(D[a], D[b]) != D[p(D[a], D[b])]) return "E8";
        if (p(R[a], R[b]) != R[p(R[a], R[b])]) return "E8 (range form)";
        return {};
      });
  return report;
}

CheckReport check_projection_laws(const FiniteMonoid& m) {
  CheckReport report("projection-laws");
  auto tables = projection_tables(m);
  if (auto* f = std::get_if<Failure>(&tables)) {
    closure_failure(report, m, *f);
    return report;
  }
  const auto& [D, R] = std::get<Projections>(tables);
  auto p = [&](Index x, Index y) { return m.product(x, y); };
  std::vector<Index> from_d(D.begin(), D.end()), from_r(R.begin(), R.end()), fixed;
  for (Index a = 0; a < m.size(); ++a) {
    if (p(a, a) == a && D[a] == a && R[a] == a) fixed.push_back(a);
  }
  for (auto* v : {&from_d, &from_r}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  if (from_d != from_r || from_d != fixed) {
    report.refute("images of D and R differ from the fixed idempotents");
    return report;
  }
  report.count("projections", static_cast<std::int64_t>(fixed.size()));
  std::vector<char> is_projection(m.size(), 0);
  for (Index q : fixed) is_projection[q] = 1;
  // q <= r means q = qr.
  auto below = [&](Index q, Index r) { return p(q, r) == q; };
  exhaust(
      report, m, [](Index) -> Law { return {}; },
      [&](Index a, Index b) -> Law {
        if (below(D[b], R[a]) && R[p(a, b)] != R[b]) return "R(ab) = R(b) under R(a) >= D(b)";
        if (is_projection[b] && below(b, R[a]) && R[p(a, b)] != b) return "R(ap) = p under R(a) >= p";
        return {};
      });
  return report;
}

bool restriction_identity(const Partition& a, const Partition& b, Side side) {
  if (side == Side::left) return a * domain_projection(b) == domain_projection(a * b) * a;
  return range_projection(a) * b == b * range_projection(a * b);
}

CheckReport check_restriction(const FiniteMonoid& m, Side side) {
  CheckReport report(side == Side::left ? "left-restriction" : "right-restriction");
  auto tables = projection_tables(m);
  if (auto* f = std::get_if<Failure>(&tables)) {
    closure_failure(report, m, *f);
    return report;
  }
  const auto& [D, R] = std::get<Projections>(tables);
  auto p = [&](Index x, Index y) { return m.product(x, y); };
  exhaust(
      report, m, [](Index) -> Law { return {}; },
      [&](Index a, Index b) -> Law {
        if (side == Side::left) return law(p(a, D[b]) == p(D[p(a, b)], a), "aD(b) = D(ab)a");
        return law(p(R[a], b) == p(b, R[p(a, b)]), "R(a)b = bR(ab)");
      });
  return report;
}

CheckReport check_projection_action(const FiniteMonoid& m) {
  CheckReport report("projection-action");
  auto tables = projection_tables(m);
  if (auto* f = std::get_if<Failure>(&tables)) {
    closure_failure(report, m, *f);
    return report;
  }
  const auto& R = std::get<Projections>(tables).r;
  std::vector<char> is_projection(m.size(), 0);
  for (Index a = 0; a < m.size(); ++a) is_projection[R[a]] = 1;
  exhaust(
      report, m, [](Index) -> Law { return {}; },
      [&](Index q, Index a) -> Law {
        if (!is_projection[q]) return {};
        const Index qa = m.product(q, a);
        return law(qa == m.product(a, R[qa]), "pa = aR(pa)");
      });
  return report;
}

Parts parts(const FiniteMonoid& m) {
  Parts out;
  out.validation.name = "parts";
  const auto one = m.identity_index();
  if (!one) {
    out.validation.refute("parts requires a monoid");
    return out;
  }
  auto tables = projection_tables(m);
  if (auto* f = std::get_if<Failure>(&tables)) {
    closure_failure(out.validation, m, *f);
    return out;
  }
  const auto& [D, R] = std::get<Projections>(tables);
  std::vector<char> in_total(m.size(), 0), in_ideal(m.size(), 0);
  for (Index a = 0; a < m.size(); ++a) {
    in_total[a] = R[a] == *one;
    in_ideal[a] = D[a] != *one;
    if (in_total[a]) out.total.push_back(a);
    if (in_ideal[a]) out.ideal.push_back(a);
    if (in_total[a] && in_ideal[a]) out.proper.push_back(a);
  }
  auto closed = [&](const std::vector<Index>& set, const std::vector<char>& member) {
    for (Index a : set) {
      for (Index b : set) {
        if (!member[m.product(a, b)]) return std::optional<std::vector<Index>>({a, b});
      }
    }
    return std::optional<std::vector<Index>>{};
  };
  std::vector<char> in_proper(m.size(), 0);
  for (Index a : out.proper) in_proper[a] = 1;
  if (!in_total[*one]) {
    out.validation.refute("identity outside T");
  } else if (auto w = closed(out.total, in_total)) {
    out.validation.refute("T not closed", texts(m, *w));
  } else if (auto w2 = closed(out.proper, in_proper)) {
    out.validation.refute("Tf not closed", texts(m, *w2));
  } else {
    for (Index a : out.ideal) {
      for (std::size_t g = 0; g < m.generators().size(); ++g) {
        if (!in_ideal[m.right(a, static_cast<int>(g))]) {
          out.validation.refute("I not a right ideal", {to_string(m.at(a)), m.generators()[g].symbol});
          return out;
        }
      }
    }
  }
  out.validation.count("T", static_cast<std::int64_t>(out.total.size()));
  out.validation.count("I", static_cast<std::int64_t>(out.ideal.size()));
  out.validation.count("Tf", static_cast<std::int64_t>(out.proper.size()));
  return out;
}

bool absorbs(const Partition& u, const Partition& s, std::span<const Partition> acting_on) {
  const Partition us = u * s;
  return std::any_of(acting_on.begin(), acting_on.end(), [&](const Partition& v) { return s * v == us; });
}

CheckReport check_action_pair(std::span<const Partition> acting_on, std::span<const Partition> acted_by,
                              ActionPairOptions options) {
  CheckReport report("action-pair");
  if (acting_on.empty()) {
    report.refute("U is empty");
    return report;
  }
  const int n = acting_on.front().degree();
  std::unordered_set<Partition, PartitionHash> u_set(acting_on.begin(), acting_on.end());
  std::unordered_set<Partition, PartitionHash> s_set(acted_by.begin(), acted_by.end());
  if (!u_set.contains(Partition::identity(n))) {
    report.refute("U lacks the identity");
    return report;
  }
  for (const auto& x : acting_on) {
    for (const auto& y : acting_on) {
      if (!u_set.contains(x * y)) {
        report.refute("U not closed", {to_string(x), to_string(y)});
        return report;
      }
    }
  }
  for (const auto& x : acted_by) {
    for (const auto& y : acted_by) {
      if (!s_set.contains(x * y)) {
        report.refute("S not closed", {to_string(x), to_string(y)});
        return report;
      }
    }
  }

  // A2: every product su determines u.
  std::unordered_map<Partition, std::pair<std::size_t, std::size_t>, PartitionHash> origin;
  for (std::size_t si = 0; si < acted_by.size(); ++si) {
    for (std::size_t ui = 0; ui < acting_on.size(); ++ui) {
      auto [it, fresh] = origin.try_emplace(acted_by[si] * acting_on[ui], si, ui);
      if (!fresh && it->second.second != ui) {
        report.refute("A2 fails: su = tv with u != v",
                      {to_string(acted_by[si]), to_string(acting_on[ui]), to_string(acted_by[it->second.first]),
                       to_string(acting_on[it->second.second])});
        return report;
      }
    }
  }

  // A1 with the action table.
  std::int64_t actions = 0;
  for (const auto& s : acted_by) {
    std::unordered_map<Partition, std::size_t, PartitionHash> left_multiples;
    for (std::size_t vi = 0; vi < acting_on.size(); ++vi) left_multiples.try_emplace(s * acting_on[vi], vi);
    for (const auto& u : acting_on) {
      const Partition us = u * s;
      auto it = left_multiples.find(us);
      if (it == left_multiples.end()) {
        report.refute("A1 fails: us is not in sU", {to_string(u), to_string(s)});
        return report;
      }
      if (options.action_is_range && acting_on[it->second] != range_projection(us)) {
        report.refute("u^s differs from R(us)", {to_string(u), to_string(s)});
        return report;
      }
      ++actions;
    }
  }
  report.count("U", static_cast<std::int64_t>(acting_on.size()));
  report.count("S", static_cast<std::int64_t>(acted_by.size()));
  report.count("actions", actions);
  return report;
}

LeftCongruence::LeftCongruence(std::vector<int> labels) {
  std::unordered_map<int, int> renumber;
  class_of_.reserve(labels.size());
  for (int l : labels) {
    auto [it, fresh] = renumber.try_emplace(l, static_cast<int>(renumber.size()));
    class_of_.push_back(it->second);
  }
  classes_ = static_cast<int>(renumber.size());
}

std::size_t LeftCongruence::pair_count() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(classes_), 0);
  for (int c : class_of_) ++sizes[static_cast<std::size_t>(c)];
  std::size_t total = 0;
  for (auto s : sizes) total += s * s;
  return total;
}

std::size_t carrier_size(const FiniteMonoid& s) { return s.size() + (s.identity_index() ? 0 : 1); }

Partition carrier_element(const FiniteMonoid& s, std::size_t i) {
  return i < s.size() ? s.at(i) : Partition::identity(s.degree());
}

std::size_t carrier_index(const FiniteMonoid& s, const Partition& a) {
  if (auto i = s.index_of(a)) return *i;
  if (a == Partition::identity(s.degree())) return s.size();
  throw DomainError(to_string(a) + " is not in the carrier");
}

std::size_t carrier_left(const FiniteMonoid& s, int g, std::size_t i) {
  if (i >= s.size()) return s.generator_element(g);
  return s.left(g, static_cast<Index>(i));
}

LeftCongruence theta(const Partition& u, const FiniteMonoid& s) {
  std::unordered_map<Partition, int, PartitionHash> fiber;
  std::vector<int> labels;
  const std::size_t size = carrier_size(s);
  labels.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    auto [it, fresh] = fiber.try_emplace(carrier_element(s, i) * u, static_cast<int>(fiber.size()));
    labels.push_back(it->second);
  }
  return LeftCongruence(std::move(labels));
}

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[std::max(x, y)] = std::min(x, y);
    return true;
  }
  std::vector<int> labels() {
    std::vector<int> out(parent_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) out[i] = static_cast<int>(find(i));
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

LeftCongruence left_congruence_closure(const FiniteMonoid& s, std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  const std::size_t size = carrier_size(s);
  const int gens = static_cast<int>(s.generators().size());
  DisjointSet dsu(size);
  std::vector<std::pair<std::size_t, std::size_t>> queue;
  for (const auto& [x, y] : pairs) {
    if (x >= size || y >= size) throw DomainError("pair outside the carrier");
    if (dsu.unite(x, y)) queue.emplace_back(x, y);
  }
  // Each merged pair is pushed through every generator on the left; the
  // merged pairs generate the relation, so this saturates it.
  while (!queue.empty()) {
    const auto [x, y] = queue.back();
    queue.pop_back();
    for (int g = 0; g < gens; ++g) {
      const std::size_t gx = carrier_left(s, g, x), gy = carrier_left(s, g, y);
      if (dsu.unite(gx, gy)) queue.emplace_back(gx, gy);
    }
  }
  return LeftCongruence(dsu.labels());
}

bool is_left_compatible(const FiniteMonoid& s, const LeftCongruence& c) {
  const int gens = static_cast<int>(s.generators().size());
  for (int g = 0; g < gens; ++g) {
    std::vector<int> image(static_cast<std::size_t>(c.class_count()), -1);
    for (std::size_t i = 0; i < c.carrier_size(); ++i) {
      const int target = c.class_of(carrier_left(s, g, i));
      int& slot = image[static_cast<std::size_t>(c.class_of(i))];
      if (slot < 0) {
        slot = target;
      } else if (slot != target) {
        return false;
      }
    }
  }
  return true;
}

LeftCongruence join_left_congruences(const FiniteMonoid& s, std::span<const LeftCongruence> parts) {
  const std::size_t size = carrier_size(s);
  DisjointSet dsu(size);
  for (const auto& c : parts) {
    if (c.carrier_size() != size) throw DegreeMismatch("left congruences over different carriers");
    std::vector<std::size_t> first(static_cast<std::size_t>(c.class_count()), size);
    for (std::size_t i = 0; i < size; ++i) {
      auto& f = first[static_cast<std::size_t>(c.class_of(i))];
      if (f == size) {
        f = i;
      } else {
        dsu.unite(f, i);
      }
    }
  }
  LeftCongruence out(dsu.labels());
  if (!is_left_compatible(s, out)) throw DomainError("join is not left compatible");
  return out;
}

CheckReport check_grrac(const FiniteMonoid& m) {
  CheckReport report("grrac");
  std::vector<Index> rho;
  rho.reserve(m.size());
  for (Index a = 0; a < m.size(); ++a) {
    auto r = m.index_of(planar_range(m.at(a)));
    if (!r) {
      report.refute("rho(a) outside the monoid", texts(m, {a}));
      return report;
    }
    rho.push_back(*r);
  }
  auto p = [&](Index x, Index y) { return m.product(x, y); };
  exhaust(
      report, m,
      [&](Index a) -> Law {
        if (p(a, rho[a]) != a) return "G1";
        if (rho[rho[a]] != rho[a]) return "G2";
        if (p(rho[a], rho[a]) != rho[a]) return "G5";
        return {};
      },
      [&](Index a, Index b) -> Law {
        const Index ab = p(a, b);
        const Index ra_rb = p(rho[a], rho[b]);
        if (rho[ra_rb] != ra_rb) return "G3";
        if (p(ra_rb, rho[a]) != p(rho[b], rho[a])) return "G4";
        if (p(rho[ab], rho[b]) != rho[ab]) return "G6";
        if (rho[ab] != rho[p(rho[a], b)]) return "G7";
        if (p(rho[a], b) != p(b, rho[ab])) return "G8";
        return {};
      });
  return report;
}

}  // namespace diagcalc
