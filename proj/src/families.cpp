#include "diagcalc/families.hpp"

#include <algorithm>
#include <numeric>

#include "diagcalc/equivalence.hpp"

namespace diagcalc {

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

std::string idx(int i) { return std::to_string(i); }
std::string pair_index(int i, int j, int n) { return n < 10 ? idx(i) + idx(j) : idx(i) + "_" + idx(j); }

Partition map_partition(int n, int from, int to) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  image[static_cast<std::size_t>(from - 1)] = to;
  return from_transformation(Transformation(std::move(image)));
}

template <class Pred>
std::vector<Partition> filter_all(int n, Pred keep) {
  std::vector<Partition> out;
  for (auto& a : all_partitions(n)) {
    if (keep(a)) out.push_back(a);
  }
  return out;
}

std::vector<Partition> maps(int n, bool (*keep)(const Transformation&)) {
  std::vector<Partition> out;
  for (const auto& f : all_transformations(n)) {
    if (!keep || keep(f)) out.push_back(from_transformation(f));
  }
  return out;
}

}  // namespace

Partition transposition(int i, int n) {
  need(1 <= i && i < n, "transposition index out of range");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::swap(image[static_cast<std::size_t>(i - 1)], image[static_cast<std::size_t>(i)]);
  return from_transformation(Transformation(std::move(image)));
}

Partition merge_projection(int i, int j, int n) { return embed(atom(std::min(i, j), std::max(i, j), n)); }

Partition collapse(int i, int j, int n) {
  need(i != j && 1 <= std::min(i, j) && std::max(i, j) <= n, "collapse indices out of range");
  return map_partition(n, j, i);
}

Partition step_down(int i, int n) {
  need(1 <= i && i < n, "step index out of range");
  return map_partition(n, i + 1, i);
}

Partition step_up(int i, int n) {
  need(1 <= i && i < n, "step index out of range");
  return map_partition(n, i, i + 1);
}

Partition interval_cap(int i, int j, int n) { return d_of(atom(i, j, n)); }

Partition point_cut(int i, int n) {
  need(1 <= i && i <= n, "cut index out of range");
  std::vector<int> labels(static_cast<std::size_t>(2 * n));
  for (int x = 1; x <= n; ++x) {
    labels[static_cast<std::size_t>(x - 1)] = x;
    labels[static_cast<std::size_t>(n + x - 1)] = x == i ? -x : x;
  }
  return Partition::from_labels(n, labels);
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  const int m = 2 * n;
  std::vector<int> rgs(static_cast<std::size_t>(m), 0), top(static_cast<std::size_t>(m), 0);
  for (;;) {
    out.push_back(Partition::from_labels(n, rgs));
    int i = m - 1;
    while (i >= 1 && rgs[static_cast<std::size_t>(i)] > top[static_cast<std::size_t>(i - 1)]) --i;
    if (i < 1) break;
    ++rgs[static_cast<std::size_t>(i)];
    top[static_cast<std::size_t>(i)] = std::max(top[static_cast<std::size_t>(i - 1)], rgs[static_cast<std::size_t>(i)]);
    for (int k = i + 1; k < m; ++k) {
      rgs[static_cast<std::size_t>(k)] = 0;
      top[static_cast<std::size_t>(k)] = top[static_cast<std::size_t>(k - 1)];
    }
  }
  return out;
}

std::vector<Transformation> all_transformations(int n) {
  std::vector<Transformation> out;
  std::vector<int> image(static_cast<std::size_t>(n), 1);
  for (;;) {
    out.emplace_back(image);
    int i = n - 1;
    while (i >= 0 && image[static_cast<std::size_t>(i)] == n) image[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++image[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<Partition> sorted(std::vector<Partition> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : all_families()) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::pn: return "pn";
    case Family::pnfd: return "pnfd";
    case Family::sing_pnfd: return "sing-pnfd";
    case Family::ppn: return "ppn";
    case Family::ppnfd: return "ppnfd";
    case Family::tn: return "tn";
    case Family::sing_tn: return "sing-tn";
    case Family::on: return "on";
    case Family::sn: return "sn";
    case Family::en: return "en";
    case Family::fn: return "fn";
    case Family::dn: return "dn";
    case Family::in: return "in";
    case Family::jn: return "jn";
    case Family::pen: return "pen";
  }
  return "?";
}

std::vector<Family> all_families() {
  return {Family::pn, Family::pnfd, Family::sing_pnfd, Family::ppn, Family::ppnfd, Family::tn, Family::sing_tn, Family::on,
          Family::sn, Family::en,   Family::fn,        Family::dn,  Family::in,    Family::jn, Family::pen};
}

MonoidKind family_kind(Family f) {
  return f == Family::sing_pnfd || f == Family::sing_tn ? MonoidKind::semigroup : MonoidKind::monoid;
}

std::vector<Partition> concrete_elements(Family f, int n) {
  std::vector<Partition> out;
  switch (f) {
    case Family::pn:
      out = all_partitions(n);
      break;
    case Family::pnfd:
      out = filter_all(n, [](const Partition& a) { return is_full_domain(a); });
      break;
    case Family::sing_pnfd:
      out = filter_all(n, [n](const Partition& a) { return is_full_domain(a) && rank(a) < n; });
      break;
    case Family::ppn:
      out = filter_all(n, [](const Partition& a) { return is_planar(a); });
      break;
    case Family::ppnfd:
      out = filter_all(n, [](const Partition& a) { return is_full_domain(a) && is_planar(a); });
      break;
    case Family::tn:
      out = maps(n, nullptr);
      break;
    case Family::sing_tn:
      out = maps(n, [](const Transformation& t) { return !t.is_permutation(); });
      break;
    case Family::on:
      out = maps(n, [](const Transformation& t) { return t.is_order_preserving(); });
      break;
    case Family::sn:
      out = maps(n, [](const Transformation& t) { return t.is_permutation(); });
      break;
    case Family::en:
      for (const auto& e : enumerate_equivalences(n)) out.push_back(embed(e));
      break;
    case Family::pen:
      for (const auto& e : enumerate_equivalences(n, EquivalenceFilter::convex)) out.push_back(embed(e));
      break;
    case Family::dn:
      for (const auto& e : enumerate_equivalences(n, EquivalenceFilter::planar)) out.push_back(d_of(e));
      break;
    case Family::fn:
      out = filter_all(n, [](const Partition& a) { return classify(a).uniform_block_bijection; });
      break;
    case Family::in:
      out = filter_all(n, [](const Partition& a) { return classify(a).symmetric_inverse; });
      break;
    case Family::jn:
      out = filter_all(n, [](const Partition& a) { return classify(a).block_bijection; });
      break;
  }
  return sorted(std::move(out));
}

std::vector<Generator> standard_generators(Family f, int n) {
  std::vector<Generator> g;
  auto transpositions = [&] {
    for (int i = 1; i < n; ++i) g.push_back({"s_" + idx(i), transposition(i, n)});
  };
  switch (f) {
    case Family::pn:
      transpositions();
      if (n >= 1) g.push_back({"p_1", point_cut(1, n)});
      if (n >= 2) g.push_back({"e", merge_projection(1, 2, n)});
      break;
    case Family::pnfd:
      transpositions();
      if (n >= 2) {
        g.push_back({"e", merge_projection(1, 2, n)});
        g.push_back({"t", collapse(1, 2, n)});
      }
      break;
    case Family::sing_pnfd:
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          g.push_back({"t_" + pair_index(i, j, n), collapse(i, j, n)});
          g.push_back({"t_" + pair_index(j, i, n), collapse(j, i, n)});
          g.push_back({"e_" + pair_index(i, j, n), merge_projection(i, j, n)});
        }
      }
      break;
    case Family::ppn:
      for (int i = 1; i <= n; ++i) g.push_back({"p_" + idx(i), point_cut(i, n)});
      for (int i = 1; i < n; ++i) g.push_back({"e_" + idx(i), merge_projection(i, i + 1, n)});
      break;
    case Family::ppnfd:
      for (int i = 1; i < n; ++i) g.push_back({"f_" + idx(i), step_down(i, n)});
      for (int i = 1; i < n; ++i) g.push_back({"g_" + idx(i), step_up(i, n)});
      for (int i = 1; i < n; ++i) g.push_back({"h_" + idx(i), interval_cap(i, i + 1, n)});
      break;
    case Family::tn:
      transpositions();
      if (n >= 2) g.push_back({"t", collapse(1, 2, n)});
      break;
    case Family::sing_tn:
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i != j) g.push_back({"t_" + pair_index(i, j, n), collapse(i, j, n)});
        }
      }
      break;
    case Family::on:
      for (int i = 1; i < n; ++i) g.push_back({"f_" + idx(i), step_down(i, n)});
      for (int i = 1; i < n; ++i) g.push_back({"g_" + idx(i), step_up(i, n)});
      break;
    case Family::sn:
      transpositions();
      break;
    case Family::en:
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) g.push_back({"e_" + pair_index(i, j, n), merge_projection(i, j, n)});
      }
      break;
    case Family::pen:
      for (int i = 1; i < n; ++i) g.push_back({"e_" + idx(i), merge_projection(i, i + 1, n)});
      break;
    case Family::dn:
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) g.push_back({"h_" + idx(i) + "_" + idx(j), interval_cap(i, j, n)});
      }
      break;
    case Family::fn:
      transpositions();
      if (n >= 2) g.push_back({"e", merge_projection(1, 2, n)});
      break;
    case Family::in:
      transpositions();
      if (n >= 1) g.push_back({"p_1", point_cut(1, n)});
      break;
    case Family::jn:
      transpositions();
      if (n >= 2) g.push_back({"e", merge_projection(1, 2, n)});
      if (n >= 3) {
        // {1,2} over {1'} and {3} over {2',3'}.
        std::vector<int> labels(static_cast<std::size_t>(2 * n));
        for (int x = 1; x <= n; ++x) {
          labels[static_cast<std::size_t>(x - 1)] = x;
          labels[static_cast<std::size_t>(n + x - 1)] = x;
        }
        labels[1] = 1;
        labels[static_cast<std::size_t>(n + 1)] = 3;
        g.push_back({"b", Partition::from_labels(n, labels)});
      }
      break;
  }
  return g;
}

FiniteMonoid build_family(Family f, int n, std::size_t budget) {
  return closure(standard_generators(f, n), n, family_kind(f), budget);
}

}  // namespace diagcalc
