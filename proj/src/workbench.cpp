#include "diagcalc/workbench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <thread>
#include <unordered_set>

#include "diagcalc/equivalence.hpp"

namespace diagcalc {

namespace {

using Index = FiniteMonoid::Index;
using PartitionSet = std::unordered_set<Partition, PartitionHash>;

// h_ii is the identity.
Partition cap(int i, int j, int n) { return i == j ? Partition::identity(n) : interval_cap(i, j, n); }

std::int64_t as_count(std::size_t v) { return static_cast<std::int64_t>(v); }

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t catalan(int n) { return binomial(2 * n, n) / (n + 1); }

// Bell triangle.
std::int64_t bell(int n) {
  std::vector<std::int64_t> row{1};
  for (int k = 0; k < n; ++k) {
    std::vector<std::int64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

std::int64_t power(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Holds exactly when the child is refuted; the child's witness is kept.
CheckReport expect_refuted(CheckReport child) {
  CheckReport report("refutes:" + child.name);
  if (child.verdict == Verdict::holds) {
    report.refute(child.name + " unexpectedly holds");
  } else if (child.verdict == Verdict::inconclusive) {
    report.give_up(child.detail);
  } else {
    report.witness = child.witness;
    report.detail = child.detail;
  }
  for (const auto& c : child.checks) {
    if (c.name == "known-witness" && c.verdict != Verdict::refuted) report.refute("the known witness does not refute");
  }
  report.checks.push_back(std::move(child));
  return report;
}

PartitionSet products(const std::vector<Partition>& left, const std::vector<Partition>& right) {
  PartitionSet out;
  for (const auto& a : left) {
    for (const auto& b : right) out.insert(a * b);
  }
  return out;
}

bool same_set(const PartitionSet& s, const std::vector<Partition>& v) {
  if (s.size() != v.size()) return false;
  return std::all_of(v.begin(), v.end(), [&](const Partition& a) { return s.contains(a); });
}

std::vector<Partition> pick(const FiniteMonoid& m, const std::vector<Index>& ids) {
  std::vector<Partition> out;
  for (auto i : ids) out.push_back(m.at(i));
  return sorted(std::move(out));
}

const FiniteMonoid& cached_family(Family f, int n) {
  static std::mutex guard;
  static std::map<std::pair<Family, int>, std::unique_ptr<FiniteMonoid>> cache;
  std::lock_guard lock(guard);
  auto& slot = cache[{f, n}];
  if (!slot) slot = std::make_unique<FiniteMonoid>(build_family(f, n));
  return *slot;
}

Word letters_of(const FiniteMonoid& m, const LetterWord& w) {
  Word out;
  for (int g : w) out.push_back(m.generators()[static_cast<std::size_t>(g)].symbol);
  return out;
}

Word append(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Family family_arg(const std::string& name, Family fallback) {
  if (name.empty()) return fallback;
  auto f = parse_family(name);
  if (!f) throw UsageError("unknown monoid " + name);
  return *f;
}

void need_degree(int n, int least, const std::string& target) {
  if (n < least) throw UsageError(target + " needs --n >= " + std::to_string(least));
}

}  // namespace

std::size_t budget_from_env(std::size_t fallback) {
  const char* raw = std::getenv("DIAGCALC_BUDGET");
  if (raw == nullptr) return fallback;
  std::string_view text(raw);
  std::size_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size() || v == 0) return fallback;
  return v;
}

int exit_code(Verdict v, bool expect_fail) {
  switch (v) {
    case Verdict::holds:
      return expect_fail ? kExitRefuted : kExitVerified;
    case Verdict::refuted:
      return expect_fail ? kExitVerified : kExitRefuted;
    case Verdict::inconclusive:
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

std::optional<std::int64_t> closed_form_size(Family f, int n) {
  switch (f) {
    case Family::pn:
      return bell(2 * n);
    case Family::ppn:
      return catalan(2 * n);
    case Family::tn:
      return power(n, n);
    case Family::sing_tn:
      return power(n, n) - factorial(n);
    case Family::on:
      return binomial(2 * n - 1, n - 1);
    case Family::sn:
      return factorial(n);
    case Family::en:
      return bell(n);
    case Family::dn:
      return catalan(n);
    case Family::pen:
      return power(2, n - 1);
    default:
      return std::nullopt;
  }
}

CheckReport ehresmann_suite(Family f, int n) {
  CheckReport report("ehresmann:" + family_name(f));
  report.count("n", n);
  const auto& m = cached_family(f, n);
  report.count("elements", as_count(m.size()));
  report.absorb(check_ehresmann(m));
  if (report.holds()) report.absorb(check_projection_laws(m));
  return report;
}

CheckReport restriction_suite(Family f, int n, Side side) {
  CheckReport report(std::string(side == Side::left ? "left" : "right") + "-restriction:" + family_name(f));
  report.count("n", n);
  const auto& m = cached_family(f, n);
  report.count("elements", as_count(m.size()));
  report.absorb(check_restriction(m, side));
  // On P_2 the pair (all singletons, one block) refutes the left identity
  // and, read in the reverse order, the right one.
  if (f == Family::pn && n == 2) {
    CheckReport known("known-witness");
    auto a = parse_partition("[[1],[2],[-1],[-2]]"), b = parse_partition("[[1,2,-1,-2]]");
    if (side == Side::right) std::swap(a, b);
    known.witness = {to_string(a), to_string(b)};
    if (!restriction_identity(a, b, side)) {
      known.refute("identity fails on the known pair", known.witness);
    } else {
      known.detail = "identity holds on the known pair";
    }
    report.checks.push_back(std::move(known));
  }
  return report;
}

CheckReport action_pair_suite(Family acting_on, Family acted_by, int n) {
  CheckReport report("action-pair:" + family_name(acting_on) + ":" + family_name(acted_by));
  report.count("n", n);
  const auto u = concrete_elements(acting_on, n);
  const auto s = concrete_elements(acted_by, n);
  ActionPairOptions options;
  // Inside the right restriction monoid P_n^fd the action is u -> R(us).
  options.action_is_range = acting_on == Family::en;
  report.absorb(check_action_pair(u, s, options));
  // A1 fails for (PE_3, PT_3) at u = id of {1},{2,3} and the collapse of 2 onto 1.
  if (acting_on == Family::pen && acted_by == Family::on && n == 3) {
    CheckReport known("known-witness");
    const auto a = parse_partition("[[1,-1],[2,3,-2,-3]]"), f = parse_partition("[[1,2,-1],[3,-3],[-2]]");
    known.witness = {to_string(a), to_string(f)};
    if (!absorbs(a, f, u)) {
      known.refute("A1 fails on the known pair", known.witness);
    } else {
      known.detail = "uf lies in fU";
    }
    report.checks.push_back(std::move(known));
  }
  return report;
}

CheckReport grrac_suite(int n) {
  CheckReport report("grrac:ppnfd");
  report.count("n", n);
  report.absorb(check_grrac(cached_family(Family::ppnfd, n)));
  return report;
}

CheckReport band_suite(int n) {
  CheckReport report("right-regular-band:dn");
  report.count("n", n);
  const auto& m = cached_family(Family::dn, n);
  report.count("elements", as_count(m.size()));
  if (sorted(m.elements()) != concrete_elements(Family::dn, n)) {
    report.refute("closure of the caps differs from the d_of image");
    return report;
  }
  const auto type = band_type(m);
  report.detail = to_string(type);
  if (type != BandType::right_regular_band && type != BandType::semilattice) {
    report.refute("not a right regular band: " + to_string(type));
  } else if (n >= 3 && type != BandType::right_regular_band) {
    report.refute("commutative at n >= 3");
  }
  const auto g = green(m);
  report.count("l-classes", g.l_count);
  if (static_cast<std::size_t>(g.l_count) != m.size()) report.refute("an L-class has more than one element");
  return report;
}

CheckReport theta_suite(int n) {
  CheckReport report("theta-laws");
  report.count("n", n);
  const auto projections = concrete_elements(Family::en, n);

  for (Family sf : {Family::tn, Family::sing_tn}) {
    const auto& s = cached_family(sf, n);
    const std::size_t one = carrier_index(s, Partition::identity(n));

    CheckReport join_law("join-law:" + family_name(sf));
    std::vector<LeftCongruence> thetas;
    for (const auto& u : projections) thetas.push_back(theta(u, s));
    std::int64_t pairs = 0;
    for (std::size_t a = 0; a < projections.size() && join_law.holds(); ++a) {
      for (std::size_t b = 0; b < projections.size(); ++b) {
        ++pairs;
        const std::vector<LeftCongruence> parts{thetas[a], thetas[b]};
        LeftCongruence joined;
        try {
          joined = join_left_congruences(s, parts);
        } catch (const DomainError&) {
          join_law.refute("join is not a left congruence", {to_string(projections[a]), to_string(projections[b])});
          break;
        }
        if (joined != theta(projections[a] * projections[b], s)) {
          join_law.refute("theta of the product differs from the join", {to_string(projections[a]), to_string(projections[b])});
          break;
        }
      }
    }
    join_law.count("pairs", pairs);
    report.absorb(std::move(join_law));

    // theta of id_eps is generated by (1, f) for the idempotent f sending each
    // point to the least point of its class; for atoms f is a collapse.
    CheckReport generator("single-pair:" + family_name(sf));
    std::int64_t checked = 0;
    auto single = [&](const Partition& u, const Partition& f) {
      ++checked;
      const std::pair<std::size_t, std::size_t> pair{one, carrier_index(s, f)};
      if (left_congruence_closure(s, std::span(&pair, 1)) != theta(u, s)) {
        generator.refute("theta is not generated by (1, f)", {to_string(u), to_string(f)});
      }
    };
    for (int i = 1; i <= n && generator.holds(); ++i) {
      for (int j = 1; j <= n && generator.holds(); ++j) {
        if (i != j) single(merge_projection(i, j, n), collapse(i, j, n));
      }
    }
    for (const auto& eps : enumerate_equivalences(n)) {
      if (!generator.holds()) break;
      if (eps.class_count() == n && sf == Family::sing_tn) continue;  // the identity is not singular
      std::vector<int> image;
      for (int x = 1; x <= n; ++x) image.push_back(eps.class_members(x).front());
      single(embed(eps), from_transformation(Transformation(image)));
    }
    generator.count("projections", checked);
    report.absorb(std::move(generator));
  }

  const auto& o = cached_family(Family::on, n);
  const std::size_t one = carrier_index(o, Partition::identity(n));
  CheckReport planar_gen("single-pair:on");
  std::int64_t caps_checked = 0;
  for (const auto& mu : enumerate_equivalences(n, EquivalenceFilter::planar)) {
    ++caps_checked;
    const auto u = d_of(mu);
    const auto f = from_transformation(f_of_convex(kernel(u)));
    const std::pair<std::size_t, std::size_t> pair{one, carrier_index(o, f)};
    if (left_congruence_closure(o, std::span(&pair, 1)) != theta(u, o)) {
      planar_gen.refute("theta is not generated by (1, f)", {to_string(u), to_string(f)});
      break;
    }
  }
  planar_gen.count("elements", caps_checked);
  report.absorb(std::move(planar_gen));

  CheckReport decomposition("adjacent-cap-join:on");
  std::vector<Partition> adjacent;
  for (int i = 1; i < n; ++i) adjacent.push_back(interval_cap(i, i + 1, n));
  std::vector<LeftCongruence> adjacent_theta;
  for (const auto& v : adjacent) adjacent_theta.push_back(theta(v, o));
  const auto band = concrete_elements(Family::dn, n);
  for (const auto& u : band) {
    std::vector<LeftCongruence> below;
    for (std::size_t k = 0; k < adjacent.size() && decomposition.holds(); ++k) {
      const bool fixed = adjacent[k] * u == u;
      const bool reached = std::any_of(band.begin(), band.end(), [&](const Partition& x) { return adjacent[k] * x == u; });
      if (fixed != reached) decomposition.refute("u <=_R v differs from u = vu", {to_string(u), to_string(adjacent[k])});
      if (fixed) below.push_back(adjacent_theta[k]);
    }
    if (!decomposition.holds()) break;
    if (join_left_congruences(o, below) != theta(u, o)) {
      decomposition.refute("theta differs from the join over the caps above it", {to_string(u)});
      break;
    }
  }
  decomposition.count("elements", as_count(band.size()));
  report.absorb(std::move(decomposition));
  return report;
}

CheckReport normal_form_suite(int n) {
  CheckReport report("normal-forms");
  report.count("n", n);
  std::int64_t planar = 0, brick_total = 0;
  for (const auto& eta : enumerate_equivalences(n, EquivalenceFilter::planar)) {
    ++planar;
    const auto d = d_of(eta);
    const auto word = w_word(eta);
    const auto hat = ker_hat(eta);
    const std::vector<std::string> who{to_string(eta)};
    if (evaluate(word, n) != d) {
      report.refute("w_word does not evaluate to d_of", who);
      break;
    }
    if (kernel(d) != hat || cokernel(d) != eta || d * d != d) {
      report.refute("d_of has the wrong kernel, cokernel or is not idempotent", who);
      break;
    }
    const auto parts = bricks(eta);
    brick_total += as_count(parts.size());
    BlockWord joined;
    int last_class = -1;
    bool aligned = true;
    for (const auto& brick : parts) {
      if (brick.empty()) aligned = false;
      const int cls = brick.empty() ? -1 : hat.class_of(brick.letters.front().first);
      if (cls <= last_class) aligned = false;
      last_class = cls;
      for (auto [s, t] : brick.letters) {
        if (!(s < t && hat.class_of(s) == cls && hat.class_of(t) == cls)) aligned = false;
        joined.letters.emplace_back(s, t);
      }
    }
    int long_intervals = 0;
    for (const auto& c : hat.classes()) long_intervals += c.size() > 1;
    if (!aligned || joined != word || static_cast<int>(parts.size()) != long_intervals) {
      report.refute("bricks do not cut w_word along the intervals of ker_hat", who);
      break;
    }
  }
  report.count("planar", planar);
  report.count("bricks", brick_total);
  if (report.holds() && planar != catalan(n)) report.refute("planar count differs from Catalan(n)");
  return report;
}

CheckReport successor_suite(int n) {
  CheckReport report("successor-law");
  report.count("n", n);
  std::int64_t cases = 0, merged = 0;
  for (const auto& eta : enumerate_equivalences(n, EquivalenceFilter::planar)) {
    const auto hat = ker_hat(eta);
    const auto d = d_of(eta);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        ++cases;
        const int p = hat.class_members(i).back();
        const int q = hat.class_members(j).front();
        const auto mu = join(eta, atom(std::min(p, q), std::max(p, q), n));
        const std::vector<std::string> who{to_string(eta), std::to_string(i), std::to_string(j)};
        if (!is_planar(mu) || interval_cap(i, j, n) * d != d_of(mu)) {
          report.refute("h_ij d_eta is not d_mu", who);
          return report;
        }
        if (mu == eta) continue;
        ++merged;
        for (int x = 1; x <= n; ++x) {
          if (successor(mu, x) != (x == p ? q : successor(eta, x))) {
            report.refute("successor of mu differs at " + std::to_string(x), who);
            return report;
          }
        }
      }
    }
  }
  report.count("cases", cases);
  report.count("merging", merged);
  return report;
}

Word factor_word(const Partition& a, FactorMode mode) {
  const int n = a.degree();
  const auto [left, right] = factor_product(a, mode);
  if (n < 2) return {};
  const bool planar = mode == FactorMode::on_dn;
  const auto& maps = cached_family(planar ? Family::on : Family::tn, n);
  Word w = letters_of(maps, word_for(maps, left));
  const auto eta = cokernel(a);
  if (planar) {
    for (auto [i, j] : w_word(eta).letters) w = append(w, derived_word(DerivedKind::alpha, i, j, n));
  } else {
    for (int x = 1; x <= n; ++x) {
      const int y = successor(eta, x);
      if (y != x) w = append(w, derived_word(DerivedKind::epsilon, x, y, n));
    }
  }
  if (eval_word(standard_assignment(planar ? Schema::planar_zo : Schema::full_yq, n), w) != a) {
    throw std::logic_error("factor word does not evaluate back to " + to_string(a));
  }
  return w;
}

CheckReport factorization_suite(Family f, int n) {
  if (f != Family::pnfd && f != Family::ppnfd) throw UsageError("factorization runs over pnfd or ppnfd");
  const bool planar = f == Family::ppnfd;
  const auto mode = planar ? FactorMode::on_dn : FactorMode::tn_en;
  CheckReport report("factorization:" + family_name(f));
  report.count("n", n);
  std::int64_t checked = 0;
  for (const auto& a : concrete_elements(f, n)) {
    ++checked;
    const auto [left, right] = factor_product(a, mode);
    const auto kind = classify(left);
    const bool left_ok = planar ? kind.order_preserving : kind.full_transformation;
    const bool right_ok = planar ? right == planar_range(a) : right == range_projection(a);
    if (left * right != a || !left_ok || !right_ok || cokernel(left * right) != cokernel(a)) {
      report.refute("factors do not multiply back", {to_string(a), to_string(left), to_string(right)});
      break;
    }
    try {
      factor_word(a, mode);
    } catch (const std::logic_error& e) {
      report.refute(e.what(), {to_string(a)});
      break;
    }
  }
  report.count("elements", checked);
  return report;
}

CheckReport derived_word_suite(int n, std::uint64_t seed) {
  CheckReport report("derived-words");
  report.count("n", n);
  const auto yq = standard_assignment(Schema::full_yq, n);
  const auto zo = standard_assignment(Schema::planar_zo, n);
  const auto xr = standard_assignment(Schema::sing_xr, n);
  const auto id = Partition::identity(n);
  std::int64_t words = 0;
  auto expect = [&](const GeneratorAssignment& asg, const Word& w, const Partition& target) {
    ++words;
    if (report.holds() && eval_word(asg, w) != target) report.refute("word evaluates wrongly", {to_string(w), to_string(target)});
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto c = derived_word(DerivedKind::shift, i, j, n);
      expect(yq, append(c, derived_word(DerivedKind::shift_inverse, i, j, n)), id);
      expect(yq, derived_word(DerivedKind::epsilon, i, j, n), merge_projection(i, j, n));
      expect(yq, derived_word(DerivedKind::tau, i, j, n), collapse(i, j, n));
      expect(yq, derived_word(DerivedKind::tau, j, i, n), collapse(j, i, n));
      expect(zo, derived_word(DerivedKind::alpha, i, j, n), interval_cap(i, j, n));
      expect(zo, derived_word(DerivedKind::beta, i, j, n), interval_cap(i, j, n));
    }
  }

  // Letter-by-letter translation of the X alphabet into Y-words.
  std::map<std::string, Word> hat;
  for (const auto& x : xr.symbols()) {
    const auto& image = xr.image(x);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        if (image == collapse(i, j, n)) hat[x] = derived_word(DerivedKind::tau, i, j, n);
        if (i < j && image == merge_projection(i, j, n)) hat[x] = derived_word(DerivedKind::epsilon, i, j, n);
      }
    }
    if (!hat.contains(x)) report.refute("no translation for " + x);
  }
  std::mt19937_64 rng(seed);
  const auto& letters = xr.symbols();
  for (int sample = 0; sample < 100 + static_cast<int>(letters.size()) && report.holds(); ++sample) {
    Word w;
    if (sample < static_cast<int>(letters.size())) {
      w.push_back(letters[static_cast<std::size_t>(sample)]);
    } else {
      const std::size_t len = 1 + rng() % 8;
      for (std::size_t k = 0; k < len; ++k) w.push_back(letters[rng() % letters.size()]);
    }
    Word translated;
    for (const auto& x : w) translated = append(translated, hat[x]);
    ++words;
    if (eval_word(xr, w) != eval_word(yq, translated)) report.refute("translation changes the value", {to_string(w)});
  }

  for (const auto& eta : enumerate_equivalences(n, EquivalenceFilter::planar)) {
    Word lifted;
    for (auto [i, j] : w_word(eta).letters) lifted = append(lifted, derived_word(DerivedKind::alpha, i, j, n));
    expect(zo, lifted, d_of(eta));
  }
  report.count("words", words);
  return report;
}

CheckReport commutation_suite(int n) {
  CheckReport report("cap-commutation");
  report.count("n", n);
  std::int64_t cases = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto h = interval_cap(i, j, n);
      for (int k = 1; k < n; ++k) {
        cases += 2;
        const auto f = step_down(k, n), g = step_up(k, n);
        const auto hf = k == i - 1 ? f * cap(i - 1, j, n) : k == j - 1 ? f * cap(i, j - 1, n) : f * h;
        const auto hg = k == i ? g * cap(i + 1, j, n) : k == j ? g * cap(i, j + 1, n) : g * h;
        const std::vector<std::string> who{std::to_string(i), std::to_string(j), std::to_string(k)};
        if (h * f != hf) {
          report.refute("h_ij f_k differs from the case table", who);
          return report;
        }
        if (h * g != hg) {
          report.refute("h_ij g_k differs from the case table", who);
          return report;
        }
        if (k == i - 1 && h * f != interval_cap(i - 1, j, n)) {
          report.refute("h_ij f_(i-1) is not h_(i-1)j", who);
          return report;
        }
      }
    }
  }
  report.count("cases", cases);
  return report;
}

CheckReport count_suite(Family f, int n, std::size_t budget) {
  CheckReport report("count:" + family_name(f));
  report.count("n", n);
  const auto m = build_family(f, n, budget);
  if (!m.complete()) {
    report.give_up("closure budget exhausted");
    return report;
  }
  const auto concrete = concrete_elements(f, n);
  report.count("closure", as_count(m.size()));
  report.count("concrete", as_count(concrete.size()));
  if (m.size() != concrete.size()) report.refute("closure and brute force differ in size");
  if (auto expected = closed_form_size(f, n)) {
    report.count("closed-form", *expected);
    if (*expected != as_count(concrete.size())) report.refute("size differs from the closed form");
  }
  return report;
}

CheckReport decomposition_suite(int n) {
  CheckReport report("decompositions");
  report.count("n", n);
  auto el = [n](Family f) { return concrete_elements(f, n); };
  const auto tn = el(Family::tn), en = el(Family::en), sn = el(Family::sn);
  auto product_check = [&](const std::string& what, const std::vector<Partition>& a, const std::vector<Partition>& b,
                           const std::vector<Partition>& target) {
    if (!same_set(products(a, b), target)) report.refute(what + " fails");
  };
  product_check("P_n^fd = T_n E_n", tn, en, el(Family::pnfd));
  product_check("Sing P_n^fd = Sing T_n E_n", el(Family::sing_tn), en, el(Family::sing_pnfd));
  product_check("F_n = E_n S_n", en, sn, el(Family::fn));
  product_check("F_n = S_n E_n", sn, en, el(Family::fn));
  product_check("PP_n^fd = O_n D_n", el(Family::on), el(Family::dn), el(Family::ppnfd));

  const auto& full = cached_family(Family::pnfd, n);
  auto split = parts(full);
  report.absorb(std::move(split.validation));
  report.count("total", as_count(split.total.size()));
  report.count("ideal", as_count(split.ideal.size()));
  report.count("proper", as_count(split.proper.size()));
  if (pick(full, split.total) != tn) report.refute("T(P_n^fd) is not T_n");
  if (pick(full, split.ideal) != el(Family::sing_pnfd)) report.refute("I(P_n^fd) is not the singular part");
  if (pick(full, split.proper) != el(Family::sing_tn)) report.refute("Tf(P_n^fd) is not Sing T_n");

  const auto units = units_and_singular(full);
  report.count("units", as_count(units.units.size()));
  if (pick(full, units.units) != sn) report.refute("units of P_n^fd are not S_n");
  const auto planar_units = units_and_singular(cached_family(Family::ppnfd, n));
  report.count("planar-units", as_count(planar_units.units.size()));
  if (planar_units.units.size() != 1) report.refute("PP_n^fd has a non-identity unit");
  return report;
}

std::vector<std::string> verify_targets() {
  std::vector<std::string> out;
  for (auto s : all_schemas()) out.push_back(schema_name(s));
  for (const char* t : {"ehresmann", "restriction", "action-pair", "grrac", "theta-laws", "dn-band", "normal-forms",
                        "successor", "factorization", "derived-words", "commutation", "counts", "decompositions", "suite"}) {
    out.emplace_back(t);
  }
  return out;
}

CheckReport run_target(const RunConfig& config) {
  const auto& t = config.target;
  const int n = config.n;
  if (config.budget == 0) throw UsageError("budget must be at least 1");
  need_degree(n, 1, t.empty() ? "verify" : t);
  if (auto s = parse_schema(t)) {
    need_degree(n, 2, t);
    return verify_presentation(*s, n, config.budget);
  }
  if (t == "ehresmann") return ehresmann_suite(family_arg(config.monoid, Family::pn), n);
  if (t == "restriction") return restriction_suite(family_arg(config.monoid, Family::pnfd), n, config.side);
  if (t == "action-pair") {
    need_degree(n, 2, t);
    if (config.monoid.empty()) {
      CheckReport report("action-pairs");
      report.absorb(action_pair_suite(Family::en, Family::tn, n));
      report.absorb(action_pair_suite(Family::en, Family::sing_tn, n));
      report.absorb(action_pair_suite(Family::dn, Family::on, n));
      return report;
    }
    const auto colon = config.monoid.find(':');
    if (colon == std::string::npos) throw UsageError("action-pair takes --monoid U:S, e.g. en:tn");
    return action_pair_suite(family_arg(config.monoid.substr(0, colon), Family::en),
                             family_arg(config.monoid.substr(colon + 1), Family::tn), n);
  }
  if (t == "grrac") return grrac_suite(n);
  if (t == "theta-laws") {
    need_degree(n, 2, t);
    return theta_suite(n);
  }
  if (t == "dn-band") return band_suite(n);
  if (t == "normal-forms") return normal_form_suite(n);
  if (t == "successor") return successor_suite(n);
  if (t == "factorization") return factorization_suite(family_arg(config.monoid, Family::ppnfd), n);
  if (t == "derived-words") {
    need_degree(n, 2, t);
    return derived_word_suite(n, config.seed);
  }
  if (t == "commutation") {
    need_degree(n, 2, t);
    return commutation_suite(n);
  }
  if (t == "counts") {
    if (!config.monoid.empty()) return count_suite(family_arg(config.monoid, Family::pn), n, config.budget);
    CheckReport report("counts");
    for (auto f : all_families()) {
      if (family_kind(f) == MonoidKind::semigroup && n < 2) continue;
      report.absorb(count_suite(f, n, config.budget));
    }
    return report;
  }
  if (t == "decompositions") return decomposition_suite(n);
  if (t == "suite") return verification_suite(config.budget);
  throw UsageError("unknown target '" + t + "'");
}

CheckReport verification_suite(std::size_t budget) {
  std::vector<std::function<CheckReport()>> jobs;
  auto range = [](int lo, int hi, auto make) {
    for (int n = lo; n <= hi; ++n) make(n);
  };
  auto presentation = [&](Schema s, int lo, int hi) {
    range(lo, hi, [&](int n) { jobs.emplace_back([=] { return verify_presentation(s, n, budget); }); });
  };
  presentation(Schema::sing_xr, 2, 4);
  presentation(Schema::full_yq, 2, 4);
  presentation(Schema::planar_zo, 2, 5);
  presentation(Schema::dn, 2, 6);
  for (auto s : {Schema::en, Schema::sing_tn, Schema::tn, Schema::fn, Schema::on, Schema::planar_intermediate}) {
    presentation(s, 2, 4);
  }
  jobs.emplace_back([] { return ehresmann_suite(Family::pn, 3); });
  jobs.emplace_back([] { return ehresmann_suite(Family::pnfd, 3); });
  jobs.emplace_back([] { return expect_refuted(ehresmann_suite(Family::ppnfd, 3)); });
  range(2, 4, [&](int n) {
    jobs.emplace_back([=] { return restriction_suite(Family::pnfd, n, Side::right); });
    jobs.emplace_back([=] { return expect_refuted(restriction_suite(Family::pnfd, n, Side::left)); });
    jobs.emplace_back([=] {
      CheckReport report("projection-action:pnfd");
      report.count("n", n);
      report.absorb(check_projection_action(cached_family(Family::pnfd, n)));
      return report;
    });
  });
  for (auto side : {Side::left, Side::right}) {
    jobs.emplace_back([=] { return expect_refuted(restriction_suite(Family::pn, 2, side)); });
  }
  range(2, 4, [&](int n) { jobs.emplace_back([=] { return grrac_suite(n); }); });
  range(1, 6, [&](int n) { jobs.emplace_back([=] { return band_suite(n); }); });
  range(2, 4, [&](int n) {
    jobs.emplace_back([=] { return action_pair_suite(Family::en, Family::tn, n); });
    jobs.emplace_back([=] { return action_pair_suite(Family::en, Family::sing_tn, n); });
  });
  range(2, 5, [&](int n) { jobs.emplace_back([=] { return action_pair_suite(Family::dn, Family::on, n); }); });
  jobs.emplace_back([] { return expect_refuted(action_pair_suite(Family::pen, Family::on, 3)); });
  range(2, 5, [&](int n) { jobs.emplace_back([=] { return theta_suite(n); }); });
  range(1, 6, [&](int n) { jobs.emplace_back([=] { return normal_form_suite(n); }); });
  range(2, 5, [&](int n) { jobs.emplace_back([=] { return successor_suite(n); }); });
  range(1, 4, [&](int n) { jobs.emplace_back([=] { return factorization_suite(Family::pnfd, n); }); });
  range(1, 5, [&](int n) { jobs.emplace_back([=] { return factorization_suite(Family::ppnfd, n); }); });
  range(2, 5, [&](int n) {
    jobs.emplace_back([=] { return derived_word_suite(n, 1); });
    jobs.emplace_back([=] { return commutation_suite(n); });
  });
  range(2, 4, [&](int n) { jobs.emplace_back([=] { return decomposition_suite(n); }); });
  range(1, 4, [&](int n) {
    for (auto f : all_families()) {
      if (family_kind(f) == MonoidKind::semigroup && n < 2) continue;
      jobs.emplace_back([=] { return count_suite(f, n, budget); });
    }
  });

  std::vector<CheckReport> results(jobs.size());
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    const unsigned count = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    for (unsigned w = 0; w < count; ++w) {
      workers.emplace_back([&] {
        for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();) {
          try {
            results[k] = jobs[k]();
          } catch (const std::exception& e) {
            results[k] = CheckReport("job-" + std::to_string(k));
            results[k].refute(std::string("exception: ") + e.what());
          }
        }
      });
    }
  }
  CheckReport report("verification-suite");
  report.count("reports", as_count(results.size()));
  for (auto& r : results) report.absorb(std::move(r));
  return report;
}

}  // namespace diagcalc
