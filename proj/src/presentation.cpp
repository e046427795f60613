#include "diagcalc/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "diagcalc/ehresmann.hpp"
#include "diagcalc/equivalence.hpp"

namespace diagcalc {

namespace {

std::string num(int i) { return std::to_string(i); }

// Two-index letters of the X alphabet; digits run together below degree 10.
std::string pair_index(int i, int j, int n) { return n < 10 ? num(i) + num(j) : num(i) + "_" + num(j); }

std::string t_(int i, int j, int n) { return "t_" + pair_index(i, j, n); }
std::string e_(int i, int j, int n) { return "e_" + pair_index(std::min(i, j), std::max(i, j), n); }
std::string s_(int i) { return "s_" + num(i); }
std::string f_(int i) { return "f_" + num(i); }
std::string g_(int i) { return "g_" + num(i); }
std::string h_(int i) { return "h_" + num(i); }
std::string hh_(int i, int j) { return "h_" + num(i) + "_" + num(j); }

Word cat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

class Builder {
 public:
  Builder(Schema s, int n, MonoidKind kind) {
    p_.kind = kind;
    p_.schema = schema_name(s);
    p_.degree = n;
  }

  void letter(const std::string& x) {
    if (alphabet_.insert(x).second) p_.alphabet.push_back(x);
  }

  // Equal words in a chain a = b = c become the pairs (a,b), (b,c). Words
  // over missing letters are skipped first, so a sub-alphabet keeps every
  // equality the chain implies among its remaining words.
  void chain(const std::string& label, std::initializer_list<Word> words) {
    std::vector<Word> w;
    for (const auto& x : words) {
      if (known(x)) w.push_back(x);
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) add(label, w[i], w[i + 1]);
  }

  void add(const std::string& label, Word lhs, Word rhs) {
    if (!known(lhs) || !known(rhs)) return;
    if (lhs == rhs) return;
    auto key = lhs < rhs ? std::make_pair(lhs, rhs) : std::make_pair(rhs, lhs);
    if (!seen_.insert(key).second) return;
    p_.relations.push_back({std::move(lhs), std::move(rhs), label});
  }

  Presentation done() { return std::move(p_); }

  bool known(const Word& w) const {
    return std::all_of(w.begin(), w.end(), [&](const std::string& x) { return alphabet_.contains(x); });
  }

 private:
  Presentation p_;
  std::set<std::string> alphabet_;
  std::set<std::pair<Word, Word>> seen_;
};

bool distinct(std::initializer_list<int> xs) {
  std::vector<int> v(xs);
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

void x_letters(Builder& b, int n, bool with_t, bool with_e) {
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (with_t) {
        b.letter(t_(i, j, n));
        b.letter(t_(j, i, n));
      }
      if (with_e) b.letter(e_(i, j, n));
    }
  }
}

void tt_relations(Builder& b, int n) {
  auto t = [n](int i, int j) { return t_(i, j, n); };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      b.chain("TT1", {{t(i, j), t(i, j)}, {t(i, j)}, {t(j, i), t(i, j)}});
      for (int k = 1; k <= n; ++k) {
        if (!distinct({i, j, k})) continue;
        b.add("TT3", {t(i, k), t(j, k)}, {t(i, k)});
        b.chain("TT4", {{t(i, j), t(i, k)}, {t(i, k), t(i, j)}, {t(j, k), t(i, j)}});
        b.add("TT5", {t(k, i), t(i, j), t(j, k)}, {t(i, k), t(k, j), t(j, i), t(i, k)});
        for (int l = 1; l <= n; ++l) {
          if (!distinct({i, j, k, l})) continue;
          b.add("TT2", {t(i, j), t(k, l)}, {t(k, l), t(i, j)});
          b.add("TT6", {t(k, i), t(i, j), t(j, k), t(k, l)}, {t(i, k), t(k, l), t(l, i), t(i, j), t(j, l)});
        }
      }
    }
  }
}

void ee_relations(Builder& b, int n) {
  auto e = [n](int i, int j) { return e_(i, j, n); };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      b.add("EE1", {e(i, j), e(i, j)}, {e(i, j)});
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          if (k != l) b.add("EE2", {e(i, j), e(k, l)}, {e(k, l), e(i, j)});
        }
        if (distinct({i, j, k})) b.add("EE3", {e(i, j), e(j, k)}, {e(j, k), e(k, i)});
      }
    }
  }
}

void et_relations(Builder& b, int n) {
  auto e = [n](int i, int j) { return e_(i, j, n); };
  auto t = [n](int i, int j) { return t_(i, j, n); };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      b.add("ET1", {e(i, j), t(i, j)}, {t(i, j)});
      b.add("ET4", {t(i, j), e(i, j)}, {e(i, j)});
      for (int k = 1; k <= n; ++k) {
        if (!distinct({i, j, k})) continue;
        b.add("ET2", {e(j, k), t(i, j)}, {t(i, j), e(i, k)});
        for (int l = 1; l <= n; ++l) {
          if (distinct({i, j, k, l})) b.add("ET3", {e(k, l), t(i, j)}, {t(i, j), e(k, l)});
        }
      }
    }
  }
}

// Relations of Q; letters outside the builder's alphabet drop out.
void q_relations(Builder& b, int n) {
  const Word t{"t"}, e{"e"};
  auto s = [](int i) { return Word{s_(i)}; };
  for (int i = 1; i < n; ++i) {
    b.add("P1", cat({s(i), s(i)}), {});
    for (int j = 1; j < n; ++j) {
      if (std::abs(i - j) > 1) b.add("P2", cat({s(i), s(j)}), cat({s(j), s(i)}));
      if (std::abs(i - j) == 1) b.add("P3", cat({s(i), s(j), s(i)}), cat({s(j), s(i), s(j)}));
    }
  }
  b.chain("P4", {cat({t, t}), t, cat({e, t}), cat({s(1), t})});
  b.chain("P5", {cat({e, e}), e, cat({t, e}), cat({s(1), e}), cat({e, s(1)})});
  for (int i = 3; i < n; ++i) {
    b.add("P6", cat({s(i), t}), cat({t, s(i)}));
    b.add("P7", cat({s(i), e}), cat({e, s(i)}));
  }
  if (n >= 3) {
    b.add("P8", cat({t, s(1), s(2), t}), cat({t, s(1), s(2), s(1)}));
    b.add("P9", cat({t, s(2), t, s(2)}), cat({s(2), t, s(2), t}));
    b.add("P10", cat({e, s(2), e, s(2)}), cat({s(2), e, s(2), e}));
    b.add("P11", cat({t, s(2), e, s(2)}), cat({s(2), e, s(2), t}));
  }
  if (n >= 4) {
    const Word w = cat({s(2), s(3), s(1), s(2)});
    b.add("P12", cat({t, w, t, w}), cat({w, t, w, t}));
    b.add("P13", cat({e, w, e, w}), cat({w, e, w, e}));
    b.add("P14", cat({t, w, e, w}), cat({w, e, w, t}));
  }
}

// Relations of O over whichever of f, g, h are in the alphabet.
void o_relations(Builder& b, int n) {
  auto f = [](int i) { return Word{f_(i)}; };
  auto g = [](int i) { return Word{g_(i)}; };
  auto h = [](int i) { return Word{h_(i)}; };
  using Letter = Word (*)(int);
  const Letter xs[] = {[](int i) { return Word{f_(i)}; }, [](int i) { return Word{g_(i)}; },
                       [](int i) { return Word{h_(i)}; }};
  for (int i = 1; i < n; ++i) {
    for (auto x : xs) {
      for (auto y : xs) b.add("O1", cat({x(i), y(i)}), y(i));
    }
    for (int j = 1; j < n; ++j) {
      if (std::abs(i - j) > 1) {
        b.add("O2", cat({f(i), f(j)}), cat({f(j), f(i)}));
        b.add("O3", cat({g(i), g(j)}), cat({g(j), g(i)}));
      }
      if (i != j) b.add("O4", cat({h(i), h(j)}), cat({h(j), h(i)}));
      if (j != i && j != i + 1) b.add("O7", cat({f(i), g(j)}), cat({g(j), f(i)}));
      if (j != i && j != i - 1) b.add("O8", cat({h(i), f(j)}), cat({f(j), h(i)}));
      if (j != i && j != i + 1) b.add("O9", cat({h(i), g(j)}), cat({g(j), h(i)}));
    }
    if (i + 1 < n) {
      b.chain("O5", {cat({f(i), f(i + 1), f(i)}), cat({f(i + 1), f(i), f(i + 1)}), cat({f(i + 1), f(i)})});
      b.chain("O6", {cat({g(i), g(i + 1), g(i)}), cat({g(i + 1), g(i), g(i + 1)}), cat({g(i), g(i + 1)})});
      b.add("O10", cat({f(i), g(i + 1)}), f(i));
      b.add("O11", cat({g(i + 1), f(i)}), g(i + 1));
      b.add("O12", cat({h(i), g(i + 1)}), cat({h(i + 1), f(i)}));
    }
  }
}

void n_relations(Builder& b, int n) {
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        for (int l = k + 1; l <= n; ++l) {
          if (k <= i && j <= l) b.add("N1", {hh_(i, j), hh_(k, l)}, {hh_(k, l)});
          if (j <= k) b.add("N2", {hh_(i, j), hh_(k, l)}, {hh_(k, l), hh_(i, j)});
        }
      }
      for (int k = j + 1; k <= n; ++k) {
        b.chain("N3", {{hh_(i, j), hh_(j, k)}, {hh_(i, k), hh_(i, j)}, {hh_(i, k), hh_(j, k)}});
      }
    }
  }
}

// h_ii is the empty word.
Word cap_word(int i, int j) { return i == j ? Word{} : Word{hh_(i, j)}; }

void commutation_relations(Builder& b, int n) {
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 1; k < n; ++k) {
        Word rf = k == i - 1 ? cap_word(i - 1, j) : k == j - 1 ? cap_word(i, j - 1) : cap_word(i, j);
        b.add("R1", {hh_(i, j), f_(k)}, cat({{f_(k)}, rf}));
        Word rg = k == i ? cap_word(i + 1, j) : k == j ? cap_word(i, j + 1) : cap_word(i, j);
        b.add("R1", {hh_(i, j), g_(k)}, cat({{g_(k)}, rg}));
      }
    }
  }
  for (int i = 1; i < n; ++i) b.add("R2", {f_(i), hh_(i, i + 1)}, {hh_(i, i + 1)});
}

}  // namespace

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i];
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  std::istringstream is{std::string(text)};
  for (std::string x; is >> x;) w.push_back(x);
  return w;
}

std::optional<Schema> parse_schema(std::string_view name) {
  std::string lower;
  for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (Schema s : all_schemas()) {
    if (schema_name(s) == lower) return s;
  }
  if (lower == "xr" || lower == "singxr") return Schema::sing_xr;
  if (lower == "yq") return Schema::full_yq;
  if (lower == "zo") return Schema::planar_zo;
  return std::nullopt;
}

std::string schema_name(Schema s) {
  switch (s) {
    case Schema::sing_xr: return "sing-xr";
    case Schema::full_yq: return "full-yq";
    case Schema::planar_zo: return "planar-zo";
    case Schema::dn: return "dn";
    case Schema::en: return "en";
    case Schema::sing_tn: return "sing-tn";
    case Schema::tn: return "tn";
    case Schema::fn: return "fn";
    case Schema::on: return "on";
    case Schema::planar_intermediate: return "planar-intermediate";
  }
  return "?";
}

std::vector<Schema> all_schemas() {
  return {Schema::sing_xr, Schema::full_yq, Schema::planar_zo, Schema::dn, Schema::en,
          Schema::sing_tn, Schema::tn,      Schema::fn,        Schema::on, Schema::planar_intermediate};
}

Family schema_target(Schema s) {
  switch (s) {
    case Schema::sing_xr: return Family::sing_pnfd;
    case Schema::full_yq: return Family::pnfd;
    case Schema::planar_zo: return Family::ppnfd;
    case Schema::dn: return Family::dn;
    case Schema::en: return Family::en;
    case Schema::sing_tn: return Family::sing_tn;
    case Schema::tn: return Family::tn;
    case Schema::fn: return Family::fn;
    case Schema::on: return Family::on;
    case Schema::planar_intermediate: return Family::ppnfd;
  }
  return Family::pn;
}

std::optional<std::size_t> Presentation::letter(const std::string& symbol) const {
  auto it = std::find(alphabet.begin(), alphabet.end(), symbol);
  if (it == alphabet.end()) return std::nullopt;
  return static_cast<std::size_t>(it - alphabet.begin());
}

Presentation schema(Schema s, int n) {
  if (n < 2) throw DomainError("presentations need degree at least 2");
  const MonoidKind kind = s == Schema::sing_xr || s == Schema::sing_tn ? MonoidKind::semigroup : MonoidKind::monoid;
  Builder b(s, n, kind);
  switch (s) {
    case Schema::sing_xr:
      x_letters(b, n, true, true);
      tt_relations(b, n);
      ee_relations(b, n);
      et_relations(b, n);
      break;
    case Schema::sing_tn:
      x_letters(b, n, true, false);
      tt_relations(b, n);
      break;
    case Schema::en:
      x_letters(b, n, false, true);
      ee_relations(b, n);
      break;
    case Schema::full_yq:
    case Schema::tn:
    case Schema::fn:
      for (int i = 1; i < n; ++i) b.letter(s_(i));
      if (s != Schema::tn) b.letter("e");
      if (s != Schema::fn) b.letter("t");
      q_relations(b, n);
      if (s == Schema::tn && n >= 3) b.add("T", {"t", s_(2), "t", s_(2)}, {"t", s_(2), "t"});
      break;
    case Schema::planar_zo:
    case Schema::on:
      for (int i = 1; i < n; ++i) b.letter(f_(i));
      for (int i = 1; i < n; ++i) b.letter(g_(i));
      if (s == Schema::planar_zo) {
        for (int i = 1; i < n; ++i) b.letter(h_(i));
      }
      o_relations(b, n);
      break;
    case Schema::dn:
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) b.letter(hh_(i, j));
      }
      n_relations(b, n);
      break;
    case Schema::planar_intermediate:
      for (int i = 1; i < n; ++i) b.letter(f_(i));
      for (int i = 1; i < n; ++i) b.letter(g_(i));
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) b.letter(hh_(i, j));
      }
      o_relations(b, n);
      n_relations(b, n);
      commutation_relations(b, n);
      break;
  }
  return b.done();
}

nlohmann::ordered_json to_json(const Presentation& p) {
  nlohmann::ordered_json j;
  j["schema"] = p.schema;
  j["n"] = p.degree;
  j["kind"] = p.kind == MonoidKind::monoid ? "monoid" : "semigroup";
  j["alphabet"] = p.alphabet;
  j["relations"] = nlohmann::ordered_json::array();
  for (const auto& r : p.relations) j["relations"].push_back({r.lhs, r.rhs});
  return j;
}

void GeneratorAssignment::assign(const std::string& symbol, const Partition& image) {
  if (image.degree() != degree_) throw DegreeMismatch("image of " + symbol + " has the wrong degree");
  auto [it, fresh] = index_.try_emplace(symbol, symbols_.size());
  if (fresh) {
    symbols_.push_back(symbol);
    images_.push_back(image);
  } else {
    images_[it->second] = image;
  }
}

const Partition& GeneratorAssignment::image(const std::string& symbol) const {
  auto it = index_.find(symbol);
  if (it == index_.end()) throw DomainError("unknown symbol " + symbol);
  return images_[it->second];
}

bool GeneratorAssignment::covers(const Presentation& p) const {
  return std::all_of(p.alphabet.begin(), p.alphabet.end(), [&](const std::string& x) { return index_.contains(x); });
}

std::vector<Generator> GeneratorAssignment::generators() const {
  std::vector<Generator> out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) out.push_back({symbols_[i], images_[i]});
  return out;
}

GeneratorAssignment standard_assignment(Schema s, int n) {
  const Presentation p = schema(s, n);
  GeneratorAssignment asg(n);
  for (const auto& x : p.alphabet) {
    Partition image;
    if (x == "e") {
      image = merge_projection(1, 2, n);
    } else if (x == "t") {
      image = collapse(1, 2, n);
    } else {
      // letter_index or letter_index_index, or letter_ij below degree 10.
      const char kind = x.front();
      std::vector<int> ids;
      std::istringstream is(x.substr(2));
      for (std::string part; std::getline(is, part, '_');) ids.push_back(std::stoi(part));
      if ((kind == 't' || kind == 'e') && ids.size() == 1) ids = {ids[0] / 10, ids[0] % 10};
      switch (kind) {
        case 's': image = transposition(ids[0], n); break;
        case 'f': image = step_down(ids[0], n); break;
        case 'g': image = step_up(ids[0], n); break;
        case 'h': image = ids.size() == 1 ? interval_cap(ids[0], ids[0] + 1, n) : interval_cap(ids[0], ids[1], n); break;
        case 't': image = collapse(ids[0], ids[1], n); break;
        case 'e': image = merge_projection(ids[0], ids[1], n); break;
        default: throw DomainError("no standard image for " + x);
      }
    }
    asg.assign(x, image);
  }
  return asg;
}

Partition eval_word(const GeneratorAssignment& asg, const Word& w) {
  Partition out = Partition::identity(asg.degree());
  for (const auto& x : w) out = out * asg.image(x);
  return out;
}

Word derived_word(DerivedKind kind, int i, int j, int n) {
  auto range_check = [&](int a, int b) {
    if (!(1 <= a && a < b && b <= n)) throw DomainError("derived word indices out of range");
  };
  auto shift = [&](int a, int b) {
    Word c;
    for (int k = 2; k <= b - 1; ++k) c.push_back(s_(k));
    for (int k = 1; k <= a - 1; ++k) c.push_back(s_(k));
    return c;
  };
  auto reversed = [](Word w) {
    std::reverse(w.begin(), w.end());
    return w;
  };
  switch (kind) {
    case DerivedKind::shift:
      range_check(i, j);
      return shift(i, j);
    case DerivedKind::shift_inverse:
      range_check(i, j);
      return reversed(shift(i, j));
    case DerivedKind::epsilon:
      range_check(i, j);
      return cat({reversed(shift(i, j)), {"e"}, shift(i, j)});
    case DerivedKind::tau:
      if (i < j) {
        range_check(i, j);
        return cat({reversed(shift(i, j)), {"t"}, shift(i, j)});
      }
      range_check(j, i);
      return cat({reversed(shift(j, i)), {"t", s_(1)}, shift(j, i)});
    case DerivedKind::alpha: {
      range_check(i, j);
      Word w{h_(i)};
      for (int k = i + 1; k <= j - 1; ++k) w.push_back(g_(k));
      return w;
    }
    case DerivedKind::beta: {
      range_check(i, j);
      Word w{h_(j - 1)};
      for (int k = j - 2; k >= i; --k) w.push_back(f_(k));
      return w;
    }
  }
  return {};
}

CheckReport check_soundness(const Presentation& p, const GeneratorAssignment& asg) {
  CheckReport report("soundness");
  if (!asg.covers(p)) {
    report.refute("assignment does not cover the alphabet");
    return report;
  }
  for (const auto& r : p.relations) {
    const Partition l = eval_word(asg, r.lhs), rr = eval_word(asg, r.rhs);
    if (l != rr) {
      report.refute(r.label + " fails: " + to_string(r.lhs) + " = " + to_string(r.rhs), {to_string(l), to_string(rr)});
      return report;
    }
  }
  report.count("relations", static_cast<std::int64_t>(p.relations.size()));
  return report;
}

CheckReport verify_presentation(Schema s, int n, std::size_t budget) {
  CheckReport report("presentation:" + schema_name(s));
  const Presentation p = schema(s, n);
  const GeneratorAssignment asg = standard_assignment(s, n);
  report.count("n", n);
  report.count("alphabet", static_cast<std::int64_t>(p.alphabet.size()));
  report.count("relations", static_cast<std::int64_t>(p.relations.size()));

  report.absorb(check_soundness(p, asg));

  CheckReport image("image");
  const auto target = concrete_elements(schema_target(s), n);
  const FiniteMonoid closed = closure(asg.generators(), n, p.kind, budget);
  image.count("concrete", static_cast<std::int64_t>(target.size()));
  image.count("closure", static_cast<std::int64_t>(closed.size()));
  if (!closed.complete()) {
    image.give_up("closure budget exhausted");
  } else if (sorted(closed.elements()) != target) {
    image.refute("closure of the generator images differs from the concrete monoid");
  }
  report.absorb(std::move(image));

  CheckReport size("size");
  const EnumerationResult e = enumerate_presented(p, budget);
  size.count("nodes", static_cast<std::int64_t>(e.nodes_used));
  if (e.status == EnumerationResult::Status::exhausted) {
    size.give_up("enumeration budget exhausted");
  } else {
    size.count("presented", static_cast<std::int64_t>(e.size));
    size.count("concrete", static_cast<std::int64_t>(target.size()));
    if (e.size != target.size()) size.refute("presented size differs from concrete size");
  }
  report.absorb(std::move(size));
  return report;
}

std::pair<Partition, Partition> factor_product(const Partition& a, FactorMode mode) {
  if (!is_full_domain(a)) throw DomainError(to_string(a) + " does not have full domain");
  if (mode == FactorMode::on_dn && !is_planar(a)) throw DomainError(to_string(a) + " is not planar");
  const int n = a.degree();
  std::vector<int> least(static_cast<std::size_t>(a.block_count()), 0);
  for (int y = n; y >= 1; --y) least[a.lower(y)] = y;
  std::vector<int> image;
  for (int x = 1; x <= n; ++x) image.push_back(least[a.upper(x)]);
  Partition left = from_transformation(Transformation(std::move(image)));
  Partition right = mode == FactorMode::tn_en ? range_projection(a) : planar_range(a);
  if (left * right != a) throw DomainError("factorization of " + to_string(a) + " did not multiply back");
  return {left, right};
}

}  // namespace diagcalc
