#include <doctest.h>

#include "diagcalc/diagcalc.hpp"
#include "oracles.hpp"

using namespace diagcalc;

namespace {

Partition p(const char* text) { return parse_partition(text); }

const CheckReport* child(const CheckReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

// Instances of h_ij h_kl = h_kl (k <= i < j <= l, equal letters included),
// commuting pairs i < j <= k < l, and two relations per triple i < j < k.
std::size_t dn_relation_count(int n) {
  std::size_t count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (k <= i && j <= l) ++count;
          if (j <= k) ++count;
        }
  count += 2 * static_cast<std::size_t>(oracle::binomial(n, 3));
  return count;
}

}  // namespace

TEST_CASE("schema names") {
  CHECK(parse_schema("sing-xr") == Schema::sing_xr);
  CHECK(parse_schema("XR") == Schema::sing_xr);
  CHECK(parse_schema("yq") == Schema::full_yq);
  CHECK(parse_schema("ZO") == Schema::planar_zo);
  CHECK_FALSE(parse_schema("nope").has_value());
  for (auto s : all_schemas()) CHECK(parse_schema(schema_name(s)) == s);
  CHECK_THROWS(schema(Schema::dn, 1));
}

TEST_CASE("alphabets") {
  CHECK(schema(Schema::dn, 3).alphabet == std::vector<std::string>{"h_1_2", "h_1_3", "h_2_3"});
  for (int n = 2; n <= 6; ++n) {
    const auto yq = schema(Schema::full_yq, n);
    CHECK(yq.alphabet.size() == static_cast<std::size_t>(n + 1));
    CHECK(yq.letter("e").has_value());
    CHECK(yq.letter("t").has_value());
    CHECK(yq.letter("s_" + std::to_string(n - 1)).has_value());
    CHECK(schema(Schema::sing_xr, n).alphabet.size() == static_cast<std::size_t>(3 * oracle::binomial(n, 2)));
    CHECK(schema(Schema::sing_xr, n).kind == MonoidKind::semigroup);
    CHECK(schema(Schema::planar_zo, n).alphabet.size() == static_cast<std::size_t>(3 * (n - 1)));
    CHECK(schema(Schema::dn, n).relations.size() == dn_relation_count(n));
  }
  const auto j = to_json(schema(Schema::sing_xr, 3));
  CHECK(j["alphabet"][0].get<std::string>().rfind("t_", 0) == 0);
  CHECK(j["kind"] == "semigroup");
}

TEST_CASE("standard images") {
  const auto xr = standard_assignment(Schema::sing_xr, 3);
  CHECK(xr.image("t_12") == p("[[1,2,-1],[3,-3],[-2]]"));
  CHECK(xr.image("e_12") == p("[[1,2,-1,-2],[3,-3]]"));
  CHECK(xr.image("t_21") == p("[[1,2,-2],[3,-3],[-1]]"));
  CHECK(xr.covers(schema(Schema::sing_xr, 3)));
  const auto zo = standard_assignment(Schema::planar_zo, 5);
  for (int i = 1; i < 5; ++i) CHECK(zo.image("h_" + std::to_string(i)) == d_of(atom(i, i + 1, 5)));
  const auto yq = standard_assignment(Schema::full_yq, 4);
  CHECK(yq.image("s_2") == p("[[1,-1],[2,-3],[3,-2],[4,-4]]"));
  CHECK(yq.image("t") == collapse(1, 2, 4));
  CHECK(yq.image("e") == merge_projection(1, 2, 4));
  CHECK_THROWS_AS(yq.image("q"), DomainError);
}

TEST_CASE("word evaluation") {
  const auto zo = standard_assignment(Schema::planar_zo, 3);
  CHECK(eval_word(zo, {}) == Partition::identity(3));
  CHECK(eval_word(zo, parse_word("h_1 g_2")) == interval_cap(1, 3, 3));
  CHECK(eval_word(zo, parse_word("h_2 f_1")) == interval_cap(1, 3, 3));
  CHECK_THROWS(eval_word(zo, parse_word("h_9")));
}

TEST_CASE("derived words") {
  CHECK(derived_word(DerivedKind::shift, 1, 2, 4).empty());
  CHECK(derived_word(DerivedKind::epsilon, 1, 2, 4) == Word{"e"});
  CHECK(derived_word(DerivedKind::tau, 1, 2, 4) == Word{"t"});
  CHECK(to_string(derived_word(DerivedKind::shift, 2, 4, 4)) == "s_2 s_3 s_1");
  CHECK(to_string(derived_word(DerivedKind::shift_inverse, 2, 4, 4)) == "s_1 s_3 s_2");
  CHECK(to_string(derived_word(DerivedKind::tau, 2, 1, 4)) == "t s_1");
  for (int i = 1; i < 5; ++i) {
    const Word h{"h_" + std::to_string(i)};
    CHECK(derived_word(DerivedKind::alpha, i, i + 1, 5) == h);
    CHECK(derived_word(DerivedKind::beta, i, i + 1, 5) == h);
  }
  CHECK(to_string(derived_word(DerivedKind::alpha, 1, 4, 5)) == "h_1 g_2 g_3");
  CHECK(to_string(derived_word(DerivedKind::beta, 1, 4, 5)) == "h_3 f_2 f_1");
  CHECK_THROWS(derived_word(DerivedKind::alpha, 3, 3, 5));

  const auto yq = standard_assignment(Schema::full_yq, 5);
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) {
      REQUIRE(eval_word(yq, derived_word(DerivedKind::epsilon, i, j, 5)) == merge_projection(i, j, 5));
      REQUIRE(eval_word(yq, derived_word(DerivedKind::tau, i, j, 5)) == collapse(i, j, 5));
      REQUIRE(eval_word(yq, derived_word(DerivedKind::tau, j, i, 5)) == collapse(j, i, 5));
    }
  }
}

TEST_CASE("soundness") {
  CHECK(check_soundness(schema(Schema::sing_xr, 4), standard_assignment(Schema::sing_xr, 4)).holds());
  for (auto s : all_schemas()) {
    for (int n = 2; n <= 5; ++n) REQUIRE(check_soundness(schema(s, n), standard_assignment(s, n)).holds());
  }
  for (int n = 2; n <= 6; ++n) {
    REQUIRE(check_soundness(schema(Schema::dn, n), standard_assignment(Schema::dn, n)).holds());
    REQUIRE(check_soundness(schema(Schema::planar_zo, n), standard_assignment(Schema::planar_zo, n)).holds());
  }

  auto mutated = schema(Schema::planar_zo, 3);
  bool changed = false;
  for (auto& r : mutated.relations) {
    if (r.label == "O10" && !changed) {
      r.rhs = {"g_2"};
      changed = true;
    }
  }
  REQUIRE(changed);
  const auto broken = check_soundness(mutated, standard_assignment(Schema::planar_zo, 3));
  CHECK(broken.verdict == Verdict::refuted);
  CHECK_FALSE(broken.witness.empty());

  auto empty = schema(Schema::dn, 3);
  empty.relations.clear();
  CHECK(check_soundness(empty, standard_assignment(Schema::dn, 3)).holds());
}

TEST_CASE("enumeration of presented monoids") {
  Presentation trivial;
  trivial.alphabet = {"a"};
  trivial.relations = {{{"a"}, {}, "a=1"}};
  const auto one = enumerate_presented(trivial);
  CHECK(one.status == EnumerationResult::Status::completed);
  CHECK(one.size == 1);

  const auto d3 = enumerate_presented(schema(Schema::dn, 3));
  CHECK(d3.size == 5);
  CHECK(d3.words.front().empty());
  CHECK(enumerate_presented(schema(Schema::planar_zo, 2)).size == 4);

  const auto starved = enumerate_presented(schema(Schema::sing_xr, 4), 100);
  CHECK(starved.status == EnumerationResult::Status::exhausted);
  CHECK(starved.size == 0);

  const auto sing = enumerate_presented(schema(Schema::sing_xr, 3));
  CHECK(sing.size == 46);
  for (const auto& w : sing.words) CHECK_FALSE(w.empty());

  // Every relation traces to equal elements from every element.
  const auto p3 = schema(Schema::planar_zo, 3);
  const auto zo = enumerate_presented(p3);
  const std::size_t letters = p3.alphabet.size();
  auto trace = [&](std::size_t x, const Word& w) {
    for (const auto& s : w) x = zo.table[x * letters + *p3.letter(s)];
    return x;
  };
  for (std::size_t x = 0; x < zo.size; ++x) {
    for (const auto& r : p3.relations) REQUIRE(trace(x, r.lhs) == trace(x, r.rhs));
  }
}

TEST_CASE("verification of presentations") {
  const auto d4 = verify_presentation(Schema::dn, 4);
  CHECK(d4.holds());
  CHECK(child(d4, "size")->count_of("presented") == 14);
  const auto xr3 = verify_presentation(Schema::sing_xr, 3);
  CHECK(xr3.holds());
  CHECK(child(xr3, "size")->count_of("presented") == 52 - 6);
  CHECK(verify_presentation(Schema::full_yq, 3).holds());
  CHECK(verify_presentation(Schema::full_yq, 3, 10).verdict == Verdict::inconclusive);
}

TEST_CASE("factor_product") {
  const auto a = p("[[1,2,3,4,5,-1],[-2,-5],[-3,-4]]");
  const auto [f, d] = factor_product(a, FactorMode::on_dn);
  CHECK(to_transformation(f).image() == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(to_string(d) == "[[1,-1],[2,3,4,5,-2,-5],[-3,-4]]");
  CHECK(f * d == a);
  for (auto mode : {FactorMode::tn_en, FactorMode::on_dn}) {
    const auto [l, r] = factor_product(Partition::identity(4), mode);
    CHECK(l == Partition::identity(4));
    CHECK(r == Partition::identity(4));
  }
  CHECK_THROWS(factor_product(p("[[1],[2,-2],[-1]]"), FactorMode::tn_en));
  CHECK_THROWS(factor_product(p("[[1,-2],[2,-1]]"), FactorMode::on_dn));
  for (const auto& x : concrete_elements(Family::ppnfd, 4)) {
    const auto [l, r] = factor_product(x, FactorMode::on_dn);
    REQUIRE(cokernel(l * r) == cokernel(x));
  }
}
