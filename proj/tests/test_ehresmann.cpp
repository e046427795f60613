#include <doctest.h>

#include <algorithm>
#include <set>

#include "diagcalc/diagcalc.hpp"

using namespace diagcalc;

namespace {

Partition p(const char* text) { return parse_partition(text); }

}  // namespace

TEST_CASE("projections by example") {
  const auto id = Partition::identity(3);
  CHECK(domain_projection(id) == id);
  CHECK(range_projection(id) == id);
  const auto u = p("[[1,-1],[2,3,-2,-3]]"), f = p("[[1,2,-1],[3,-3],[-2]]");
  const auto r = range_projection(u * f);
  CHECK(to_string(r) == "[[1,3,-1,-3],[2,-2]]");
  CHECK_FALSE(is_planar(r));
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      const auto e = merge_projection(i, j, 4);
      CHECK(range_projection(e) == e);
      CHECK(domain_projection(e) == e);
    }
  }
}

TEST_CASE("planar range") {
  CHECK(planar_range(Partition::identity(4)) == Partition::identity(4));
  CHECK(to_string(planar_range(p("[[1,2,3,4,5,-1],[-2,-5],[-3,-4]]"))) == "[[1,-1],[2,3,4,5,-2,-5],[-3,-4]]");
  for (int n = 1; n <= 5; ++n) {
    for (const auto& e : enumerate_equivalences(n, EquivalenceFilter::planar)) REQUIRE(planar_range(d_of(e)) == d_of(e));
  }
  CHECK_THROWS(planar_range(p("[[1,-2],[2,-1]]")));
  CHECK_THROWS(planar_range(p("[[1],[2,-2],[-1]]")));
}

TEST_CASE("Ehresmann identities") {
  CHECK(check_ehresmann(build_family(Family::pn, 3)).holds());
  CHECK(check_ehresmann(build_family(Family::pnfd, 3)).holds());
  CHECK(check_ehresmann(build_family(Family::pnfd, 4)).holds());
  const auto planar = check_ehresmann(build_family(Family::ppnfd, 3));
  CHECK(planar.verdict == Verdict::refuted);
  CHECK(planar.detail.find("not closed under R") != std::string::npos);
  REQUIRE(planar.witness.size() == 2);
  CHECK_FALSE(is_planar(parse_partition(planar.witness[1])));
}

TEST_CASE("ordering law and projection sets") {
  CHECK(check_projection_laws(build_family(Family::pn, 3)).holds());
  for (int n = 1; n <= 4; ++n) {
    std::set<Partition> ds, rs;
    for (const auto& a : concrete_elements(Family::pn, n)) {
      ds.insert(domain_projection(a));
      rs.insert(range_projection(a));
    }
    const auto en = concrete_elements(Family::en, n);
    CHECK(std::vector<Partition>(ds.begin(), ds.end()) == en);
    CHECK(std::vector<Partition>(rs.begin(), rs.end()) == en);
  }
}

TEST_CASE("restriction identities") {
  const auto p2 = build_family(Family::pn, 2);
  for (auto side : {Side::left, Side::right}) {
    const auto r = check_restriction(p2, side);
    CHECK(r.verdict == Verdict::refuted);
    REQUIRE(r.witness.size() == 2);
    CHECK_FALSE(restriction_identity(parse_partition(r.witness[0]), parse_partition(r.witness[1]), side));
  }
  const auto singletons = p("[[1],[2],[-1],[-2]]"), block = p("[[1,2,-1,-2]]");
  CHECK_FALSE(restriction_identity(singletons, block, Side::left));
  CHECK_FALSE(restriction_identity(block, singletons, Side::right));

  for (int n = 2; n <= 4; ++n) {
    const auto m = build_family(Family::pnfd, n);
    CHECK(check_restriction(m, Side::right).holds());
    const auto left = check_restriction(m, Side::left);
    CHECK(left.verdict == Verdict::refuted);
    CHECK_FALSE(restriction_identity(parse_partition(left.witness[0]), parse_partition(left.witness[1]), Side::left));
    CHECK(check_projection_action(m).holds());
  }
}

TEST_CASE("parts of P_3^fd") {
  const auto m = build_family(Family::pnfd, 3);
  const auto split = parts(m);
  CHECK(split.validation.holds());
  CHECK(split.total.size() == 27);
  CHECK(split.ideal.size() == 52 - 6);
  CHECK(split.proper.size() == 27 - 6);
  std::vector<Partition> total;
  for (auto i : split.total) total.push_back(m.at(i));
  CHECK(sorted(total) == concrete_elements(Family::tn, 3));

  const auto trivial = closure({}, 2);
  const auto tp = parts(trivial);
  CHECK(tp.total.size() == 1);
  CHECK(tp.ideal.empty());
}

TEST_CASE("action pairs") {
  const auto e3 = concrete_elements(Family::en, 3);
  CHECK(check_action_pair(e3, concrete_elements(Family::tn, 3), {true}).holds());
  CHECK(check_action_pair(e3, concrete_elements(Family::sing_tn, 3), {true}).holds());
  CHECK(check_action_pair(concrete_elements(Family::dn, 4), concrete_elements(Family::on, 4)).holds());

  const auto pe = concrete_elements(Family::pen, 3);
  const auto pt = concrete_elements(Family::on, 3);
  const auto r = check_action_pair(pe, pt);
  CHECK(r.verdict == Verdict::refuted);
  CHECK(r.detail.find("A1") != std::string::npos);
  const auto u = p("[[1,-1],[2,3,-2,-3]]"), f = p("[[1,2,-1],[3,-3],[-2]]");
  CHECK(std::binary_search(pe.begin(), pe.end(), u));
  CHECK(std::binary_search(pt.begin(), pt.end(), f));
  CHECK_FALSE(absorbs(u, f, pe));
}

TEST_CASE("intersections of the acting monoid with the acted-on set") {
  for (int n = 2; n <= 4; ++n) {
    const auto en = concrete_elements(Family::en, n);
    const auto tn = concrete_elements(Family::tn, n);
    const auto stn = concrete_elements(Family::sing_tn, n);
    std::vector<Partition> common;
    std::set_intersection(en.begin(), en.end(), tn.begin(), tn.end(), std::back_inserter(common));
    CHECK(common == std::vector<Partition>{Partition::identity(n)});
    common.clear();
    std::set_intersection(en.begin(), en.end(), stn.begin(), stn.end(), std::back_inserter(common));
    CHECK(common.empty());
  }
}

TEST_CASE("theta by example") {
  const auto t2 = build_family(Family::tn, 2);
  const auto eq = theta(Partition::identity(2), t2);
  CHECK(eq.class_count() == static_cast<int>(carrier_size(t2)));
  CHECK(theta(embed(Equivalence::universal(2)), t2).class_count() == 1);

  const auto t3 = build_family(Family::tn, 3);
  for (const auto& eps : enumerate_equivalences(3)) {
    const auto th = theta(embed(eps), t3);
    for (std::size_t a = 0; a < carrier_size(t3); ++a) {
      for (std::size_t b = 0; b < carrier_size(t3); ++b) {
        const auto fa = to_transformation(carrier_element(t3, a)), fb = to_transformation(carrier_element(t3, b));
        bool related = true;
        for (int x = 1; x <= 3; ++x) related = related && eps.related(fa(x), fb(x));
        REQUIRE(th.related(a, b) == related);
      }
    }
  }
}

TEST_CASE("sing T_n carrier adjoins an identity") {
  const auto s = build_family(Family::sing_tn, 3);
  CHECK(carrier_size(s) == s.size() + 1);
  CHECK(carrier_index(s, Partition::identity(3)) == s.size());
  CHECK(carrier_element(s, s.size()) == Partition::identity(3));
}

TEST_CASE("left congruence closure and joins") {
  const auto t3 = build_family(Family::tn, 3);
  const auto none = left_congruence_closure(t3, {});
  CHECK(none.class_count() == static_cast<int>(carrier_size(t3)));
  const std::pair<std::size_t, std::size_t> pair{carrier_index(t3, Partition::identity(3)), carrier_index(t3, collapse(1, 2, 3))};
  const auto generated = left_congruence_closure(t3, std::span(&pair, 1));
  CHECK(generated == theta(merge_projection(1, 2, 3), t3));
  CHECK(is_left_compatible(t3, generated));

  const std::vector<LeftCongruence> with_equality{generated, none};
  CHECK(join_left_congruences(t3, with_equality) == generated);
  const std::vector<LeftCongruence> mismatched{generated, theta(Partition::identity(2), build_family(Family::tn, 2))};
  CHECK_THROWS_AS(join_left_congruences(t3, mismatched), DegreeMismatch);

  const auto o4 = build_family(Family::on, 4);
  for (const auto& mu : enumerate_equivalences(4, EquivalenceFilter::planar)) {
    const auto u = d_of(mu);
    const std::pair<std::size_t, std::size_t> gen{carrier_index(o4, Partition::identity(4)),
                                                  carrier_index(o4, from_transformation(f_of_convex(kernel(u))))};
    REQUIRE(left_congruence_closure(o4, std::span(&gen, 1)) == theta(u, o4));
  }
}

TEST_CASE("grrac identities") {
  const auto two = check_grrac(build_family(Family::ppnfd, 2));
  CHECK(two.holds());
  CHECK(two.count_of("elements") == 4);
  CHECK(two.count_of("pairs") == 16);
  CHECK(check_grrac(build_family(Family::ppnfd, 3)).holds());
  CHECK(check_grrac(build_family(Family::ppnfd, 4)).holds());
}

TEST_CASE("reports serialize with fixed fields") {
  const auto r = check_restriction(build_family(Family::pn, 2), Side::left);
  const auto j = to_json(r);
  CHECK(j["name"] == "left-restriction");
  CHECK(j["holds"] == false);
  CHECK(j["status"] == "refuted");
  CHECK(j["witness"].size() == 2);
  CHECK(j.contains("counts"));
}
