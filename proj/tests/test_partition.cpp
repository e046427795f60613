#include <doctest.h>

#include <random>

#include "diagcalc/diagcalc.hpp"
#include "oracles.hpp"

using namespace diagcalc;

namespace {

Partition p(const char* text) { return parse_partition(text); }

std::vector<int> labels_of(const Partition& a) {
  std::vector<int> out;
  for (auto c : a.codes()) out.push_back(c);
  return out;
}

}  // namespace

TEST_CASE("identity and canonical text") {
  CHECK(to_string(Partition::identity(3)) == "[[1,-1],[2,-2],[3,-3]]");
  CHECK(to_string(p("[[3,-3],[-2],[1,2,-1]]")) == "[[1,2,-1],[3,-3],[-2]]");
  CHECK(p("[[1,2,-1],[3,-3],[-2]]").block_count() == 3);
  CHECK(is_canonical(p("[[1,-2],[2,-1]]")));
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_partition("[[1,-1],[2]]"), ParseError);
  CHECK_THROWS_AS(parse_partition("[[1,-1],[1,-2],[2]]"), ParseError);
  CHECK_THROWS_AS(parse_partition("[[1,2,-1],[3,-3]]"), ParseError);
  CHECK_THROWS_AS(parse_partition("[[1,0]]"), ParseError);
  CHECK_THROWS_AS(parse_partition("[1,-1]"), ParseError);
}

TEST_CASE("products by example") {
  const auto t12 = p("[[1,2,-1],[3,-3],[-2]]");
  const auto e12 = p("[[1,2,-1,-2],[3,-3]]");
  CHECK(t12 * t12 == t12);
  CHECK(e12 * e12 == e12);
  CHECK(t12 * e12 == e12);
  CHECK(e12 * t12 == t12);
  CHECK(p("[[1],[2],[-1],[-2]]") * p("[[1,2,-1,-2]]") == p("[[1],[2],[-1,-2]]"));
  CHECK_THROWS_AS(multiply(Partition::identity(2), Partition::identity(3)), DegreeMismatch);
}

TEST_CASE("multiplication is associative with identity on random triples") {
  const auto all = all_partitions(3);
  std::mt19937 rng(7);
  const auto id = Partition::identity(3);
  for (int k = 0; k < 2000; ++k) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    const auto& c = all[rng() % all.size()];
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * id == a);
    REQUIRE(id * a == a);
  }
}

TEST_CASE("structure of a partition") {
  const auto a = p("[[1,2,3,4,5,-1],[-2,-5],[-3,-4]]");
  const auto s = structure(a);
  CHECK(s.rank == 1);
  CHECK(s.dom == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(s.codom == std::vector<int>{1});
  CHECK(to_string(s.ker) == "[[1,2,3,4,5]]");
  CHECK(to_string(s.coker) == "[[1],[2,5],[3,4]]");
  CHECK(is_full_domain(a));
  CHECK(is_planar(a));
}

TEST_CASE("planarity agrees with the four-point crossing test on P_3") {
  for (const auto& a : all_partitions(3)) REQUIRE(is_planar(a) == oracle::planar_partition(labels_of(a), 3));
}

TEST_CASE("two partitions drawn with and without crossings") {
  CHECK_FALSE(is_planar(p("[[1,-2],[2,-1]]")));
  CHECK(is_planar(p("[[1,-1],[2,3,-3],[-2]]")));
  CHECK_FALSE(is_planar(p("[[1,3],[2,-1],[-2],[-3]]")));
}

TEST_CASE("membership predicates") {
  CHECK(classify(p("[[1,-2],[2,-1]]")).symmetric);
  CHECK(classify(p("[[1,2,-1],[3,-3],[-2]]")).order_preserving);
  CHECK_FALSE(classify(p("[[1,-2],[2,-1]]")).order_preserving);
  CHECK(classify(p("[[1,2,-1,-2],[3,-3]]")).semilattice);
  CHECK(classify(p("[[1,2,3,4,5,6,-1,-5,-6],[7,8,-7,-8],[-2,-3],[-4]]")).right_regular_band);
  CHECK_FALSE(classify(p("[[1],[2,-2],[-1]]")).full_domain);
}

TEST_CASE("transformations round-trip") {
  for (const auto& f : all_transformations(3)) {
    REQUIRE(to_transformation(from_transformation(f)) == f);
  }
  const Transformation f({2, 2, 3}), g({1, 3, 3});
  CHECK(from_transformation(compose(f, g)) == from_transformation(f) * from_transformation(g));
  CHECK(compose(f, g) == Transformation({3, 3, 3}));
}
