#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace t;

TEST_SUITE("circle") {

TEST_CASE("surd canonical form and comparison") {
  QuadraticSurd x = QuadraticSurd::from_parts(Q("-1"), Q("1"), 8);  // -1 + 2 sqrt 2
  CHECK(x.d() == 2);
  CHECK(x.b() == 2);
  CHECK(x == QuadraticSurd(-1, 2, 2, 1));
  CHECK(QuadraticSurd(2, 4, 2, 2) == QuadraticSurd(1, 2, 2, 1));
  CHECK(QuadraticSurd::from_parts(Q("0"), Q("1"), 4) == QuadraticSurd(Q("2")));
  CHECK(QuadraticSurd::from_parts(Q("-1"), Q("1"), 2) < QuadraticSurd(Q("1/2")));
  CHECK(QuadraticSurd::from_parts(Q("-1"), Q("1"), 2) > QuadraticSurd(Q("2/5")));
  CHECK(QuadraticSurd::from_parts(Q("-1"), Q("-1"), 2).floor() == -3);
  CHECK(QuadraticSurd::from_parts(Q("1/2"), Q("1/3"), 5).str() == "(3+2*sqrt(5))/6");
  CHECK(ratio(6, -4) == Q("-3/2"));
  CHECK_THROWS(ratio(1, 0));
}

TEST_CASE("sign of surds against squaring") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-30, 30), rad(2, 50);
  for (int i = 0; i < 2000; ++i) {
    Rational p = ratio(c(rng), 1 + std::abs(c(rng))), q = ratio(c(rng), 1 + std::abs(c(rng)));
    Integer d = rad(rng);
    // p + q sqrt d > 0  iff  (p >= 0 and q >= 0, not both 0) or the larger square wins
    int expect;
    Rational p2 = p * p, q2d = q * q * d;
    if (p >= 0 && q >= 0) expect = (p == 0 && q == 0) ? 0 : 1;
    else if (p <= 0 && q <= 0) expect = -1;
    else if (p > 0) expect = p2 > q2d ? 1 : (p2 == q2d ? 0 : -1);
    else expect = q2d > p2 ? 1 : (p2 == q2d ? 0 : -1);
    REQUIRE(sign_of_surd(p, q, d) == expect);
  }
}

TEST_CASE("circular order examples") {
  CHECK(circular_order(A("0"), A("1/4"), A("1/2")) == 1);
  CHECK(circular_order(A("1/3"), A("1/3"), A("2/3")) == 0);
  CHECK(circular_order(A("1/2"), A("1/4"), A("0")) == -1);
  auto a = A("0"), b = A("1/8"), c = A("1/4"), d = A("1/2");
  CHECK(circular_order(b, c, d) - circular_order(a, c, d) + circular_order(a, b, d) - circular_order(a, b, c) == 0);
  CHECK(circular_order(P("-1"), P("0"), P("inf")) == 1);
  CHECK(circular_order(P("inf"), P("-1"), P("0")) == 1);
  CHECK(circular_order(P("0"), P("-1"), P("inf")) == -1);
  CHECK_THROWS_AS(circular_order(A("0"), P("1"), A("1/2")), ModelMismatch);
}

TEST_CASE("circular order matches the oracles") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 3000; ++i) {
    Rational x = random_angle(rng, 12), y = random_angle(rng, 12), z = random_angle(rng, 12);
    REQUIRE(circular_order(CirclePoint::angle(x), CirclePoint::angle(y), CirclePoint::angle(z)) ==
            oracle_order_angle(x, y, z));
  }
  std::uniform_int_distribution<int> n(-8, 8), dd(1, 4), coin(0, 9);
  for (int i = 0; i < 3000; ++i) {
    std::vector<std::pair<bool, Rational>> v;
    std::vector<CirclePoint> pts;
    for (int k = 0; k < 3; ++k) {
      bool inf = coin(rng) == 0;
      Rational r = inf ? Rational(0) : ratio(n(rng), dd(rng));
      v.emplace_back(inf, r);
      pts.push_back(inf ? CirclePoint::infinity() : CirclePoint::projective(QuadraticSurd(r)));
    }
    REQUIRE(circular_order(pts[0], pts[1], pts[2]) == oracle_order_proj(v));
  }
}

TEST_CASE("intervals") {
  CHECK(IA("1/4", "1/2").contains(A("3/8")));
  CHECK_FALSE(IA("1/4", "1/2").contains(A("3/4")));
  CHECK(IA("3/4", "1/4").contains(A("0")));
  CHECK_FALSE(IA("1/4", "1/2").contains(A("1/4")));
  CHECK(dual(IA("1/4", "1/2")) == IA("1/2", "1/4"));
  CHECK(dual(dual(IA("0", "1/3"))) == IA("0", "1/3"));
  CHECK(subset(IA("0", "1/4"), IA("0", "1/2")));
  CHECK(subset(dual(IA("0", "1/2")), dual(IA("0", "1/4"))));
  CHECK_FALSE(closure_subset(IA("0", "1/4"), IA("0", "1/2")));
  CHECK(closure_subset(IA("1/8", "1/4"), IA("0", "1/2")));
  CHECK(disjoint(IA("0", "1/4"), IA("1/4", "1/2")));
  CHECK_FALSE(disjoint(IA("0", "1/3"), IA("1/4", "1/2")));
  CHECK(IP("1", "-1").contains(P("inf")));
  CHECK(IP("1", "-1").contains(P("5")));
  CHECK_FALSE(IP("1", "-1").contains(P("0")));

  Interval deg = interval(A("1/3"), A("1/3"));
  REQUIRE(std::holds_alternative<DegenerateInterval>(deg));
  CHECK(std::get<DegenerateInterval>(deg).contains(A("0")));
  CHECK_FALSE(std::get<DegenerateInterval>(deg).contains(A("1/3")));
  CHECK_THROWS(dual(deg));
  CHECK(dual(interval(A("0"), A("1/2"))) == IA("1/2", "0"));
}

TEST_CASE("interior points") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    Rational x = random_angle(rng, 40), y = random_angle(rng, 40);
    if (x == y) continue;
    OpenInterval I(CirclePoint::angle(x), CirclePoint::angle(y));
    REQUIRE(I.contains(interior_point(I)));
  }
  CHECK(IP("3", "-2").contains(interior_point(IP("3", "-2"))));
  OpenInterval S(P("0"), CirclePoint::projective(QuadraticSurd::from_parts(0, 1, 2)));
  CHECK(S.contains(interior_point(S)));
}

TEST_CASE("leaves") {
  CHECK(lies_on(LA("1/8", "1/4"), IA("0", "1/2")) == LiesOn::ProperlyLies);
  CHECK(lies_on(LA("0", "1/2"), IA("0", "1/2")) == LiesOn::Lies);
  CHECK(lies_on(LA("1/4", "3/4"), IA("0", "1/2")) == LiesOn::No);
  CHECK(unlinked(LA("0", "1/4"), LA("1/2", "3/4")));
  CHECK_FALSE(unlinked(LA("0", "1/2"), LA("1/4", "3/4")));
  CHECK(unlinked(LA("0", "1/4"), LA("1/4", "1/2")));
  CHECK(LA("1/2", "0") == LA("0", "1/2"));
  CHECK(LA("0", "1/2").is_element(IA("1/2", "0")));
  CHECK_THROWS(LA("1/3", "1/3"));
  CHECK_THROWS(Leaf(A("0"), P("1")));
}

TEST_CASE("unlinked matches the chord oracle") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 4000; ++i) {
    Rational a = random_angle(rng, 10), b = random_angle(rng, 10), c = random_angle(rng, 10), d = random_angle(rng, 10);
    if (a == b || c == d) continue;
    Leaf l(CirclePoint::angle(a), CirclePoint::angle(b)), m(CirclePoint::angle(c), CirclePoint::angle(d));
    REQUIRE(unlinked(l, m) == oracle_unlinked(l, m));
  }
}

TEST_CASE("projective display chart") {
  CHECK(*projective_to_turns(P("0")) == Q("1/2"));
  CHECK(*projective_to_turns(P("1")) == Q("3/4"));
  CHECK(*projective_to_turns(P("-1")) == Q("1/4"));
  CHECK(*projective_to_turns(P("inf")) == 0);
  CHECK_FALSE(projective_to_turns(CirclePoint::projective(QuadraticSurd::from_parts(0, 1, 2))).has_value());
  CHECK(display_turns(P("3")) == doctest::Approx(0.875));
  // monotone on a sample
  std::vector<CirclePoint> v = {P("inf"), P("-7"), P("-1/3"), P("0"), P("2/9"), P("40")};
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    CHECK(*projective_to_turns(v[i]) < *projective_to_turns(v[i + 1]));
}

}
