#include <doctest.h>

#include <numeric>

#include "support.hpp"
#include "udpkit/errors.hpp"

using namespace udpkit;
using udptest::index_set;
using udptest::we;
using udptest::wi;

TEST_CASE("ring literals parse and print") {
  CHECK(parse_ring("z") == Ring::integers());
  CHECK(parse_ring(" W ") == Ring::witness());
  CHECK(parse_ring("zpoly") == Ring::polynomials());
  CHECK(parse_ring("zmod12") == Ring::modular(12));
  CHECK(parse_ring("zmod:12") == Ring::modular(12));
  CHECK(parse_ring(Ring::modular(9).literal()) == Ring::modular(9));
  CHECK_THROWS_AS(parse_ring("zmod1"), ParseError);
  CHECK_THROWS_AS(parse_ring("q"), ParseError);
  CHECK_THROWS_AS(parse_ring("zmodx"), ParseError);
}

TEST_CASE("capabilities by ring") {
  CHECK(Ring::integers().has(Capability::Intersect));
  CHECK_FALSE(Ring::integers().has(Capability::Enumerate));
  CHECK(Ring::modular(6).has(Capability::Enumerate));
  CHECK(Ring::witness().has(Capability::Decompose));
  CHECK(Ring::polynomials().has(Capability::Sum));
  CHECK_FALSE(Ring::polynomials().has(Capability::Intersect));
  CHECK_THROWS_AS(Ring::polynomials().require(Capability::Intersect, "test"), CapabilityError);
  CHECK(Ring::witness().size() == 8);
  CHECK(Ring::modular(10).size() == 10);
  CHECK_THROWS_AS(Ring::integers().size(), CapabilityError);
}

TEST_CASE("W arithmetic follows x^2 = xy = y^2 = 0 in characteristic 2") {
  const auto one = we("1"), x = we("x"), y = we("y");
  CHECK(x * x == Element::zero(udptest::W()));
  CHECK(x * y == Element::zero(udptest::W()));
  CHECK(y * y == Element::zero(udptest::W()));
  CHECK((one + x) * (one + y) == we("1+x+y"));
  CHECK(x + x == Element::zero(udptest::W()));
  CHECK(-x == x);
  CHECK(we("x+y").index() == 6);
  CHECK(Element::from_index(udptest::W(), 5).to_string() == "1+y");
  CHECK_THROWS_AS(we("z"), ParseError);
}

TEST_CASE("integer, modular and polynomial elements") {
  const auto z = Ring::integers();
  CHECK((parse_element(z, "-7") * parse_element(z, "3")).to_string() == "-21");
  const auto m = Ring::modular(7);
  CHECK((parse_element(m, "5") + parse_element(m, "4")).to_string() == "2");
  CHECK(parse_element(m, "-1").to_string() == "6");
  const auto p = Ring::polynomials();
  const auto f = parse_element(p, "x^2-3*x+2");
  CHECK(f.to_string() == "x^2-3*x+2");
  CHECK((f - f).is_zero());
  CHECK((parse_element(p, "x+1") * parse_element(p, "x-1")).to_string() == "x^2-1");
}

TEST_CASE("mixing rings is rejected") {
  CHECK_THROWS_AS(we("x") + parse_element(Ring::modular(2), "1"), RingMismatchError);
  CHECK_THROWS_AS(ideal_sum(wi("x"), Ideal::unit(Ring::integers())), RingMismatchError);
}

TEST_CASE("W has exactly six ideals in lattice order") {
  const auto ideals = all_ideals(udptest::W());
  REQUIRE(ideals.size() == 6);
  const std::vector<std::string> expected = {"<0>", "<x>", "<y>", "<x+y>", "<x, y>", "<1>"};
  for (std::size_t i = 0; i < 6; ++i) CHECK(ideals[i].to_string() == expected[i]);
  CHECK(index_set(wi("x")) == std::set<std::uint64_t>{0, 2});
  CHECK(index_set(wi("xy")) == std::set<std::uint64_t>{0, 2, 4, 6});
  CHECK(index_set(wi("1")).size() == 8);
  // 1 + x is a unit, so it generates everything.
  CHECK(Ideal::principal(we("1+x")).is_unit());
}

TEST_CASE("ideal sums and intersections") {
  CHECK(ideal_sum(wi("x"), wi("y")) == wi("xy"));
  CHECK(ideal_intersect(wi("x"), wi("y")).is_zero());
  CHECK(ideal_intersect(wi("xy"), wi("x+y")) == wi("x+y"));

  const auto z = Ring::integers();
  const auto four = Ideal::principal(Element::integer(z, 4));
  const auto six = Ideal::principal(Element::integer(z, 6));
  CHECK(ideal_sum(four, six).z_generator() == 2);
  CHECK(ideal_intersect(four, six).z_generator() == 12);
  CHECK(ideal_sum(four, Ideal::zero(z)) == four);
  CHECK(ideal_intersect(four, Ideal::zero(z)).is_zero());

  const auto m = Ring::modular(12);
  const auto g8 = Ideal::principal(Element::integer(m, 8));
  CHECK(g8.zmod_divisor() == 4);
  CHECK(ideal_sum(g8, Ideal::principal(Element::integer(m, 6))).zmod_divisor() == 2);
  CHECK(ideal_intersect(g8, Ideal::principal(Element::integer(m, 6))).zmod_divisor() == 12);
  CHECK(all_ideals(m).size() == 6);

  CHECK(ideal_contains(wi("xy"), wi("x")));
  CHECK_FALSE(ideal_contains(wi("x"), wi("xy")));
}

TEST_CASE("zpoly supports principal membership and sums only") {
  const auto p = Ring::polynomials();
  const auto ix = parse_ideal(p, "<x>");
  const auto i2 = parse_ideal(p, "<2>");
  CHECK(ideal_member(parse_element(p, "6*x"), ix));
  CHECK_FALSE(ideal_member(parse_element(p, "x+1"), ix));
  CHECK(ideal_member(parse_element(p, "4*x^2-2"), i2));
  CHECK_THROWS_AS(ideal_intersect(ix, i2), CapabilityError);
  CHECK_THROWS_AS((void)(ix == i2), CapabilityError);
}

TEST_CASE("decompose_in_sum splits an element across ideals") {
  std::vector<Ideal> parts = {wi("x"), wi("y")};
  const auto d = decompose_in_sum(we("x+y"), parts);
  REQUIRE(d.size() == 2);
  CHECK(d[0] + d[1] == we("x+y"));
  CHECK(ideal_member(d[0], parts[0]));
  CHECK(ideal_member(d[1], parts[1]));
  CHECK_THROWS_AS(decompose_in_sum(we("1"), parts), NoDecompositionError);

  const auto z = Ring::integers();
  std::vector<Ideal> zparts = {Ideal::principal(Element::integer(z, 4)), Ideal::principal(Element::integer(z, 6))};
  const auto zd = decompose_in_sum(Element::integer(z, 10), zparts);
  CHECK(zd[0] + zd[1] == Element::integer(z, 10));
  CHECK(zd[0].as_integer() % 4 == 0);
  CHECK(zd[1].as_integer() % 6 == 0);
  CHECK_THROWS_AS(decompose_in_sum(Element::integer(z, 3), zparts), NoDecompositionError);
}

TEST_CASE("extended_gcd returns Bezout coefficients") {
  const auto b = extended_gcd(4, 6);
  CHECK(b.g == 2);
  CHECK(b.s == -1);
  CHECK(b.t == 1);
  for (int a = -30; a <= 30; a += 7) {
    for (int c = -25; c <= 25; c += 6) {
      const auto r = extended_gcd(a, c);
      CHECK(r.g == std::gcd(a, c));
      CHECK(r.s * a + r.t * c == r.g);
    }
  }
}

TEST_CASE("non-distributive triples exist in W but not in Z/m") {
  CHECK_FALSE(is_distributive_triple(wi("x"), wi("y"), wi("x+y")));
  CHECK(is_distributive_triple(wi("x"), wi("x"), wi("y")));
  CHECK_FALSE(is_sum_distributive_triple(wi("x"), wi("y"), wi("x+y")));
  const auto t = find_nondistributive_triple(udptest::W());
  REQUIRE(t.has_value());
  CHECK_FALSE(is_distributive_triple(t->i, t->j, t->k));
  const auto s = find_sum_nondistributive_triple(udptest::W());
  REQUIRE(s.has_value());
  CHECK(s->i == wi("x"));
  CHECK(s->j == wi("y"));
  CHECK(s->k == wi("x+y"));
  for (std::uint64_t m : {2, 4, 12, 30, 64}) CHECK_FALSE(find_nondistributive_triple(Ring::modular(m)).has_value());
}
