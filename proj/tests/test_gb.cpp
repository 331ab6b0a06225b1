#include "doctest.h"

#include <vector>

#include "cohsup/gb.hpp"
#include "oracles.hpp"

using namespace cohsup;

namespace {

const field_spec qq = field_spec::rationals();
const std::vector<std::string> xy = {"x", "y"};
const std::vector<std::string> xyz = {"x", "y", "z"};

polynomial p2(const std::string& t) { return parse_polynomial(t, xy, qq); }
polynomial p3(const std::string& t) { return parse_polynomial(t, xyz, qq); }

std::vector<polynomial> parse_all(const std::vector<std::string>& texts,
                                  const std::vector<std::string>& vars) {
  std::vector<polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, vars, qq));
  return out;
}

}  // namespace

TEST_CASE("reduced bases of small ideals") {
  const auto b1 = buchberger(qq, 2, parse_all({"x^2-y^2", "y"}, xy));
  REQUIRE(b1.size() == 2);
  CHECK(b1[0] == p2("x^2"));
  CHECK(b1[1] == p2("y"));

  // descending in the grevlex order used for the basis: y^3 has degree 3
  const auto b2 = buchberger(qq, 2, parse_all({"x^2+y^2", "xy"}, xy));
  REQUIRE(b2.size() == 3);
  CHECK(b2[0] == p2("y^3"));
  CHECK(b2[1] == p2("x^2+y^2"));
  CHECK(b2[2] == p2("xy"));

  // generator order and scaling do not change the reduced basis
  const auto b3 = buchberger(qq, 2, parse_all({"3xy", "x^2+y^2", "xy"}, xy));
  CHECK(b3 == b2);
}

TEST_CASE("normal form reduces fully and is idempotent") {
  const auto basis = buchberger(qq, 2, parse_all({"x^2+y^2", "xy"}, xy));
  CHECK(normal_form(p2("x^3"), basis).is_zero());
  CHECK(normal_form(p2("x^2"), basis) == p2("-y^2"));
  CHECK(normal_form(p2("y^2"), basis) == p2("y^2"));
  const polynomial r = normal_form(p2("x^4+x^3y+x^2y^2+xy^3+y^4"), basis);
  CHECK(normal_form(r, basis) == r);
  // remainder involves only standard monomials
  for (const auto& [m, c] : r.terms()) {
    (void)c;
    CHECK(!oracles::monomial_member(m, {monomial({2, 0}), monomial({1, 1}), monomial({0, 3})}));
  }
}

TEST_CASE("membership agrees with the homogeneous slice oracle") {
  const auto gens = parse_all({"x^2-y^2", "x^2-z^2", "xy", "xz", "yz"}, xyz);
  const ideal i = ideal::of(gens);
  const std::vector<polynomial> probes = {
      p3("x^2-y^2"), p3("x^3"), p3("y^2-z^2"), p3("x^2"), p3("x^2+y^2"),
      p3("xyz"),     p3("x^2y-z^3"), p3("x^2-2y^2+z^2")};
  for (const auto& f : probes) {
    CHECK(i.contains(f) == oracles::homogeneous_member(f, gens));
  }
  CHECK(i.contains(p3("x^3")));
  CHECK(!i.contains(p3("x^2")));       // degree-2 part of the quotient is 1-dimensional
  CHECK(i.contains(p3("y^2-z^2")));
  CHECK(i.contains(p3("x^2-3y^2+2z^2")));
}

TEST_CASE("krull dimension of the quotient") {
  CHECK(ideal::of({p2("xy")}).krull_dim() == 1);
  CHECK(ideal::of({p2("x"), p2("y")}).krull_dim() == 0);
  CHECK(ideal::of({p2("1")}).krull_dim() == 0);  // zero ring
  CHECK(!ideal::of({p2("1")}).is_proper());
  CHECK(ideal::of({p3("xy"), p3("xz"), p3("yz")}).krull_dim() == 1);
  CHECK(ideal::of({p3("x^2-y^2"), p3("x^2-z^2"), p3("xy"), p3("xz"), p3("yz")}).krull_dim() == 0);
  CHECK(ideal(qq, 2, {}).krull_dim() == 2);  // zero ideal: the whole ring survives
}

TEST_CASE("m-primary detection and truncation index") {
  const ideal i = ideal::of({p2("x^2"), p2("y^2")});
  CHECK(i.is_m_primary());
  CHECK(i.truncation_index() == 3);
  CHECK(ideal::of({p2("x"), p2("y")}).truncation_index() == 1);
  CHECK(ideal::of({p2("x^2"), p2("xy"), p2("y^2")}).truncation_index() == 2);

  CHECK(!ideal::of({p2("xy")}).is_m_primary());
  CHECK(!ideal::of({p2("1")}).is_m_primary());
  CHECK_THROWS_AS((void)ideal::of({p2("xy")}).truncation_index(), not_m_primary);

  // (x^2 + x^3, y) also vanishes at (-1, 0), so it is not primary to the origin
  CHECK(!ideal::of({p2("x^2+x^3"), p2("y")}).is_m_primary());

  // order-one generators are fine: (x^2-2z, xyz, y+z) collapses to k[x]/(x^5)
  const ideal low = ideal::of({p3("x^2-2z"), p3("xyz"), p3("y+z")});
  CHECK(low.is_m_primary());
  CHECK(low.truncation_index() == 5);
  const auto lp = low.least_pure_powers();
  REQUIRE(lp.has_value());
  CHECK(*lp == std::vector<std::size_t>{5, 3, 3});
  CHECK(low.contains(p3("x^4-4z^2")));  // (x^2+2z)(x^2-2z)
  CHECK(!low.contains(p3("x^3")));
  CHECK(!low.contains(p3("x^2+y^2+z^2")));
  // genuinely inhomogeneous m-primary example: (y + x^2, x^3)
  const ideal j = ideal::of({p2("y+x^2"), p2("x^3")});
  CHECK(j.is_m_primary());
  CHECK(j.truncation_index() == 3);  // x^2 is not inside, but m^3 is
  const auto jp = j.least_pure_powers();
  REQUIRE(jp.has_value());
  CHECK(*jp == std::vector<std::size_t>{3, 2});
}

TEST_CASE("standard monomials and least pure powers") {
  const ideal i = ideal::of({p2("x^2"), p2("y^2")});
  const auto mons = i.standard_monomials();
  REQUIRE(mons.size() == 4);
  CHECK(mons[0] == monomial({1, 1}));
  CHECK(mons[1] == monomial({1, 0}));
  CHECK(mons[2] == monomial({0, 1}));
  CHECK(mons[3] == monomial({0, 0}));

  const ideal j = ideal::of({p2("x^2"), p2("y^3")});
  const auto powers = j.least_pure_powers();
  REQUIRE(powers.has_value());
  CHECK(*powers == std::vector<std::size_t>{2, 3});

  CHECK(!ideal::of({p2("xy")}).least_pure_powers().has_value());
  CHECK_THROWS_AS((void)ideal::of({p2("xy")}).standard_monomials(), not_artinian);

  // x^2 - y^3 alone has no pure power of anything, but adding y^4 closes up
  const ideal k = ideal::of({p2("x^2-y^3"), p2("y^4")});
  const auto pk = k.least_pure_powers();
  REQUIRE(pk.has_value());
  CHECK((*pk)[1] == 4);
  CHECK(k.contains(p2("x^4")));  // (x^2)^2 = (y^3)^2 = y^2 * y^4 in the ideal
}

TEST_CASE("ideal products and sums") {
  const ideal i = ideal::of({p2("x^2"), p2("y^2")});
  const ideal mi = times_maximal(i);
  REQUIRE(mi.generators().size() == 4);
  CHECK(mi.generators()[0] == p2("x^3"));
  CHECK(mi.generators()[1] == p2("x^2y"));
  CHECK(mi.generators()[2] == p2("xy^2"));
  CHECK(mi.generators()[3] == p2("y^3"));
  CHECK(mi.contains(p2("x^3+y^3")));
  CHECK(!mi.contains(p2("x^2")));
  CHECK(mi.truncation_index() == 3);  // m*(x^2, y^2) is exactly m^3

  const ideal s = sum(ideal::of({p2("x^2")}), ideal::of({p2("y")}));
  CHECK(s.contains(p2("x^2+3y")));
  CHECK(!s.contains(p2("x")));
}

TEST_CASE("minimal generating sets: homogeneous certified branch") {
  const auto t = minimal_generators(parse_all({"x^2", "x^2+y^2", "y^2", "xy"}, xy));
  CHECK(t.certified);
  CHECK(t.kept == std::vector<std::size_t>{1, 2, 3});
  REQUIRE(t.gens.size() == 3);
  CHECK(t.gens[0] == p2("x^2+y^2"));

  // zero generators are discarded before anything else
  const auto z = minimal_generators({p2("0"), p2("x^2"), polynomial::zero(qq, 2)});
  CHECK(z.kept == std::vector<std::size_t>{1});
  CHECK(z.certified);
}

TEST_CASE("minimal generating sets: m-primary inhomogeneous certified branch") {
  const auto t = minimal_generators(parse_all({"x^2", "y^2", "x^2+y^2+x^3"}, xy));
  CHECK(t.certified);
  CHECK(t.kept == std::vector<std::size_t>{0, 1});
  // the third generator equals x^2 + y^2 modulo m * (x^2, y^2)
}

TEST_CASE("minimal generating sets: uncertified fallback") {
  const auto t = minimal_generators(parse_all({"xy", "x+x^2"}, xy));
  CHECK(!t.certified);
  CHECK(t.kept == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS((void)minimal_generators({p2("0")}), empty_after_trim);
  CHECK_THROWS_AS((void)minimal_generators({}), empty_after_trim);
}

TEST_CASE("truncated algebra coordinates") {
  const truncated_algebra ta(qq, 2, 2);
  REQUIRE(ta.dim() == 6);
  CHECK(ta.monomial_at(0) == monomial({2, 0}));  // x^2 > xy > y^2 > x > y > 1
  CHECK(ta.monomial_at(1) == monomial({1, 1}));
  CHECK(ta.monomial_at(2) == monomial({0, 2}));
  CHECK(ta.monomial_at(3) == monomial({1, 0}));
  CHECK(ta.monomial_at(4) == monomial({0, 1}));
  CHECK(ta.monomial_at(5) == monomial({0, 0}));
  CHECK(ta.index_of(monomial({0, 2})) == 2);

  const auto v = ta.coords(p2("x^2+3y"));
  CHECK(v[0] == scalar::one(qq));
  CHECK(v[4] == scalar::of_int(qq, 3));
  CHECK(v[1].is_zero());

  // terms above the level are dropped
  const auto w = ta.coords(p2("x^3+y"));
  CHECK(w[0].is_zero());
  CHECK(w[4] == scalar::one(qq));
}
