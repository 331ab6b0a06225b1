#include "doctest.h"

#include <vector>

#include "cohsup/support.hpp"

using namespace cohsup;

namespace {

const field_spec qq = field_spec::rationals();
const std::vector<std::string> xyz = {"x", "y", "z"};

std::vector<polynomial> parse_all(const std::vector<std::string>& texts,
                                  const std::vector<std::string>& vars,
                                  const field_spec& f = qq) {
  std::vector<polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, vars, f));
  return out;
}

presentation shortgor() {
  return make_presentation(
      qq, xyz, parse_all({"x^2-y^2", "x^2-z^2", "xy", "xz", "yz"}, xyz), false);
}

presentation thomas() {
  return make_presentation(qq, xyz, parse_all({"x^2+y^2+z^2", "xyz", "x^3"}, xyz), false);
}

ideal j_of(const std::vector<std::string>& texts, const std::vector<std::string>& vars) {
  return ideal::of(parse_all(texts, vars));
}

std::vector<scalar> vec(std::initializer_list<const char*> vals) {
  std::vector<scalar> out;
  for (const char* v : vals) out.push_back(scalar::parse(qq, v));
  return out;
}

}  // namespace

TEST_CASE("presentation statistics for an equipresented ring") {
  const presentation p = shortgor();
  CHECK(p.n == 5);
  CHECK(p.d == 2);
  CHECK(p.c == 5);
  CHECK(p.orders == std::vector<std::size_t>{2, 2, 2, 2, 2});
  CHECK(p.min_order_idx == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(p.homogeneous);
  CHECK(p.minimality_certified);
  CHECK(p.lowest_forms_independent);

  const analysis_report r = analyze(p);
  CHECK(r.e == 3);
  CHECK(r.equipresented);
  CHECK(r.lhs == 0);
  CHECK(r.lhs_exact);
  CHECK(r.complete_intersection == tri::no);
  CHECK(r.large_support(1));
}

TEST_CASE("presentation statistics with mixed orders") {
  const presentation p = thomas();
  CHECK(p.n == 3);
  CHECK(p.d == 2);
  CHECK(p.c == 1);
  CHECK(p.orders == std::vector<std::size_t>{2, 3, 3});
  CHECK(p.min_order_idx == std::vector<std::size_t>{0});
  CHECK(p.homogeneous);
  CHECK(p.minimality_certified);

  const analysis_report r = analyze(p);
  CHECK(!r.equipresented);
  CHECK(r.lhs == 2);
  CHECK(r.complete_intersection == tri::no);  // dim R = 1, so e - dim = 2 < 3 = n
  CHECK(!r.large_support(2));
  CHECK(r.large_support(3));
}

TEST_CASE("complete intersections and undecidable cases") {
  const std::vector<std::string> xy = {"x", "y"};
  const presentation ci = make_presentation(qq, xy, parse_all({"x^2", "y^2"}, xy), false);
  CHECK(analyze(ci).complete_intersection == tri::yes);

  const presentation hyper = make_presentation(qq, xy, parse_all({"x^2+x^3"}, xy), true);
  CHECK(analyze(hyper).complete_intersection == tri::unknown);
  CHECK(!hyper.minimality_certified);
}

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(
      (void)make_presentation(qq, {}, {}, false), invalid_presentation);
  CHECK_THROWS_AS(
      (void)make_presentation(qq, {"x", "x"}, parse_all({"xx"}, {"x", "x"}), false),
      invalid_presentation);
  CHECK_THROWS_AS(
      (void)make_presentation(qq, {"x", "2y"}, {}, false), invalid_presentation);
  const std::vector<std::string> many(17, "v");
  CHECK_THROWS_AS((void)make_presentation(qq, many, {}, false), invalid_presentation);

  // order-1 generator: the ideal must sit inside the square of the maximal ideal
  CHECK_THROWS_AS(
      (void)make_presentation(qq, {"x", "y"}, parse_all({"x+y^2"}, {"x", "y"}), false),
      invalid_presentation);

  // minimality cannot be certified for this inhomogeneous non-artinian input
  CHECK_THROWS_AS(
      (void)make_presentation(qq, {"x", "y"}, parse_all({"xy+x^3"}, {"x", "y"}), false),
      minimality_not_certified);
  CHECK_NOTHROW(
      (void)make_presentation(qq, {"x", "y"}, parse_all({"xy+x^3"}, {"x", "y"}), true));

  CHECK_THROWS_AS(
      (void)make_presentation(qq, {"x"},
                              parse_all({"x^2"}, {"x"}, field_spec::prime(7)), false),
      field_mismatch);
}

TEST_CASE("redundant input generators are trimmed") {
  const presentation p = make_presentation(
      qq, xyz, parse_all({"x^2", "y^2", "x^2+y^2", "z^2"}, xyz), false);
  CHECK(p.n == 3);
  CHECK(p.minimality_certified);
  CHECK(analyze(p).complete_intersection == tri::yes);
}

TEST_CASE("dependent lowest forms are detected") {
  const std::vector<std::string> xy = {"x", "y"};
  const presentation p = make_presentation(
      qq, xy, parse_all({"x^2+x^3", "x^2+y^3"}, xy), true);
  CHECK(p.c == 2);
  CHECK(!p.lowest_forms_independent);
  CHECK(!analyze(p).lhs_exact);
}

TEST_CASE("kernel of I/mI -> J/mJ: one-generator collapse") {
  const presentation p = thomas();
  // J = (x^2+y^2+z^2, y, x^3): the class of xyz dies, the other two survive
  const kernel_subspace k = kernel_map(p, j_of({"x^2+y^2+z^2", "y", "x^3"}, xyz));
  CHECK(k.k.ambient() == 3);
  REQUIRE(k.k.dim() == 1);
  CHECK(k.k.basis().front() == vec({"0", "1", "0"}));
  CHECK(k.truncation_level >= 2);
}

TEST_CASE("kernels of two quotients meeting only at zero") {
  const presentation p = thomas();
  const kernel_subspace k1 = kernel_map(p, j_of({"x^2+y^2+z^2", "y", "x^3"}, xyz));
  const kernel_subspace k2 = kernel_map(p, j_of({"x^2+2z^2", "xyz", "y+z"}, xyz));
  CHECK(!k2.k.contains(vec({"0", "1", "0"})));
  // x^3 = x(x^2+2z^2) - 2xz^2 and xz(y+z) = xyz + xz^2, so x^3 - 2xyz in mJ
  REQUIRE(k2.k.dim() == 1);
  CHECK(k2.k.basis().front() == vec({"0", "1", "-1/2"}));
  CHECK(intersect(k1.k, k2.k).dim() == 0);
}

TEST_CASE("kernel hyperplanes along the equipresented walk") {
  const presentation p = shortgor();
  const std::vector<std::vector<std::string>> quotients = {
      {"x^2-y^2", "y-z", "x"},
      {"y^2-z^2", "y", "x"},
      {"xy", "x-y", "x-z"},
      {"x^2-y^2+yz-xy", "y-z", "x-y-z"},
      {"xy-xz", "y", "x-z"},
  };
  const std::vector<std::vector<scalar>> normals = {
      vec({"1", "1", "0", "0", "-1"}),
      vec({"0", "1", "0", "0", "0"}),
      vec({"0", "0", "1", "1", "1"}),
      vec({"1", "1", "2/3", "2/3", "1/3"}),
      vec({"1", "0", "0", "1", "0"}),
  };
  subspace running = subspace::full(qq, 5);
  for (std::size_t r = 0; r < quotients.size(); ++r) {
    const kernel_subspace k = kernel_map(p, j_of(quotients[r], xyz));
    REQUIRE(k.k.dim() == 4);
    const subspace ann = annihilator(k.k);
    REQUIRE(ann.dim() == 1);
    CHECK(ann.basis().front() == normals[r]);
    running = intersect(running, k.k);
    CHECK(running.dim() == 4 - r);
  }
  CHECK(running.dim() == 0);
}

TEST_CASE("kernel map preconditions") {
  const presentation p = shortgor();
  CHECK_THROWS_AS((void)kernel_map(p, j_of({"x^2", "y^2", "z^2"}, xyz)), not_contained);
  CHECK_THROWS_AS((void)kernel_map(p, j_of({"x", "y"}, xyz)), not_artinian);
  CHECK_THROWS_AS(
      (void)kernel_map(p, j_of({"x^2", "y^2"}, {"x", "y"})), arity_mismatch);

  // artinian but not primary to the origin: the support contains a second point
  const presentation q =
      make_presentation(qq, {"x"}, parse_all({"x^2-x^3"}, {"x"}), true);
  CHECK_THROWS_AS((void)kernel_map(q, j_of({"x^2-x^3"}, {"x"})), not_m_primary);
}

TEST_CASE("membership in a minimal generating set of J") {
  const ideal j1 = j_of({"x^2+y^2+z^2", "y", "x^3"}, xyz);
  CHECK(is_minimal_in(j1, parse_polynomial("x^2+y^2+z^2", xyz, qq)));
  CHECK(!is_minimal_in(j1, parse_polynomial("xyz", xyz, qq)));    // xyz = (xz) * y
  CHECK(!is_minimal_in(j1, parse_polynomial("x^2", xyz, qq)));    // not in J at all
  CHECK(!is_minimal_in(j1, polynomial::zero(qq, 3)));

  const ideal j2 = j_of({"x^2+2z^2", "xyz", "y+z"}, xyz);
  CHECK(is_minimal_in(j2, parse_polynomial("xyz", xyz, qq)));
  CHECK(is_minimal_in(j2, parse_polynomial("y+z", xyz, qq)));
  // x^3 lies in J and stays minimal: x^3 = x(x^2+2z^2) - 2x z^2 = 2xyz mod mJ
  CHECK(is_minimal_in(j2, parse_polynomial("x^3", xyz, qq)));
  CHECK(!is_minimal_in(j2, parse_polynomial("y^2+yz", xyz, qq)));  // y(y+z) lands in mJ
}
