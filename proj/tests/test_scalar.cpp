#include "doctest.h"

#include "cohsup/scalar.hpp"

using namespace cohsup;

TEST_CASE("rational arithmetic is exact") {
  const field_spec qq = field_spec::rationals();
  const scalar a = scalar::of_fraction(qq, 1, 2);
  const scalar b = scalar::of_fraction(qq, 1, 3);
  CHECK((a + b).str() == "5/6");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/6");
  CHECK((a / b).str() == "3/2");
  CHECK((-a).str() == "-1/2");
  CHECK(scalar::of_fraction(qq, -4, 6).str() == "-2/3");
  CHECK(scalar::of_int(qq, 0).is_zero());
  CHECK(scalar::of_fraction(qq, 3, 3).is_one());
  CHECK_THROWS_AS((void)(a / scalar::zero(qq)), division_by_zero);
  CHECK_THROWS_AS((void)scalar::zero(qq).inverse(), division_by_zero);
}

TEST_CASE("rational parsing round trips") {
  const field_spec qq = field_spec::rationals();
  CHECK(scalar::parse(qq, "-7/14").str() == "-1/2");
  CHECK(scalar::parse(qq, "42").str() == "42");
  CHECK(scalar::parse(qq, "0").is_zero());
  for (const char* text : {"5/6", "-3", "123456789123456789"})
    CHECK(scalar::parse(qq, text).str() == text);
}

TEST_CASE("prime field arithmetic") {
  const field_spec f7 = field_spec::prime(7);
  const scalar a = scalar::of_int(f7, 3);
  const scalar b = scalar::of_int(f7, 5);
  CHECK((a + b).residue() == 1);
  CHECK((a - b).residue() == 5);
  CHECK((a * b).residue() == 1);
  CHECK((a / b).residue() == 2);
  CHECK(b.inverse().residue() == 3);
  CHECK(scalar::of_int(f7, -1).residue() == 6);
  CHECK(scalar::parse(f7, "10").residue() == 3);
  CHECK(scalar::parse(f7, "1/2").residue() == 4);
  CHECK_THROWS_AS((void)scalar::parse(f7, "1/7"), division_by_zero);
}

TEST_CASE("field specs validate their modulus") {
  CHECK_THROWS_AS((void)field_spec::prime(6), invalid_field);
  CHECK_THROWS_AS((void)field_spec::prime(2), invalid_field);
  CHECK_THROWS_AS((void)field_spec::prime(1), invalid_field);
  CHECK(field_spec::prime(32003).p == default_prime);
  CHECK(field_spec::prime(3).name() == "F_3");
  CHECK(field_spec::rationals().name() == "QQ");
}

TEST_CASE("primality testing is exact on 64-bit inputs") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(!is_prime_u64(1));
  CHECK(!is_prime_u64(0));
  CHECK(is_prime_u64(32003));
  CHECK(!is_prime_u64(32001));
  CHECK(is_prime_u64((1ull << 61) - 1));       // Mersenne prime
  CHECK(!is_prime_u64((1ull << 61) + 1));      // 3 * 768614336404564651
  CHECK(!is_prime_u64(3215031751ull));         // strong pseudoprime to bases 2,3,5,7
  CHECK(is_prime_u64(18446744073709551557ull));  // largest 64-bit prime
}

TEST_CASE("mixed-field arithmetic is rejected") {
  const scalar q = scalar::one(field_spec::rationals());
  const scalar p = scalar::one(field_spec::prime(7));
  CHECK_THROWS_AS((void)(q + p), field_mismatch);
  CHECK_THROWS_AS((void)(q * p), field_mismatch);
}

TEST_CASE("rng streams are reproducible") {
  rng a(42), b(42);
  for (int i = 0; i < 200; ++i) CHECK(a.next_u64() == b.next_u64());
  rng c(7);
  for (int i = 0; i < 1000; ++i) CHECK(c.below(10) < 10);
}

TEST_CASE("sampling respects the field and the bound") {
  const field_spec qq = field_spec::rationals();
  rng a(3), b(3);
  for (int i = 0; i < 100; ++i) {
    const scalar x = sample(a, qq, 10);
    CHECK(x == sample(b, qq, 10));
    CHECK(x.rat().get_den() == 1);
    CHECK(x.rat().get_num() <= 10);
    CHECK(x.rat().get_num() >= -10);
  }
  const field_spec fp = field_spec::prime(default_prime);
  rng c(9);
  for (int i = 0; i < 100; ++i) CHECK(sample(c, fp, 10).residue() < default_prime);
}
