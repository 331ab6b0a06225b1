#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

#include "cohsup/errors.hpp"

namespace cohsup {

inline constexpr std::uint64_t default_prime = 32003;

// deterministic Miller-Rabin, exact for all 64-bit inputs
bool is_prime_u64(std::uint64_t n);

enum class field_kind : std::uint8_t { rationals, prime };

struct field_spec {
  field_kind kind = field_kind::rationals;
  std::uint64_t p = 0;  // modulus, prime kind only

  static field_spec rationals() { return {}; }
  static field_spec prime(std::uint64_t p);  // requires 2 < p < 2^62, p prime

  bool operator==(const field_spec&) const = default;
  std::string name() const;  // "QQ" or "F_<p>"
};

// exact field element: arbitrary-precision rational, or residue mod p.
// every value carries its field; mixed-field arithmetic raises field_mismatch.
class scalar {
 public:
  scalar() = default;  // 0 in QQ

  static scalar zero(const field_spec& f);
  static scalar one(const field_spec& f);
  static scalar of_int(const field_spec& f, long long v);
  static scalar of_fraction(const field_spec& f, long long num, long long den);
  // canonical decimal forms: "-3", "5/6" (rationals), "17" (residues)
  static scalar parse(const field_spec& f, const std::string& text);

  const field_spec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  scalar operator-() const;
  scalar operator+(const scalar& o) const;
  scalar operator-(const scalar& o) const;
  scalar operator*(const scalar& o) const;
  scalar operator/(const scalar& o) const;
  scalar inverse() const;

  scalar& operator+=(const scalar& o) { return *this = *this + o; }
  scalar& operator-=(const scalar& o) { return *this = *this - o; }
  scalar& operator*=(const scalar& o) { return *this = *this * o; }
  scalar& operator/=(const scalar& o) { return *this = *this / o; }

  bool operator==(const scalar& o) const;
  bool operator!=(const scalar& o) const { return !(*this == o); }

  std::string str() const;

  const mpq_class& rat() const;   // rationals only
  std::uint64_t residue() const;  // prime field only

 private:
  field_spec field_{};
  mpq_class rat_ = 0;
  std::uint64_t res_ = 0;

  void check_same(const scalar& o) const {
    if (field_ != o.field_) throw field_mismatch{};
  }
};

// seeded deterministic generator; bounded draws use rejection sampling so the
// stream does not depend on the standard library's distribution internals
class rng {
 public:
  explicit rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next_u64() { return gen_(); }
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound), bound > 0

 private:
  std::mt19937_64 gen_;
};

// uniform draw: rationals -> integer in [-bound, bound]; prime field -> residue
scalar sample(rng& r, const field_spec& f, std::uint64_t bound);

}  // namespace cohsup
