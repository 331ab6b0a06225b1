#include "cohsup/scalar.hpp"

#include <cctype>

namespace cohsup {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(u128(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // this base set is exact for every n < 2^64
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

field_spec field_spec::prime(std::uint64_t p) {
  if (p <= 2 || p >= (1ull << 62))
    throw invalid_field("prime modulus must satisfy 2 < p < 2^62");
  if (!is_prime_u64(p))
    throw invalid_field("modulus " + std::to_string(p) + " is not prime");
  return {field_kind::prime, p};
}

std::string field_spec::name() const {
  return kind == field_kind::rationals ? "QQ" : "F_" + std::to_string(p);
}

scalar scalar::zero(const field_spec& f) {
  scalar s;
  s.field_ = f;
  return s;
}

scalar scalar::one(const field_spec& f) {
  scalar s;
  s.field_ = f;
  if (f.kind == field_kind::rationals)
    s.rat_ = 1;
  else
    s.res_ = 1 % f.p;
  return s;
}

scalar scalar::of_int(const field_spec& f, long long v) {
  scalar s;
  s.field_ = f;
  if (f.kind == field_kind::rationals) {
    s.rat_ = static_cast<long>(v);
  } else {
    long long m = v % static_cast<long long>(f.p);
    if (m < 0) m += static_cast<long long>(f.p);
    s.res_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

scalar scalar::of_fraction(const field_spec& f, long long num, long long den) {
  if (den == 0) throw division_by_zero{};
  return of_int(f, num) / of_int(f, den);
}

scalar scalar::parse(const field_spec& f, const std::string& text) {
  // [-] digits [/ digits]
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) throw invalid_field("bad scalar literal '" + text + "'");
  std::string num = text.substr(num_begin, i - num_begin);
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin) throw invalid_field("bad scalar literal '" + text + "'");
    den = text.substr(den_begin, i - den_begin);
  }
  if (i != text.size()) throw invalid_field("bad scalar literal '" + text + "'");

  if (f.kind == field_kind::rationals) {
    mpq_class q(num + "/" + den);
    if (q.get_den() == 0) throw division_by_zero{};
    q.canonicalize();
    scalar s;
    s.field_ = f;
    s.rat_ = neg ? mpq_class(-q) : q;
    return s;
  }
  mpz_class zn(num), zd(den);
  std::uint64_t rn = mpz_fdiv_ui(zn.get_mpz_t(), f.p);
  std::uint64_t rd = mpz_fdiv_ui(zd.get_mpz_t(), f.p);
  scalar s = of_int(f, static_cast<long long>(rn)) / of_int(f, static_cast<long long>(rd));
  return neg ? -s : s;
}

bool scalar::is_zero() const {
  return field_.kind == field_kind::rationals ? rat_ == 0 : res_ == 0;
}

bool scalar::is_one() const {
  return field_.kind == field_kind::rationals ? rat_ == 1 : res_ == 1;
}

scalar scalar::operator-() const {
  scalar s = *this;
  if (field_.kind == field_kind::rationals)
    s.rat_ = -rat_;
  else
    s.res_ = res_ == 0 ? 0 : field_.p - res_;
  return s;
}

scalar scalar::operator+(const scalar& o) const {
  check_same(o);
  scalar s = *this;
  if (field_.kind == field_kind::rationals) {
    s.rat_ = rat_ + o.rat_;
  } else {
    std::uint64_t r = res_ + o.res_;  // p < 2^62, no overflow
    if (r >= field_.p) r -= field_.p;
    s.res_ = r;
  }
  return s;
}

scalar scalar::operator-(const scalar& o) const { return *this + (-o); }

scalar scalar::operator*(const scalar& o) const {
  check_same(o);
  scalar s = *this;
  if (field_.kind == field_kind::rationals)
    s.rat_ = rat_ * o.rat_;
  else
    s.res_ = mulmod(res_, o.res_, field_.p);
  return s;
}

scalar scalar::inverse() const {
  if (is_zero()) throw division_by_zero{};
  scalar s = *this;
  if (field_.kind == field_kind::rationals)
    s.rat_ = 1 / rat_;
  else
    s.res_ = powmod(res_, field_.p - 2, field_.p);
  return s;
}

scalar scalar::operator/(const scalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

bool scalar::operator==(const scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.kind == field_kind::rationals ? rat_ == o.rat_ : res_ == o.res_;
}

std::string scalar::str() const {
  return field_.kind == field_kind::rationals ? rat_.get_str() : std::to_string(res_);
}

const mpq_class& scalar::rat() const {
  if (field_.kind != field_kind::rationals) throw field_mismatch{};
  return rat_;
}

std::uint64_t scalar::residue() const {
  if (field_.kind != field_kind::prime) throw field_mismatch{};
  return res_;
}

std::uint64_t rng::below(std::uint64_t bound) {
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return v % bound;
}

scalar sample(rng& r, const field_spec& f, std::uint64_t bound) {
  if (f.kind == field_kind::prime) return scalar::of_int(f, static_cast<long long>(r.below(f.p)));
  const std::uint64_t span = 2 * bound + 1;
  return scalar::of_int(f, static_cast<long long>(r.below(span)) - static_cast<long long>(bound));
}

}  // namespace cohsup
