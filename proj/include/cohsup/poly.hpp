#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cohsup/scalar.hpp"

namespace cohsup {

inline constexpr std::size_t max_arity = 16;

class monomial {
 public:
  monomial() = default;
  explicit monomial(std::vector<std::uint32_t> exps);
  static monomial unit(std::size_t arity);
  static monomial variable(std::size_t arity, std::size_t i);

  std::size_t arity() const { return exps_.size(); }
  std::uint32_t exp(std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exps() const { return exps_; }
  std::uint32_t degree() const { return deg_; }
  bool is_unit() const { return deg_ == 0; }

  monomial operator*(const monomial& o) const;
  bool divides(const monomial& o) const;
  monomial quotient_by(const monomial& o) const;  // pre: o divides *this
  static monomial lcm(const monomial& a, const monomial& b);
  bool coprime_with(const monomial& o) const;

  std::vector<std::size_t> support() const;

  bool operator==(const monomial&) const = default;
  bool operator<(const monomial& o) const { return exps_ < o.exps_; }  // container key only

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t deg_ = 0;
};

enum class order_kind : std::uint8_t { grevlex, lex };

struct monomial_order {
  order_kind kind = order_kind::grevlex;

  // <0, 0, >0 as a is below, equal to, above b
  int compare(const monomial& a, const monomial& b) const;
  bool less(const monomial& a, const monomial& b) const { return compare(a, b) < 0; }
  bool operator==(const monomial_order&) const = default;
};

// terms kept strictly descending in the attached order; zero = empty term list
class polynomial {
 public:
  using term = std::pair<monomial, scalar>;

  polynomial() = default;
  static polynomial zero(const field_spec& f, std::size_t arity, monomial_order ord = {});
  static polynomial constant(const scalar& c, std::size_t arity, monomial_order ord = {});
  static polynomial single(const scalar& c, const monomial& m, monomial_order ord = {});
  // collects duplicates, drops zero coefficients, sorts
  static polynomial from_terms(const field_spec& f, std::size_t arity,
                               std::vector<term> terms, monomial_order ord = {});

  const std::vector<term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t arity() const { return arity_; }
  const field_spec& field() const { return field_; }
  const monomial_order& order() const { return order_; }

  const monomial& leading_monomial() const;  // pre: nonzero
  const scalar& leading_coeff() const;       // pre: nonzero

  polynomial operator-() const;
  polynomial operator+(const polynomial& o) const;
  polynomial operator-(const polynomial& o) const;
  polynomial operator*(const polynomial& o) const;
  polynomial scaled(const scalar& c) const;
  polynomial times_term(const scalar& c, const monomial& m) const;
  polynomial monic() const;  // pre: nonzero

  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::uint32_t total_degree() const;  // pre: nonzero
  polynomial with_order(monomial_order ord) const;
  // terms of degree <= level
  polynomial truncated(std::uint32_t level) const;

  bool operator==(const polynomial& o) const;
  bool operator!=(const polynomial& o) const { return !(*this == o); }

 private:
  std::vector<term> terms_;
  std::size_t arity_ = 0;
  field_spec field_{};
  monomial_order order_{};

  void check_compatible(const polynomial& o) const;
  friend polynomial normalized(polynomial p);
};

// m-adic order: least total degree of a term; zero_polynomial on 0
std::size_t ord(const polynomial& f);
// sum of the minimal-degree terms (the class of f in gr_m(Q)); zero_polynomial on 0
polynomial lowest_form(const polynomial& f);

// grammar:  poly := ['-'] term (('+'|'-') term)*
//           term := coeff | coeff '*'? factor+ | factor+
//           factor := var ('^' uint)?     coeff := uint | uint '/' uint
// variables are matched longest-first from `vars`; juxtaposition multiplies
polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars,
                            const field_spec& f, monomial_order ord = {});

// canonical: descending grevlex, unit coefficients suppressed, '^', no '*'
std::string to_string(const polynomial& f, const std::vector<std::string>& vars);

}  // namespace cohsup
