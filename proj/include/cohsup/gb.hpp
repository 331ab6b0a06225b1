#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "cohsup/linalg.hpp"
#include "cohsup/poly.hpp"

namespace cohsup {

// full reduction against an arbitrary basis list (every term, first matching reducer)
polynomial normal_form(const polynomial& f, const std::vector<polynomial>& basis);

// Buchberger with Gebauer-Moller pair pruning; returns the unique reduced
// basis (monic, auto-reduced, sorted descending by leading monomial)
std::vector<polynomial> buchberger(const field_spec& f, std::size_t arity,
                                   const std::vector<polynomial>& gens,
                                   monomial_order ord = {});

// immutable; the reduced basis is computed once on first use and shared by copies
class ideal {
 public:
  ideal(const field_spec& f, std::size_t arity, std::vector<polynomial> gens,
        monomial_order ord = {});
  static ideal of(std::vector<polynomial> gens);  // field/arity from first generator

  const std::vector<polynomial>& generators() const { return gens_; }
  const std::vector<polynomial>& reduced_basis() const;

  polynomial normal_form(const polynomial& f) const;
  bool contains(const polynomial& f) const;
  bool is_proper() const;

  // combinatorial dimension of Q/I via maximal independent variable sets of
  // the leading-term ideal; the zero ring (unit ideal) reports 0
  std::size_t krull_dim() const;

  // support of Q/I is exactly the origin: dimension zero and a pure power of
  // every variable in I (equivalent to nilpotency of every multiplication
  // operator on the finite-dimensional quotient)
  bool is_m_primary() const;

  // least N with m^N contained in I; not_m_primary if unavailable
  std::size_t truncation_index() const;

  // monomials outside the leading-term ideal; pre: krull_dim() == 0, proper
  std::vector<monomial> standard_monomials() const;

  // least t with x_i^t in I for each i, bounded by dim_k Q/I; nullopt if some
  // variable has no such power
  std::optional<std::vector<std::size_t>> least_pure_powers() const;

  const field_spec& field() const { return field_; }
  std::size_t arity() const { return arity_; }
  const monomial_order& order() const { return order_; }

 private:
  field_spec field_;
  std::size_t arity_;
  monomial_order order_;
  std::vector<polynomial> gens_;

  struct cache {
    std::once_flag once;
    std::vector<polynomial> basis;
  };
  std::shared_ptr<cache> cache_;
};

// m * I, generators x_i * g_j (generator-major, variable-minor)
ideal times_maximal(const ideal& i);
ideal sum(const ideal& a, const ideal& b);

struct trim_result {
  std::vector<polynomial> gens;   // surviving subset, input order preserved
  std::vector<std::size_t> kept;  // indices into the input list
  bool certified;                 // minimality proven, not just irredundancy
};

// minimal generating set of (gens) as an ideal of the local ring at the origin.
// homogeneous input: iterative irredundancy (graded Nakayama) - certified.
// inhomogeneous m-primary input: basis selection in I/mI computed inside the
// truncated algebra - certified. otherwise: global irredundancy only.
trim_result minimal_generators(const std::vector<polynomial>& gens);

// k[x_1..x_e] truncated beyond total degree `level`, with its monomial basis
// (descending grevlex); coordinates of truncated polynomials live here
class truncated_algebra {
 public:
  truncated_algebra(const field_spec& f, std::size_t arity, std::size_t level);

  std::size_t dim() const { return basis_.size(); }
  std::size_t level() const { return level_; }
  std::size_t arity() const { return arity_; }
  const field_spec& field() const { return field_; }

  const monomial& monomial_at(std::size_t i) const { return basis_[i]; }
  std::size_t index_of(const monomial& m) const;
  std::vector<scalar> coords(const polynomial& f) const;  // drops terms above level

 private:
  field_spec field_;
  std::size_t arity_, level_;
  std::vector<monomial> basis_;
  std::vector<std::pair<monomial, std::size_t>> index_;  // sorted for lookup
};

}  // namespace cohsup
