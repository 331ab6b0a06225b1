#pragma once

#include <string>
#include <vector>

#include "cohsup/gb.hpp"

namespace cohsup {

// a ring presented as Q/I: Q = k[x_1..x_e] local at the origin, I minimally
// generated by gens (user order preserved after trimming redundant input)
struct presentation {
  field_spec field;
  std::vector<std::string> variables;
  std::vector<polynomial> gens;
  std::vector<std::size_t> orders;         // ord(f_i)
  std::size_t d = 0;                       // min order
  std::size_t c = 0;                       // #generators of order d
  std::size_t n = 0;                       // #generators
  std::vector<std::size_t> min_order_idx;  // 0-based indices with ord == d
  bool homogeneous = false;
  bool minimality_certified = false;
  bool lowest_forms_independent = false;   // among the order-d generators
  ideal i;

  std::size_t arity() const { return variables.size(); }
};

// validates, trims to a minimal generating set, computes the order statistics.
// assume_minimal lets inputs through whose minimality cannot be certified
// (inhomogeneous, not m-primary); otherwise such inputs raise
// minimality_not_certified.
presentation make_presentation(const field_spec& f, std::vector<std::string> variables,
                               std::vector<polynomial> gens, bool assume_minimal);

enum class tri : std::uint8_t { no, yes, unknown };

struct analysis_report {
  std::size_t e = 0, n = 0, d = 0, c = 0;
  bool equipresented = false;
  tri complete_intersection = tri::unknown;
  // dim_k (m^{d+1} ∩ I)/(mI) = n - c; exact for homogeneous input, otherwise
  // contingent on the lowest forms of the order-d generators being independent
  std::size_t lhs = 0;
  bool lhs_exact = false;
  bool lowest_forms_independent = false;

  // the inequality that makes the construction conclusive against a support
  // of spanning dimension >= s
  bool large_support(std::size_t s) const { return lhs < s; }
};

analysis_report analyze(const presentation& p);

struct kernel_subspace {
  subspace k;                       // ker(I/mI -> J/mJ) in generator coordinates
  std::size_t truncation_level = 0; // level N used for the membership space
};

// the kernel of I/mI -> J/mJ for an artinian J containing I, computed by
// exact linear algebra in the truncated algebra at level N where
// N+1 = truncation_index(mJ)
kernel_subspace kernel_map(const presentation& p, const ideal& j);

// f belongs to a minimal generating set of J, i.e. f in J \ mJ.  the mJ
// membership runs through two independent routes (truncated linear algebra
// and direct Groebner reduction) which must agree.
bool is_minimal_in(const ideal& j, const polynomial& f);

}  // namespace cohsup
