#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cohsup {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// -- scalar ------------------------------------------------------------------

struct division_by_zero : error {
  division_by_zero() : error("division by zero") {}
};

struct field_mismatch : error {
  field_mismatch() : error("operands belong to different fields") {}
};

struct invalid_field : error {
  using error::error;
};

// -- poly --------------------------------------------------------------------

struct syntax_error : error {
  std::size_t position;
  syntax_error(std::size_t pos, const std::string& msg)
      : error("syntax error at position " + std::to_string(pos) + ": " + msg),
        position(pos) {}
};

struct unknown_variable : error {
  std::string name;
  std::size_t position;
  unknown_variable(std::string var, std::size_t pos)
      : error("unknown variable '" + var + "' at position " + std::to_string(pos)),
        name(std::move(var)), position(pos) {}
};

struct arity_mismatch : error {
  arity_mismatch() : error("operands have different variable arity") {}
};

struct zero_polynomial : error {
  zero_polynomial() : error("operation undefined for the zero polynomial") {}
};

// -- gb ----------------------------------------------------------------------

struct not_m_primary : error {
  not_m_primary() : error("ideal is not primary to the maximal ideal at the origin") {}
};

struct empty_after_trim : error {
  empty_after_trim() : error("generating set is empty after discarding zero generators") {}
};

// -- linalg ------------------------------------------------------------------

struct ambient_mismatch : error {
  ambient_mismatch() : error("subspaces live in different ambient spaces") {}
};

// -- support / construct -----------------------------------------------------

struct invalid_presentation : error {
  using error::error;
};

struct not_contained : error {
  using error::error;
};

struct not_artinian : error {
  not_artinian() : error("quotient by the ideal is not artinian") {}
};

struct order_too_small : error {
  order_too_small() : error("hypersurface generator must have order at least 2") {}
};

struct search_exhausted : error {
  using error::error;
};

struct missing_span_bound : error {
  missing_span_bound()
      : error("presentation is not equipresented: a span-dimension bound is required") {}
};

struct not_monomial : error {
  using error::error;
};

struct supports_comparable : error {
  using error::error;
};

struct degenerate_parameters : error {
  using error::error;
};

struct field_too_small : error {
  field_too_small()
      : error("randomized construction needs the rationals or a prime field with p >= 101") {}
};

// -- cert / io ---------------------------------------------------------------

struct not_regular_sequence : error {
  using error::error;
};

struct malformed_certificate : error {
  using error::error;
};

struct invalid_ring_file : error {
  using error::error;
};

struct minimality_not_certified : error {
  minimality_not_certified()
      : error("minimality not certifiable for non-m-primary inhomogeneous ideal; "
              "pass --assume-minimal (or set assume_minimal in the ring file) to proceed") {}
};

// internal cross-check between two independent computation routes failed;
// indicates a bug, never expected on valid input
struct cross_check_failed : error {
  using error::error;
};

}  // namespace cohsup
