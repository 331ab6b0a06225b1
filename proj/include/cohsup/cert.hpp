#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohsup/support.hpp"
#include "json.hpp"

namespace cohsup {

enum class witness_mode : std::uint8_t { algorithm, manual, monomial, truncated };

std::string to_string(witness_mode m);
witness_mode mode_from_string(const std::string& s);

struct search_config {
  std::uint64_t seed = 0;
  std::size_t max_attempts = 200;
  // for rational sampling; doubled after every block of 50 rejected attempts
  std::uint64_t coeff_bound = 10;
  std::optional<std::size_t> span_dim;
};

// one artinian quotient J together with its kernel and the intersection so far.
// coords and g are present when g was chosen as a combination of the
// presentation generators (algorithm, monomial and truncated modes); a manual
// step records only the quotient.
struct witness_step {
  std::size_t index = 0;  // 1-based
  std::optional<std::vector<scalar>> coords;
  std::optional<polynomial> g;
  std::vector<polynomial> quotient_gens;
  subspace ker;
  std::optional<std::size_t> truncation_level;
  subspace running;
};

struct certificate {
  field_spec field;
  std::vector<std::string> variables;
  std::vector<polynomial> gens;
  std::vector<std::size_t> orders;
  std::size_t d = 0;
  std::size_t c = 0;
  std::size_t n = 0;
  bool assume_minimal = false;
  witness_mode mode = witness_mode::manual;
  search_config config;
  std::vector<witness_step> steps;
  subspace final_intersection;
  std::string status;
  std::vector<std::string> premises;
};

inline constexpr const char* status_equigenerated = "witness-found-equigenerated";
inline constexpr const char* status_bounded = "witness-found-bounded";
inline constexpr const char* status_full_support = "witness-found-full-support";
inline constexpr const char* status_inconclusive = "inconclusive";
inline constexpr const char* status_ci = "complete-intersection";

// the status is a pure function of the recorded data, so a verifier can
// recompute it
std::string status_of(witness_mode mode, tri complete_intersection, std::size_t final_dim,
                      const std::optional<std::size_t>& span_dim);

// statements of the theory a certificate's conclusion relies on; recorded
// verbatim in every certificate
std::vector<std::string> premise_notes(witness_mode mode);

// presentation echo plus premises, with no steps and status unset
certificate base_certificate(const presentation& p, witness_mode mode);

// kernels and intersections for hand-supplied quotient ideals; each list must
// contain exactly arity-many generators and cut out an artinian quotient
certificate manual_certificate(const presentation& p,
                               const std::vector<std::vector<polynomial>>& quotient_lists,
                               const std::optional<std::size_t>& span_dim);

struct check_result {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct verification_report {
  std::vector<check_result> checks;
  bool passed() const;
  const check_result* first_failure() const;
};

// re-derives every claim in the certificate from the presentation alone:
// membership via Groebner bases, kernels via kernel_map, intersections and
// status recomputed and compared against the recorded values
verification_report verify(const certificate& cert, const presentation& p);

nlohmann::ordered_json certificate_to_json(const certificate& cert);
certificate certificate_from_json(const nlohmann::ordered_json& j);  // throws malformed_certificate

// canonical serialization; equal certificates produce identical bytes
std::string certificate_to_bytes(const certificate& cert);

}  // namespace cohsup
