#pragma once

#include <optional>

#include "cohsup/cert.hpp"

namespace cohsup {

// searches for J = (g, l_2, ..., l_e) with random linear forms l_i, accepting
// a candidate only when Q/J is artinian, J is m-primary, J contains every
// presentation generator and g stays a minimal generator of J.  The sampling
// bound doubles after every block of 50 rejected attempts.
ideal find_hypersurface_quotient(const presentation& p, const polynomial& g,
                                 const search_config& cfg);
// same, drawing from a caller-owned stream (used by the main loop so one seed
// drives the whole construction)
ideal find_hypersurface_quotient(const presentation& p, const polynomial& g,
                                 const search_config& cfg, rng& gen);

// the main loop: hypersurface quotients for combinations of the minimal-order
// generators until the restricted running intersection vanishes; at most c
// steps, each shrinking the intersection
certificate construct_witnesses(const presentation& p, const search_config& cfg);

// deterministic fast path for monomial generators with pairwise incomparable
// supports; one quotient per generator, kernels are coordinate hyperplanes
certificate monomial_witnesses(const presentation& p,
                               std::optional<std::size_t> span_dim = std::nullopt);

// true when monomial_witnesses applies to the presentation
bool monomial_route_applies(const presentation& p);

// the power-of-the-maximal-ideal family: I = m^s in d variables with the
// single quotient (x1^s, x2, ..., xd)
certificate truncated_witness(std::size_t d, std::size_t s,
                              const field_spec& f = field_spec::rationals());

}  // namespace cohsup
