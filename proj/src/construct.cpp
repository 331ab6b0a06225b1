#include "cohsup/construct.hpp"

#include <algorithm>

namespace cohsup {

namespace {

polynomial linear_form(const field_spec& f, std::size_t arity, const std::vector<scalar>& cs) {
  std::vector<polynomial::term> terms;
  for (std::size_t v = 0; v < arity; ++v)
    if (!cs[v].is_zero()) terms.emplace_back(monomial::variable(arity, v), cs[v]);
  return polynomial::from_terms(f, arity, std::move(terms));
}

polynomial combination(const presentation& p, const std::vector<scalar>& coords) {
  polynomial acc = polynomial::zero(p.field, p.arity());
  for (std::size_t i = 0; i < p.n; ++i) acc = acc + p.gens[i].scaled(coords[i]);
  return acc;
}

std::vector<scalar> unit_vector(const field_spec& f, std::size_t len, std::size_t i) {
  std::vector<scalar> v(len, scalar::zero(f));
  v[i] = scalar::one(f);
  return v;
}

bool acceptable(const presentation& p, const ideal& j, const polynomial& g) {
  if (j.krull_dim() != 0 || !j.is_m_primary()) return false;
  for (const auto& f : p.gens)
    if (!j.contains(f)) return false;
  return is_minimal_in(j, g);
}

}  // namespace

ideal find_hypersurface_quotient(const presentation& p, const polynomial& g,
                                 const search_config& cfg) {
  rng gen(cfg.seed);
  return find_hypersurface_quotient(p, g, cfg, gen);
}

ideal find_hypersurface_quotient(const presentation& p, const polynomial& g,
                                 const search_config& cfg, rng& gen) {
  if (g.is_zero() || ord(g) < 2) throw order_too_small{};
  if (!p.i.contains(g))
    throw not_contained("the hypersurface generator must lie in the presentation ideal");
  const std::size_t e = p.arity();
  if (e > 1 && p.field.kind == field_kind::prime && p.field.p < 101) throw field_too_small{};

  for (std::size_t attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    const std::uint64_t bound = cfg.coeff_bound << std::min<std::size_t>(attempt / 50, 40);
    std::vector<polynomial> cand;
    cand.reserve(e);
    cand.push_back(g);
    bool degenerate = false;
    for (std::size_t i = 1; i < e && !degenerate; ++i) {
      std::vector<scalar> cs;
      cs.reserve(e);
      for (std::size_t v = 0; v < e; ++v) cs.push_back(sample(gen, p.field, bound));
      polynomial l = linear_form(p.field, e, cs);
      if (l.is_zero())
        degenerate = true;
      else
        cand.push_back(std::move(l));
    }
    if (degenerate) continue;
    ideal j(p.field, e, cand);
    if (acceptable(p, j, g)) return j;
  }
  throw search_exhausted("no artinian hypersurface quotient found after " +
                         std::to_string(cfg.max_attempts) +
                         " attempts; raise --max-attempts or --coeff-bound, or work over a "
                         "larger field");
}

certificate construct_witnesses(const presentation& p, const search_config& cfg) {
  const analysis_report rep = analyze(p);
  if (p.c < p.n && !cfg.span_dim) throw missing_span_bound{};

  certificate cert = base_certificate(p, witness_mode::algorithm);
  cert.config = cfg;

  // nothing to search for over a complete intersection: no quotient can
  // witness anything, so report that instead of burning random attempts
  if (rep.complete_intersection == tri::yes) {
    cert.final_intersection = subspace::full(p.field, p.n);
    cert.status = status_of(cert.mode, rep.complete_intersection, p.n, cfg.span_dim);
    return cert;
  }

  rng gen(cfg.seed);

  subspace running = subspace::full(p.field, p.n);
  std::vector<scalar> coords = unit_vector(p.field, p.n, p.min_order_idx.front());
  polynomial g = p.gens[p.min_order_idx.front()];

  for (std::size_t r = 1;; ++r) {
    if (r > p.c) throw cross_check_failed("main loop ran past c steps");
    ideal j = find_hypersurface_quotient(p, g, cfg, gen);
    const kernel_subspace k = kernel_map(p, j);
    const subspace next = intersect(running, k.k);
    if (next.dim() >= running.dim())
      throw cross_check_failed("running intersection failed to shrink");

    witness_step step;
    step.index = r;
    step.coords = coords;
    step.g = g;
    step.quotient_gens = j.generators();
    step.ker = k.k;
    step.truncation_level = k.truncation_level;
    step.running = next;
    cert.steps.push_back(std::move(step));
    running = next;

    const subspace restricted = restrict_to_coordinates(running, p.min_order_idx);
    if (restricted.dim() == 0) break;

    // next combination: the first restricted RREF basis vector whose
    // combination keeps the minimal order (re-validated for inhomogeneous
    // presentations, where the order of a combination can jump)
    bool found = false;
    for (const auto& v : restricted.basis()) {
      polynomial candidate = combination(p, v);
      if (!candidate.is_zero() && ord(candidate) == p.d) {
        coords = v;
        g = std::move(candidate);
        found = true;
        break;
      }
    }
    if (!found)
      throw search_exhausted(
          "no restricted intersection basis vector yields a minimal-order combination");
  }

  cert.final_intersection = running;
  cert.status = status_of(cert.mode, rep.complete_intersection, running.dim(), cfg.span_dim);
  return cert;
}

bool monomial_route_applies(const presentation& p) {
  for (const auto& g : p.gens)
    if (!g.is_monomial()) return false;
  for (std::size_t i = 0; i < p.n; ++i) {
    const auto si = p.gens[i].leading_monomial().support();
    for (std::size_t jx = i + 1; jx < p.n; ++jx) {
      const auto sj = p.gens[jx].leading_monomial().support();
      if (std::includes(si.begin(), si.end(), sj.begin(), sj.end()) ||
          std::includes(sj.begin(), sj.end(), si.begin(), si.end()))
        return false;
    }
  }
  return true;
}

certificate monomial_witnesses(const presentation& p, std::optional<std::size_t> span_dim) {
  for (std::size_t i = 0; i < p.n; ++i)
    if (!p.gens[i].is_monomial())
      throw not_monomial("generator " + std::to_string(i + 1) + " is not a monomial");

  // the recipe works for every generator whose support contains no other
  // generator's support; with pairwise incomparable supports that is all of
  // them and the kernels intersect trivially
  std::vector<std::size_t> usable;
  for (std::size_t i = 0; i < p.n; ++i) {
    const auto si = p.gens[i].leading_monomial().support();
    bool ok = true;
    for (std::size_t jx = 0; ok && jx < p.n; ++jx) {
      if (jx == i) continue;
      const auto sj = p.gens[jx].leading_monomial().support();
      ok = !std::includes(si.begin(), si.end(), sj.begin(), sj.end());
    }
    if (ok) usable.push_back(i);
  }
  if (usable.empty())
    throw supports_comparable(
        "every generator's support contains another generator's support, so the "
        "monomial recipe applies to none of them");

  certificate cert = base_certificate(p, witness_mode::monomial);
  cert.config.span_dim = span_dim;
  const std::size_t e = p.arity();
  const scalar one = scalar::one(p.field);
  subspace running = subspace::full(p.field, p.n);

  for (std::size_t i : usable) {
    const monomial& m = p.gens[i].leading_monomial();
    const auto supp = m.support();
    const std::size_t pidx = supp.front();

    std::vector<polynomial> qgens;
    qgens.push_back(p.gens[i]);
    for (std::size_t q : supp)
      if (q != pidx)
        qgens.push_back(polynomial::single(one, monomial::variable(e, pidx)) -
                        polynomial::single(one, monomial::variable(e, q)));
    for (std::size_t v = 0; v < e; ++v)
      if (std::find(supp.begin(), supp.end(), v) == supp.end())
        qgens.push_back(polynomial::single(one, monomial::variable(e, v)));

    // the quotient collapses onto k[x_pidx]/(x_pidx^deg): every other
    // generator lands in mJ and f itself stays minimal, so the kernel is
    // exactly the hyperplane excluding this generator's coordinate
    std::vector<std::vector<scalar>> rows;
    for (std::size_t jx = 0; jx < p.n; ++jx)
      if (jx != i) rows.push_back(unit_vector(p.field, p.n, jx));
    const subspace ker = subspace::from_span(p.field, p.n, rows);

    running = intersect(running, ker);
    witness_step step;
    step.index = cert.steps.size() + 1;
    step.coords = unit_vector(p.field, p.n, i);
    step.g = p.gens[i];
    step.quotient_gens = std::move(qgens);
    step.ker = ker;
    step.running = running;
    cert.steps.push_back(std::move(step));
  }

  cert.final_intersection = running;
  cert.status =
      status_of(cert.mode, analyze(p).complete_intersection, running.dim(), span_dim);
  return cert;
}

certificate truncated_witness(std::size_t d, std::size_t s, const field_spec& f) {
  if (d < 2 || s < 2)
    throw degenerate_parameters(
        "need d >= 2 and s >= 2: smaller parameters give a regular ring or a hypersurface");
  if (d > max_arity)
    throw degenerate_parameters("at most " + std::to_string(max_arity) +
                                " variables are supported");

  std::vector<std::string> vars;
  vars.reserve(d);
  for (std::size_t i = 0; i < d; ++i) vars.push_back("x" + std::to_string(i + 1));

  // all degree-s monomials, descending, so x1^s is the first generator
  const truncated_algebra ta(f, d, s);
  const scalar one = scalar::one(f);
  std::vector<polynomial> gens;
  for (std::size_t i = 0; i < ta.dim(); ++i)
    if (ta.monomial_at(i).degree() == s)
      gens.push_back(polynomial::single(one, ta.monomial_at(i)));

  presentation p = make_presentation(f, vars, std::move(gens), false);

  std::vector<polynomial> qgens;
  qgens.push_back(p.gens.front());
  for (std::size_t v = 1; v < d; ++v)
    qgens.push_back(polynomial::single(one, monomial::variable(d, v)));
  ideal j(f, d, qgens);
  const kernel_subspace k = kernel_map(p, j);
  if (k.k.dim() + 1 != p.n) throw cross_check_failed("truncation kernel is not a hyperplane");

  certificate cert = base_certificate(p, witness_mode::truncated);
  witness_step step;
  step.index = 1;
  step.coords = unit_vector(f, p.n, 0);
  step.g = p.gens.front();
  step.quotient_gens = std::move(qgens);
  step.ker = k.k;
  step.truncation_level = k.truncation_level;
  step.running = k.k;
  cert.steps.push_back(std::move(step));

  cert.final_intersection = k.k;
  cert.status = status_of(cert.mode, analyze(p).complete_intersection, k.k.dim(), std::nullopt);
  return cert;
}

}  // namespace cohsup
