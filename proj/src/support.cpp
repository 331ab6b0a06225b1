#include "cohsup/support.hpp"

#include <algorithm>
#include <cctype>

namespace cohsup {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// span of the image of id inside the truncated algebra at the given level:
// all mu * g for generators g and monomials mu that stay within the level
subspace truncated_image(const ideal& id, const truncated_algebra& ta) {
  std::vector<std::vector<scalar>> rows;
  for (const auto& g : id.generators()) {
    if (g.is_zero()) continue;
    const std::size_t o = ord(g);
    for (std::size_t i = 0; i < ta.dim(); ++i) {
      const monomial& mu = ta.monomial_at(i);
      if (mu.degree() + o > ta.level()) continue;
      auto v = ta.coords(g.times_term(scalar::one(id.field()), mu));
      if (std::any_of(v.begin(), v.end(), [](const scalar& c) { return !c.is_zero(); }))
        rows.push_back(std::move(v));
    }
  }
  return subspace::from_span(id.field(), ta.dim(), rows);
}

}  // namespace

presentation make_presentation(const field_spec& f, std::vector<std::string> variables,
                               std::vector<polynomial> gens, bool assume_minimal) {
  if (variables.empty() || variables.size() > max_arity)
    throw invalid_presentation("variable count must be between 1 and 16");
  for (const auto& v : variables)
    if (!valid_identifier(v))
      throw invalid_presentation("invalid variable name '" + v + "'");
  for (std::size_t i = 0; i < variables.size(); ++i)
    for (std::size_t j = i + 1; j < variables.size(); ++j)
      if (variables[i] == variables[j])
        throw invalid_presentation("duplicate variable name '" + variables[i] + "'");
  const std::size_t arity = variables.size();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    if (g.field() != f) throw field_mismatch{};
    if (g.arity() != arity) throw arity_mismatch{};
    if (!g.is_zero() && ord(g) < 2)
      throw invalid_presentation("generator " + std::to_string(i + 1) +
                                 " has order < 2; the ideal must sit inside m^2");
  }

  trim_result trim = minimal_generators(gens);
  if (!trim.certified && !assume_minimal) throw minimality_not_certified{};

  std::vector<std::size_t> orders;
  orders.reserve(trim.gens.size());
  for (std::size_t i = 0; i < trim.gens.size(); ++i) {
    const std::size_t o = ord(trim.gens[i]);
    if (o < 2)
      throw invalid_presentation("generator " + std::to_string(i + 1) +
                                 " has order < 2; the ideal must sit inside m^2");
    orders.push_back(o);
  }

  const std::size_t d = *std::min_element(orders.begin(), orders.end());
  std::vector<std::size_t> min_idx;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] == d) min_idx.push_back(i);
  const std::size_t c = min_idx.size();
  const std::size_t n = trim.gens.size();

  const bool homogeneous = std::all_of(trim.gens.begin(), trim.gens.end(),
                                       [](const polynomial& g) { return g.is_homogeneous(); });

  // independence of the initial forms of the order-d generators
  const truncated_algebra ta(f, arity, d);
  std::vector<std::vector<scalar>> lf_rows;
  for (std::size_t i : min_idx) lf_rows.push_back(ta.coords(lowest_form(trim.gens[i])));
  const bool lf_indep = subspace::from_span(f, ta.dim(), lf_rows).dim() == c;

  ideal id(f, arity, trim.gens);
  return presentation{f,
                      std::move(variables),
                      std::move(trim.gens),
                      std::move(orders),
                      d,
                      c,
                      n,
                      std::move(min_idx),
                      homogeneous,
                      trim.certified,
                      lf_indep,
                      std::move(id)};
}

analysis_report analyze(const presentation& p) {
  analysis_report r;
  r.e = p.arity();
  r.n = p.n;
  r.d = p.d;
  r.c = p.c;
  r.equipresented = p.c == p.n;
  r.lhs = p.n - p.c;
  r.lhs_exact = p.homogeneous;
  r.lowest_forms_independent = p.lowest_forms_independent;
  // deciding n = e - dim needs the true minimal number of generators, which is
  // certified exactly in the homogeneous and m-primary cases
  if (p.homogeneous || p.i.is_m_primary()) {
    r.complete_intersection =
        (p.n + p.i.krull_dim() == p.arity()) ? tri::yes : tri::no;
  } else {
    r.complete_intersection = tri::unknown;
  }
  return r;
}

kernel_subspace kernel_map(const presentation& p, const ideal& j) {
  if (j.field() != p.field) throw field_mismatch{};
  if (j.arity() != p.arity()) throw arity_mismatch{};
  if (j.krull_dim() != 0) throw not_artinian{};
  if (!j.is_m_primary()) throw not_m_primary{};
  for (std::size_t i = 0; i < p.n; ++i) {
    if (!j.contains(p.gens[i]))
      throw not_contained("generator " + std::to_string(i + 1) +
                          " of the presentation does not lie in the quotient ideal");
  }

  const ideal mj = times_maximal(j);
  const std::size_t level = mj.truncation_index() - 1;
  const truncated_algebra ta(p.field, p.arity(), level);
  const subspace w = truncated_image(mj, ta);

  // stack [v_1 .. v_n | basis of W] and project the kernel to the first n
  // coordinates: c lands in the kernel iff sum c_i f_i lies in W, i.e. in mJ
  matrix m(p.field, ta.dim(), p.n + w.dim());
  for (std::size_t i = 0; i < p.n; ++i) {
    const auto v = ta.coords(p.gens[i]);
    for (std::size_t r = 0; r < ta.dim(); ++r) m.at(r, i) = v[r];
  }
  for (std::size_t k = 0; k < w.dim(); ++k) {
    for (std::size_t r = 0; r < ta.dim(); ++r) m.at(r, p.n + k) = w.basis()[k][r];
  }
  const subspace ker = kernel(m);
  std::vector<std::vector<scalar>> proj;
  proj.reserve(ker.dim());
  for (const auto& row : ker.basis())
    proj.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(p.n));
  return {subspace::from_span(p.field, p.n, proj), level};
}

bool is_minimal_in(const ideal& j, const polynomial& f) {
  if (f.is_zero() || !j.contains(f)) return false;
  const ideal mj = times_maximal(j);

  const bool direct = mj.contains(f);

  const std::size_t level = mj.truncation_index() - 1;
  const truncated_algebra ta(j.field(), j.arity(), level);
  const subspace w = truncated_image(mj, ta);
  const bool truncated = w.contains(ta.coords(f.truncated(static_cast<std::uint32_t>(level))));

  if (direct != truncated)
    throw cross_check_failed("truncated and direct membership in mJ disagree");
  return !direct;
}

}  // namespace cohsup
