#include "cohsup/cert.hpp"

#include <algorithm>
#include <utility>

#include "cohsup/gb.hpp"

namespace cohsup {

using json = nlohmann::ordered_json;

std::string to_string(witness_mode m) {
  switch (m) {
    case witness_mode::algorithm: return "algorithm";
    case witness_mode::manual: return "manual";
    case witness_mode::monomial: return "monomial";
    case witness_mode::truncated: return "truncated";
  }
  return "manual";
}

witness_mode mode_from_string(const std::string& s) {
  if (s == "algorithm") return witness_mode::algorithm;
  if (s == "manual") return witness_mode::manual;
  if (s == "monomial") return witness_mode::monomial;
  if (s == "truncated") return witness_mode::truncated;
  throw malformed_certificate("unknown certificate mode '" + s + "'");
}

std::string status_of(witness_mode mode, tri complete_intersection, std::size_t final_dim,
                      const std::optional<std::size_t>& span_dim) {
  if (complete_intersection == tri::yes) return status_ci;
  switch (mode) {
    case witness_mode::truncated:
      return status_full_support;
    case witness_mode::manual:
      if (span_dim) return final_dim < *span_dim ? status_bounded : status_inconclusive;
      return final_dim == 0 ? status_equigenerated : status_inconclusive;
    case witness_mode::algorithm:
    case witness_mode::monomial:
      if (final_dim == 0) return status_equigenerated;
      if (span_dim && final_dim < *span_dim) return status_bounded;
      return status_inconclusive;
  }
  return status_inconclusive;
}

std::vector<std::string> premise_notes(witness_mode mode) {
  std::vector<std::string> notes = {
      "kernel rule: if J contains I and is generated by a regular sequence, the "
      "cohomological support of Q/J over R is the kernel of the induced map "
      "I/mI -> J/mJ",
      "containment rule: the cohomological support of R is contained in the "
      "cohomological support of every nonzero finitely generated R-module",
      "vanishing rule: the cohomological support of R is zero precisely when R "
      "is a complete intersection"};
  if (mode == witness_mode::truncated)
    notes.push_back(
        "full-support rule: when I is a power m^s of the maximal ideal with "
        "s >= 2, the cohomological support of R is the whole space");
  return notes;
}

certificate base_certificate(const presentation& p, witness_mode mode) {
  certificate cert;
  cert.field = p.field;
  cert.variables = p.variables;
  cert.gens = p.gens;
  cert.orders = p.orders;
  cert.d = p.d;
  cert.c = p.c;
  cert.n = p.n;
  cert.assume_minimal = !p.minimality_certified;
  cert.mode = mode;
  cert.final_intersection = subspace::full(p.field, p.n);
  cert.premises = premise_notes(mode);
  return cert;
}

certificate manual_certificate(const presentation& p,
                               const std::vector<std::vector<polynomial>>& quotient_lists,
                               const std::optional<std::size_t>& span_dim) {
  certificate cert = base_certificate(p, witness_mode::manual);
  cert.config.span_dim = span_dim;
  subspace running = subspace::full(p.field, p.n);
  for (std::size_t r = 0; r < quotient_lists.size(); ++r) {
    const auto& list = quotient_lists[r];
    if (list.size() != p.arity())
      throw not_regular_sequence("quotient " + std::to_string(r + 1) + " lists " +
                                 std::to_string(list.size()) + " generators; an artinian " +
                                 "parameter quotient needs exactly " + std::to_string(p.arity()));
    ideal j(p.field, p.arity(), list);
    const kernel_subspace k = kernel_map(p, j);
    running = intersect(running, k.k);
    witness_step step;
    step.index = r + 1;
    step.quotient_gens = list;
    step.ker = k.k;
    step.truncation_level = k.truncation_level;
    step.running = running;
    cert.steps.push_back(std::move(step));
  }
  cert.final_intersection = running;
  cert.status = status_of(cert.mode, analyze(p).complete_intersection, running.dim(), span_dim);
  return cert;
}

bool verification_report::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const check_result& c) { return c.passed; });
}

const check_result* verification_report::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

namespace {

polynomial combination(const std::vector<polynomial>& gens, const std::vector<scalar>& coords) {
  polynomial acc = polynomial::zero(gens.front().field(), gens.front().arity());
  for (std::size_t i = 0; i < gens.size(); ++i) acc = acc + gens[i].scaled(coords[i]);
  return acc;
}

}  // namespace

verification_report verify(const certificate& cert, const presentation& p) {
  verification_report rep;
  const auto add = [&rep](std::string name, bool ok, std::string detail = "") {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
    return rep.checks.back().passed;
  };

  bool echo = cert.field == p.field && cert.variables == p.variables && cert.n == p.n &&
              cert.orders == p.orders && cert.d == p.d && cert.c == p.c &&
              cert.gens.size() == p.gens.size();
  if (echo)
    for (std::size_t i = 0; i < p.gens.size(); ++i) echo = echo && cert.gens[i] == p.gens[i];
  if (!add("presentation-echo", echo,
           echo ? "" : "certificate does not match the supplied presentation"))
    return rep;

  if (!add("premise-notes", cert.premises == premise_notes(cert.mode),
           "recorded premise notes must match the canonical list for the mode"))
    return rep;

  const bool combination_mode = cert.mode != witness_mode::manual;
  subspace running = subspace::full(p.field, p.n);
  for (std::size_t r = 0; r < cert.steps.size(); ++r) {
    const witness_step& step = cert.steps[r];
    const std::string tag = "step-" + std::to_string(r + 1) + "/";
    try {
      bool shape = step.index == r + 1 && !step.quotient_gens.empty() &&
                   step.ker.ambient() == p.n && step.running.ambient() == p.n;
      for (const auto& g : step.quotient_gens)
        shape = shape && !g.is_zero() && g.field() == p.field && g.arity() == p.arity();
      if (!add(tag + "shape", shape,
               "each step must list nonzero quotient generators over the presentation's field"))
        return rep;

      if (combination_mode) {
        bool comb = step.coords.has_value() && step.g.has_value() &&
                    step.coords->size() == p.n;
        if (comb) {
          for (const auto& c : *step.coords) comb = comb && c.field() == p.field;
          comb = comb && !step.g->is_zero() &&
                 combination(p.gens, *step.coords) == *step.g &&
                 step.quotient_gens.front() == *step.g;
        }
        if (!add(tag + "generator-combination", comb,
                 "g must equal the recorded combination of the presentation generators "
                 "and lead the quotient list"))
          return rep;

        bool linear = true;
        for (std::size_t i = 1; i < step.quotient_gens.size(); ++i) {
          const polynomial& l = step.quotient_gens[i];
          linear = linear && l.is_homogeneous() && l.total_degree() == 1;
        }
        if (!add(tag + "linear-forms", linear,
                 "generators after g must be homogeneous linear forms"))
          return rep;
      }

      if (cert.mode == witness_mode::algorithm || cert.mode == witness_mode::truncated) {
        bool minimal_order = ord(*step.g) == p.d;
        for (std::size_t i = 0; minimal_order && i < p.n; ++i) {
          const bool allowed = std::find(p.min_order_idx.begin(), p.min_order_idx.end(), i) !=
                               p.min_order_idx.end();
          if (!allowed) minimal_order = (*step.coords)[i].is_zero();
        }
        if (!add(tag + "minimal-order", minimal_order,
                 "g must have the minimal order d and use only minimal-order generators"))
          return rep;
      }

      const ideal j(p.field, p.arity(), step.quotient_gens);

      if (!add(tag + "artinian", j.krull_dim() == 0, "Q/J must have Krull dimension 0"))
        return rep;
      if (!add(tag + "m-primary", j.is_m_primary(), "J must be primary to the maximal ideal"))
        return rep;

      // arity-many generators cutting out an artinian quotient of a regular
      // ring are automatically a regular sequence, which the kernel rule needs
      if (!add(tag + "regular-sequence", step.quotient_gens.size() == p.arity(),
               "an artinian parameter quotient must list exactly arity-many generators"))
        return rep;

      bool contained = true;
      for (const auto& f : p.gens) contained = contained && j.contains(f);
      if (!add(tag + "containment", contained, "every presentation generator must lie in J"))
        return rep;

      if (combination_mode) {
        if (!add(tag + "minimal-generator", is_minimal_in(j, *step.g),
                 "g must be a minimal generator of J"))
          return rep;
      }

      const kernel_subspace recomputed = kernel_map(p, j);
      bool kernel_ok = recomputed.k == step.ker;
      if (step.truncation_level)
        kernel_ok = kernel_ok && *step.truncation_level == recomputed.truncation_level;
      if (!add(tag + "kernel", kernel_ok,
               "recorded kernel must equal the recomputed kernel of I/mI -> J/mJ"))
        return rep;

      const std::size_t prev_dim = running.dim();
      running = intersect(running, recomputed.k);
      bool descent = running == step.running;
      if (combination_mode) descent = descent && running.dim() < prev_dim;
      if (!add(tag + "descent", descent,
               combination_mode
                   ? "running intersection must match and drop strictly in dimension"
                   : "running intersection must match the recorded value"))
        return rep;
    } catch (const error& e) {
      add(tag + "error", false, e.what());
      return rep;
    }
  }

  if (cert.mode == witness_mode::truncated) {
    if (!add("hyperplane-kernel",
             cert.steps.size() == 1 && cert.steps.front().ker.dim() + 1 == p.n,
             "a truncation certificate records one quotient whose kernel is a hyperplane"))
      return rep;
  }

  add("final-intersection", cert.final_intersection == running,
      "recorded final intersection must equal the recomputed one");

  const std::string expect =
      status_of(cert.mode, analyze(p).complete_intersection, running.dim(), cert.config.span_dim);
  add("status", cert.status == expect,
      cert.status == expect ? "" : "expected status '" + expect + "'");

  return rep;
}

// -- serialization -----------------------------------------------------------

namespace {

json field_to_json(const field_spec& f) {
  if (f.kind == field_kind::rationals) return "QQ";
  return json{{"Fp", f.p}};
}

field_spec field_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "QQ") return field_spec::rationals();
  if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_unsigned())
    return field_spec::prime(j["Fp"].get<std::uint64_t>());
  throw malformed_certificate("field must be \"QQ\" or {\"Fp\": p}");
}

json monomial_to_json(const monomial& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.arity(); ++i) a.push_back(m.exp(i));
  return a;
}

monomial monomial_from_json(const json& j, std::size_t arity) {
  if (!j.is_array() || j.size() != arity)
    throw malformed_certificate("monomial must be an exponent array of the ambient arity");
  std::vector<std::uint32_t> exps;
  exps.reserve(arity);
  for (const auto& e : j) {
    if (!e.is_number_unsigned() || e.get<std::uint64_t>() > 1'000'000)
      throw malformed_certificate("monomial exponent out of range");
    exps.push_back(static_cast<std::uint32_t>(e.get<std::uint64_t>()));
  }
  return monomial(std::move(exps));
}

json poly_to_json(const polynomial& f) {
  json a = json::array();
  for (const auto& [m, c] : f.terms()) a.push_back(json{{"e", monomial_to_json(m)}, {"c", c.str()}});
  return a;
}

polynomial poly_from_json(const json& j, const field_spec& f, std::size_t arity) {
  if (!j.is_array()) throw malformed_certificate("polynomial must be an array of terms");
  std::vector<polynomial::term> terms;
  terms.reserve(j.size());
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("e") || !t.contains("c") || !t["c"].is_string())
      throw malformed_certificate("polynomial term must be {\"e\": exponents, \"c\": scalar}");
    terms.emplace_back(monomial_from_json(t["e"], arity), scalar::parse(f, t["c"].get<std::string>()));
  }
  return polynomial::from_terms(f, arity, std::move(terms));
}

json scalar_vec_to_json(const std::vector<scalar>& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(c.str());
  return a;
}

std::vector<scalar> scalar_vec_from_json(const json& j, const field_spec& f, std::size_t len) {
  if (!j.is_array() || j.size() != len)
    throw malformed_certificate("coordinate vector has the wrong length");
  std::vector<scalar> v;
  v.reserve(len);
  for (const auto& c : j) {
    if (!c.is_string()) throw malformed_certificate("scalars are serialized as strings");
    v.push_back(scalar::parse(f, c.get<std::string>()));
  }
  return v;
}

json subspace_to_json(const subspace& s) {
  json rows = json::array();
  for (const auto& row : s.basis()) rows.push_back(scalar_vec_to_json(row));
  return json{{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis", rows}};
}

subspace subspace_from_json(const json& j, const field_spec& f) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("dim") || !j.contains("basis") ||
      !j["ambient"].is_number_unsigned() || !j["basis"].is_array())
    throw malformed_certificate("subspace must be {ambient, dim, basis}");
  const auto ambient = j["ambient"].get<std::size_t>();
  std::vector<std::vector<scalar>> rows;
  for (const auto& row : j["basis"]) rows.push_back(scalar_vec_from_json(row, f, ambient));
  const subspace s = subspace::from_span(f, ambient, rows);
  if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() != s.dim() ||
      s.basis() != rows)
    throw malformed_certificate("subspace basis must be in reduced row echelon form");
  return s;
}

std::uint64_t uint_field(const json& j, const char* key) {
  // accept both signed and unsigned integer storage: in-memory documents and
  // parsed ones may differ in which one the library picked
  if (!j.contains(key) || !j[key].is_number_integer() ||
      (j[key].is_number_integer() && !j[key].is_number_unsigned() &&
       j[key].get<std::int64_t>() < 0))
    throw malformed_certificate(std::string("missing or non-integer field '") + key + "'");
  return j[key].get<std::uint64_t>();
}

}  // namespace

json certificate_to_json(const certificate& cert) {
  json root;
  root["format"] = "cohsup-certificate";
  root["version"] = 1;
  root["field"] = field_to_json(cert.field);
  root["variables"] = cert.variables;
  json gens = json::array();
  for (const auto& g : cert.gens) gens.push_back(poly_to_json(g));
  root["generators"] = std::move(gens);
  root["orders"] = cert.orders;
  root["d"] = cert.d;
  root["c"] = cert.c;
  root["n"] = cert.n;
  root["assume_minimal"] = cert.assume_minimal;
  root["mode"] = to_string(cert.mode);
  json config;
  config["seed"] = cert.config.seed;
  config["max_attempts"] = cert.config.max_attempts;
  config["coeff_bound"] = cert.config.coeff_bound;
  config["span_dim"] = cert.config.span_dim ? json(*cert.config.span_dim) : json(nullptr);
  root["config"] = std::move(config);
  json steps = json::array();
  for (const auto& s : cert.steps) {
    json step;
    step["index"] = s.index;
    step["coords"] = s.coords ? scalar_vec_to_json(*s.coords) : json(nullptr);
    step["g"] = s.g ? poly_to_json(*s.g) : json(nullptr);
    json qg = json::array();
    for (const auto& g : s.quotient_gens) qg.push_back(poly_to_json(g));
    step["quotient_generators"] = std::move(qg);
    step["kernel"] = subspace_to_json(s.ker);
    step["truncation_level"] = s.truncation_level ? json(*s.truncation_level) : json(nullptr);
    step["running_intersection"] = subspace_to_json(s.running);
    step["running_dimension"] = s.running.dim();
    steps.push_back(std::move(step));
  }
  root["steps"] = std::move(steps);
  root["final_intersection"] = subspace_to_json(cert.final_intersection);
  root["final_dimension"] = cert.final_intersection.dim();
  root["status"] = cert.status;
  root["premises"] = cert.premises;
  return root;
}

certificate certificate_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("format") || j["format"] != "cohsup-certificate" ||
        uint_field(j, "version") != 1)
      throw malformed_certificate("not a cohsup certificate (format/version mismatch)");

    certificate cert;
    cert.field = field_from_json(j.at("field"));
    if (!j.contains("variables") || !j["variables"].is_array())
      throw malformed_certificate("missing variable list");
    cert.variables = j["variables"].get<std::vector<std::string>>();
    const std::size_t arity = cert.variables.size();
    if (arity == 0 || arity > max_arity) throw malformed_certificate("bad variable count");

    if (!j.contains("generators") || !j["generators"].is_array())
      throw malformed_certificate("missing generator list");
    for (const auto& g : j["generators"]) cert.gens.push_back(poly_from_json(g, cert.field, arity));
    if (!j.contains("orders") || !j["orders"].is_array())
      throw malformed_certificate("missing order list");
    cert.orders = j["orders"].get<std::vector<std::size_t>>();
    cert.d = uint_field(j, "d");
    cert.c = uint_field(j, "c");
    cert.n = uint_field(j, "n");
    if (cert.gens.size() != cert.n || cert.orders.size() != cert.n)
      throw malformed_certificate("generator, order and n counts disagree");
    if (!j.contains("assume_minimal") || !j["assume_minimal"].is_boolean())
      throw malformed_certificate("missing assume_minimal flag");
    cert.assume_minimal = j["assume_minimal"].get<bool>();
    if (!j.contains("mode") || !j["mode"].is_string())
      throw malformed_certificate("missing mode");
    cert.mode = mode_from_string(j["mode"].get<std::string>());

    const json& cfg = j.at("config");
    cert.config.seed = uint_field(cfg, "seed");
    cert.config.max_attempts = uint_field(cfg, "max_attempts");
    cert.config.coeff_bound = uint_field(cfg, "coeff_bound");
    if (!cfg.contains("span_dim")) throw malformed_certificate("missing span_dim");
    if (!cfg["span_dim"].is_null()) cert.config.span_dim = uint_field(cfg, "span_dim");

    if (!j.contains("steps") || !j["steps"].is_array())
      throw malformed_certificate("missing step list");
    for (const auto& js : j["steps"]) {
      witness_step s;
      s.index = uint_field(js, "index");
      if (!js.contains("coords")) throw malformed_certificate("missing coords");
      if (!js["coords"].is_null())
        s.coords = scalar_vec_from_json(js["coords"], cert.field, cert.n);
      if (!js.contains("g")) throw malformed_certificate("missing g");
      if (!js["g"].is_null()) s.g = poly_from_json(js["g"], cert.field, arity);
      if (s.coords.has_value() != s.g.has_value())
        throw malformed_certificate("coords and g must be recorded together");
      if (!js.contains("quotient_generators") || !js["quotient_generators"].is_array())
        throw malformed_certificate("missing quotient generators");
      for (const auto& g : js["quotient_generators"])
        s.quotient_gens.push_back(poly_from_json(g, cert.field, arity));
      s.ker = subspace_from_json(js.at("kernel"), cert.field);
      if (!js.contains("truncation_level")) throw malformed_certificate("missing truncation_level");
      if (!js["truncation_level"].is_null()) s.truncation_level = uint_field(js, "truncation_level");
      s.running = subspace_from_json(js.at("running_intersection"), cert.field);
      if (uint_field(js, "running_dimension") != s.running.dim())
        throw malformed_certificate("running_dimension does not match the recorded subspace");
      cert.steps.push_back(std::move(s));
    }

    cert.final_intersection = subspace_from_json(j.at("final_intersection"), cert.field);
    if (uint_field(j, "final_dimension") != cert.final_intersection.dim())
      throw malformed_certificate("final_dimension does not match the recorded subspace");
    if (!j.contains("status") || !j["status"].is_string())
      throw malformed_certificate("missing status");
    cert.status = j["status"].get<std::string>();
    if (!j.contains("premises") || !j["premises"].is_array())
      throw malformed_certificate("missing premises");
    cert.premises = j["premises"].get<std::vector<std::string>>();
    return cert;
  } catch (const json::exception& e) {
    throw malformed_certificate(std::string("malformed certificate: ") + e.what());
  } catch (const error&) {
    throw;
  }
}

std::string certificate_to_bytes(const certificate& cert) {
  return certificate_to_json(cert).dump(2) + "\n";
}

}  // namespace cohsup
