#include "cohsup/examples.hpp"

#include <cctype>
#include <filesystem>

#include "cohsup/construct.hpp"

namespace cohsup {

namespace {

std::vector<polynomial> parse_list(const std::vector<std::string>& texts,
                                   const std::vector<std::string>& vars, const field_spec& f) {
  std::vector<polynomial> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_polynomial(t, vars, f));
  return out;
}

// the five-step chain for (x^2-y^2, x^2-z^2, xy, xz, yz); each quotient is a
// hypersurface generator combined from the presentation plus two linear forms,
// kernels recomputed on the spot
certificate shortgor_certificate(const presentation& p) {
  struct raw_step {
    std::vector<long long> coords;
    std::vector<std::string> qgens;
  };
  const std::vector<raw_step> raw = {
      {{1, 0, 0, 0, 0}, {"x^2-y^2", "y-z", "x"}},
      {{-1, 1, 0, 0, 0}, {"y^2-z^2", "y", "x"}},
      {{0, 0, 1, 0, 0}, {"xy", "x-y", "x-z"}},
      {{1, 0, -1, 0, 1}, {"x^2-y^2+yz-xy", "y-z", "x-y-z"}},
      {{0, 0, 1, -1, 0}, {"xy-xz", "y", "x-z"}},
  };

  certificate cert = base_certificate(p, witness_mode::algorithm);
  subspace running = subspace::full(p.field, p.n);
  for (std::size_t r = 0; r < raw.size(); ++r) {
    std::vector<scalar> coords;
    coords.reserve(p.n);
    for (long long v : raw[r].coords) coords.push_back(scalar::of_int(p.field, v));
    polynomial g = polynomial::zero(p.field, p.arity());
    for (std::size_t i = 0; i < p.n; ++i) g = g + p.gens[i].scaled(coords[i]);

    witness_step step;
    step.index = r + 1;
    step.coords = std::move(coords);
    step.g = g;
    step.quotient_gens = parse_list(raw[r].qgens, p.variables, p.field);

    const ideal j(p.field, p.arity(), step.quotient_gens);
    const kernel_subspace k = kernel_map(p, j);
    running = intersect(running, k.k);
    step.ker = k.k;
    step.truncation_level = k.truncation_level;
    step.running = running;
    cert.steps.push_back(std::move(step));
  }
  cert.final_intersection = running;
  cert.status = status_of(cert.mode, analyze(p).complete_intersection, running.dim(),
                          cert.config.span_dim);
  return cert;
}

std::string sanitized(const std::string& s) {
  std::string out;
  for (char c : s)
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  return out;
}

}  // namespace

example_bundle example(const std::string& name) {
  const field_spec qq = field_spec::rationals();

  if (name == "shortgor3") {
    ring_file rf{qq,
                 {"x", "y", "z"},
                 {"x^2-y^2", "x^2-z^2", "xy", "xz", "yz"},
                 false,
                 std::nullopt};
    const presentation p = presentation_of(rf);
    return {"shortgor3", rf, shortgor_certificate(p)};
  }

  if (name == "thomas") {
    ring_file rf{qq, {"x", "y", "z"}, {"x^2+y^2+z^2", "xyz", "x^3"}, true, 2};
    const presentation p = presentation_of(rf);
    const std::vector<std::vector<polynomial>> quotients = {
        parse_list({"x^2+y^2+z^2", "y", "x^3"}, rf.variables, qq),
        parse_list({"x^2+2z^2", "xyz", "y+z"}, rf.variables, qq),
    };
    return {"thomas", rf, manual_certificate(p, quotients, rf.span_dim)};
  }

  if (name == "monomial4") {
    ring_file rf{qq, {"x", "y", "z", "w"}, {"x^4", "xy", "yz", "zw", "w^3"}, false, 5};
    const presentation p = presentation_of(rf);
    const std::vector<std::vector<polynomial>> quotients = {
        parse_list({"yz", "y-z", "x", "w"}, rf.variables, qq),
        parse_list({"x^4", "y", "z", "w"}, rf.variables, qq),
        parse_list({"w^3", "x", "y", "z"}, rf.variables, qq),
    };
    return {"monomial4", rf, manual_certificate(p, quotients, rf.span_dim)};
  }

  if (name.rfind("truncated:", 0) == 0) {
    const std::string params = name.substr(10);
    const auto comma = params.find(',');
    std::size_t d = 0, s = 0;
    try {
      if (comma == std::string::npos) throw std::invalid_argument("comma");
      d = std::stoul(params.substr(0, comma));
      s = std::stoul(params.substr(comma + 1));
    } catch (const std::exception&) {
      throw degenerate_parameters("expected truncated:d,s with integers d and s");
    }
    certificate cert = truncated_witness(d, s);
    ring_file rf;
    rf.field = cert.field;
    rf.variables = cert.variables;
    for (const auto& g : cert.gens) rf.generators.push_back(to_string(g, cert.variables));
    return {"truncated_" + std::to_string(d) + "_" + std::to_string(s), rf, std::move(cert)};
  }

  if (name.rfind("sr:", 0) == 0) {
    const std::string path = name.substr(3);
    ring_file rf = load_ring_file(path);
    const presentation p = presentation_of(rf);
    certificate cert = monomial_witnesses(p, rf.span_dim);
    std::string stem = std::filesystem::path(path).filename().string();
    if (stem.ends_with(".ring.json"))
      stem.resize(stem.size() - std::string(".ring.json").size());
    else
      stem = std::filesystem::path(stem).stem().string();
    return {"sr_" + sanitized(stem), std::move(rf), std::move(cert)};
  }

  throw error("unknown example '" + name +
              "' (expected shortgor3, thomas, monomial4, truncated:d,s or sr:<ring-file>)");
}

}  // namespace cohsup
