#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cohsup/construct.hpp"
#include "cohsup/examples.hpp"

namespace {

using cohsup::certificate;
using cohsup::presentation;
using cohsup::ring_file;
using json = nlohmann::ordered_json;

struct common_opts {
  std::string ring_path;
  bool assume_minimal = false;
  std::optional<std::size_t> span_dim;
  bool as_json = false;
};

ring_file load_ring(const common_opts& opts) {
  ring_file rf = cohsup::load_ring_file(opts.ring_path);
  if (opts.assume_minimal) rf.assume_minimal = true;
  if (opts.span_dim) rf.span_dim = opts.span_dim;
  return rf;
}

const char* tri_name(cohsup::tri t) {
  switch (t) {
    case cohsup::tri::yes: return "yes";
    case cohsup::tri::no: return "no";
    default: return "undecided";
  }
}

int run_analyze(const common_opts& opts) {
  const ring_file rf = load_ring(opts);
  const presentation p = cohsup::presentation_of(rf);
  const cohsup::analysis_report rep = cohsup::analyze(p);
  const bool monomial_route = cohsup::monomial_route_applies(p);

  if (opts.as_json) {
    json out;
    out["field"] = p.field.name();
    out["e"] = rep.e;
    out["n"] = rep.n;
    out["d"] = rep.d;
    out["c"] = rep.c;
    out["lhs"] = rep.lhs;
    out["lhs_exact"] = rep.lhs_exact;
    out["equipresented"] = rep.equipresented;
    out["lowest_forms_independent"] = rep.lowest_forms_independent;
    out["complete_intersection"] = tri_name(rep.complete_intersection);
    out["span_dim"] = rf.span_dim ? json(*rf.span_dim) : json(nullptr);
    out["large_support"] = rf.span_dim ? json(rep.large_support(*rf.span_dim)) : json(nullptr);
    out["monomial_route"] = monomial_route;
    std::cout << out.dump(2) << '\n';
    return 0;
  }

  std::cout << "field: " << p.field.name() << '\n';
  std::cout << "variables (e = " << rep.e << "):";
  for (const auto& v : p.variables) std::cout << ' ' << v;
  std::cout << '\n';
  std::cout << "minimal generators (n = " << rep.n << "), orders:";
  for (std::size_t o : p.orders) std::cout << ' ' << o;
  std::cout << '\n';
  std::cout << "minimal order d = " << rep.d << ", minimal-order generators c = " << rep.c << '\n';
  std::cout << "equipresented: " << (rep.equipresented ? "yes" : "no") << '\n';
  std::cout << "lhs = n - c = " << rep.lhs << (rep.lhs_exact ? " (exact)" : " (lower bound)")
            << '\n';
  std::cout << "lowest forms independent: " << (rep.lowest_forms_independent ? "yes" : "no")
            << '\n';
  std::cout << "complete intersection: " << tri_name(rep.complete_intersection) << '\n';
  if (rf.span_dim)
    std::cout << "spanning condition (lhs < " << *rf.span_dim
              << "): " << (rep.large_support(*rf.span_dim) ? "holds" : "fails") << '\n';

  if (rep.complete_intersection == cohsup::tri::yes)
    std::cout << "no witness exists: the ring is a complete intersection\n";
  else if (rep.equipresented)
    std::cout << "witness construction applicable\n";
  else if (rf.span_dim && rep.large_support(*rf.span_dim))
    std::cout << "witness construction applicable (bounded mode)\n";
  else if (rf.span_dim)
    std::cout << "spanning condition fails; construction would be inconclusive\n";
  else
    std::cout << "not equipresented: pass --span-dim to use the bounded mode\n";
  if (monomial_route) std::cout << "monomial fast path available\n";
  return 0;
}

void print_summary(const certificate& cert, const std::vector<std::string>& vars) {
  for (const auto& s : cert.steps) {
    std::cout << "step " << s.index << ": ";
    if (s.g) std::cout << "g = " << cohsup::to_string(*s.g, vars) << ", ";
    std::cout << "J = (";
    for (std::size_t i = 0; i < s.quotient_gens.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << cohsup::to_string(s.quotient_gens[i], vars);
    }
    std::cout << "), dim K = " << s.ker.dim() << ", running dim = " << s.running.dim() << '\n';
  }
  std::cout << "final intersection dimension: " << cert.final_intersection.dim() << '\n';
  std::cout << "status: " << cert.status << '\n';
}

int finish_certificate(const certificate& cert, const std::vector<std::string>& vars,
                       const std::string& out_path, bool as_json) {
  {
    std::ofstream out(out_path);
    if (!out) throw cohsup::error("cannot write certificate to '" + out_path + "'");
    out << cohsup::certificate_to_bytes(cert);
  }
  if (as_json)
    std::cout << cohsup::certificate_to_json(cert).dump(2) << '\n';
  else
    print_summary(cert, vars);
  std::cout << "certificate written to " << out_path << '\n';
  const bool witness = cert.status == cohsup::status_equigenerated ||
                       cert.status == cohsup::status_bounded ||
                       cert.status == cohsup::status_full_support;
  return witness ? 0 : 2;
}

int run_construct(const common_opts& opts, const cohsup::search_config& base_cfg,
                  const std::string& out_path) {
  const ring_file rf = load_ring(opts);
  const presentation p = cohsup::presentation_of(rf);
  cohsup::search_config cfg = base_cfg;
  cfg.span_dim = rf.span_dim;

  certificate cert = cohsup::monomial_route_applies(p)
                         ? cohsup::monomial_witnesses(p, cfg.span_dim)
                         : cohsup::construct_witnesses(p, cfg);
  return finish_certificate(cert, p.variables, out_path, opts.as_json);
}

int run_monomial(const common_opts& opts, const std::string& out_path) {
  const ring_file rf = load_ring(opts);
  const presentation p = cohsup::presentation_of(rf);
  const certificate cert = cohsup::monomial_witnesses(p, rf.span_dim);
  return finish_certificate(cert, p.variables, out_path, opts.as_json);
}

int run_verify(const common_opts& opts, const std::string& cert_path) {
  const ring_file rf = load_ring(opts);
  const presentation p = cohsup::presentation_of(rf);

  std::ifstream in(cert_path);
  if (!in) throw cohsup::malformed_certificate("cannot open certificate '" + cert_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  json parsed;
  try {
    parsed = json::parse(buf.str());
  } catch (const json::exception& e) {
    throw cohsup::malformed_certificate("certificate '" + cert_path +
                                        "' is not valid JSON: " + e.what());
  }
  const certificate cert = cohsup::certificate_from_json(parsed);

  const cohsup::verification_report rep = cohsup::verify(cert, p);
  if (opts.as_json) {
    json out;
    out["passed"] = rep.passed();
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out["checks"] = std::move(checks);
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& c : rep.checks) {
      std::cout << (c.passed ? "[ok]   " : "[FAIL] ") << c.name;
      if (!c.passed && !c.detail.empty()) std::cout << ": " << c.detail;
      std::cout << '\n';
    }
    std::cout << (rep.passed() ? "verification passed" : "verification failed") << '\n';
  }
  return rep.passed() ? 0 : 4;
}

int run_example(const std::string& name, std::string prefix) {
  const cohsup::example_bundle bundle = cohsup::example(name);
  if (prefix.empty()) prefix = bundle.name;
  const std::string ring_path = prefix + ".ring.json";
  const std::string cert_path = prefix + ".cert.json";
  cohsup::save_ring_file(bundle.ring, ring_path);
  std::ofstream out(cert_path);
  if (!out) throw cohsup::error("cannot write certificate to '" + cert_path + "'");
  out << cohsup::certificate_to_bytes(bundle.cert);
  std::cout << "ring file: " << ring_path << '\n';
  std::cout << "certificate: " << cert_path << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"artinian hypersurface witnesses for non-complete-intersection presentations"};
  app.require_subcommand(1);

  common_opts opts;
  cohsup::search_config cfg;
  std::string out_path = "cert.json";
  std::string cert_path;
  std::string example_name;
  std::string example_prefix;

  const auto add_common = [&](CLI::App* sub, bool with_span) {
    sub->add_option("ring", opts.ring_path, "ring file (JSON)")->required();
    sub->add_flag("--assume-minimal", opts.assume_minimal,
                  "accept the generator list as minimal when it cannot be certified");
    if (with_span)
      sub->add_option("--span-dim", opts.span_dim,
                      "bound s on the dimension of the spanned support");
    sub->add_flag("--json", opts.as_json, "machine-readable output");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "numerical invariants of a presentation");
  add_common(analyze, true);

  CLI::App* construct =
      app.add_subcommand("construct", "build a witness certificate (randomized search)");
  add_common(construct, true);
  construct->add_option("--seed", cfg.seed, "seed for the deterministic sampler");
  construct->add_option("--max-attempts", cfg.max_attempts, "sampling attempts per quotient");
  construct->add_option("--coeff-bound", cfg.coeff_bound,
                        "initial coefficient bound for rational sampling");
  construct->add_option("-o,--output", out_path, "certificate output path");

  CLI::App* monomial =
      app.add_subcommand("monomial", "deterministic witnesses for monomial presentations");
  add_common(monomial, true);
  monomial->add_option("-o,--output", out_path, "certificate output path");

  CLI::App* verify = app.add_subcommand("verify", "re-derive every claim of a certificate");
  add_common(verify, false);
  verify->add_option("cert", cert_path, "certificate file (JSON)")->required();

  CLI::App* example = app.add_subcommand("example", "emit a built-in ring file and certificate");
  example->add_option("name", example_name,
                      "shortgor3 | thomas | monomial4 | truncated:d,s | sr:<ring-file>")
      ->required();
  example->add_option("-o,--output", example_prefix, "output path prefix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (analyze->parsed()) return run_analyze(opts);
    if (construct->parsed()) return run_construct(opts, cfg, out_path);
    if (monomial->parsed()) return run_monomial(opts, out_path);
    if (verify->parsed()) return run_verify(opts, cert_path);
    if (example->parsed()) return run_example(example_name, example_prefix);
  } catch (const cohsup::search_exhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const cohsup::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 3;
}
