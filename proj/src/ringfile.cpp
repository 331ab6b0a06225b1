#include "cohsup/ringfile.hpp"

#include <fstream>
#include <sstream>

namespace cohsup {

using json = nlohmann::ordered_json;

json ring_file_to_json(const ring_file& rf) {
  json root;
  if (rf.field.kind == field_kind::rationals)
    root["field"] = "QQ";
  else
    root["field"] = json{{"Fp", rf.field.p}};
  root["variables"] = rf.variables;
  root["generators"] = rf.generators;
  root["assume_minimal"] = rf.assume_minimal;
  root["span_dim"] = rf.span_dim ? json(*rf.span_dim) : json(nullptr);
  return root;
}

ring_file ring_file_from_json(const json& j) {
  try {
    if (!j.is_object()) throw invalid_ring_file("ring file must be a JSON object");
    ring_file rf;
    if (!j.contains("field")) throw invalid_ring_file("missing \"field\"");
    const json& f = j["field"];
    if (f.is_string() && f.get<std::string>() == "QQ")
      rf.field = field_spec::rationals();
    else if (f.is_object() && f.contains("Fp") && f["Fp"].is_number_unsigned())
      rf.field = field_spec::prime(f["Fp"].get<std::uint64_t>());
    else
      throw invalid_ring_file("\"field\" must be \"QQ\" or {\"Fp\": p}");
    if (!j.contains("variables") || !j["variables"].is_array())
      throw invalid_ring_file("missing \"variables\" list");
    rf.variables = j["variables"].get<std::vector<std::string>>();
    if (!j.contains("generators") || !j["generators"].is_array())
      throw invalid_ring_file("missing \"generators\" list");
    rf.generators = j["generators"].get<std::vector<std::string>>();
    if (j.contains("assume_minimal")) {
      if (!j["assume_minimal"].is_boolean())
        throw invalid_ring_file("\"assume_minimal\" must be a boolean");
      rf.assume_minimal = j["assume_minimal"].get<bool>();
    }
    if (j.contains("span_dim") && !j["span_dim"].is_null()) {
      if (!j["span_dim"].is_number_unsigned() || j["span_dim"].get<std::uint64_t>() == 0)
        throw invalid_ring_file("\"span_dim\" must be a positive integer");
      rf.span_dim = j["span_dim"].get<std::size_t>();
    }
    return rf;
  } catch (const json::exception& e) {
    throw invalid_ring_file(std::string("malformed ring file: ") + e.what());
  }
}

ring_file load_ring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_ring_file("cannot open ring file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::exception& e) {
    throw invalid_ring_file("ring file '" + path + "' is not valid JSON: " + e.what());
  }
  return ring_file_from_json(j);
}

void save_ring_file(const ring_file& rf, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw invalid_ring_file("cannot write ring file '" + path + "'");
  out << ring_file_to_json(rf).dump(2) << '\n';
}

presentation presentation_of(const ring_file& rf) {
  std::vector<polynomial> gens;
  gens.reserve(rf.generators.size());
  for (const auto& text : rf.generators)
    gens.push_back(parse_polynomial(text, rf.variables, rf.field));
  return make_presentation(rf.field, rf.variables, std::move(gens), rf.assume_minimal);
}

}  // namespace cohsup
