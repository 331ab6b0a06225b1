#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohsup/support.hpp"
#include "json.hpp"

namespace cohsup {

// on-disk ring description: a field, variable names and generator strings in
// the polynomial grammar, plus the two optional analysis knobs
struct ring_file {
  field_spec field;
  std::vector<std::string> variables;
  std::vector<std::string> generators;
  bool assume_minimal = false;
  std::optional<std::size_t> span_dim;
};

nlohmann::ordered_json ring_file_to_json(const ring_file& rf);
ring_file ring_file_from_json(const nlohmann::ordered_json& j);  // throws invalid_ring_file

ring_file load_ring_file(const std::string& path);
void save_ring_file(const ring_file& rf, const std::string& path);

// parses the generators and assembles the presentation
presentation presentation_of(const ring_file& rf);

}  // namespace cohsup
