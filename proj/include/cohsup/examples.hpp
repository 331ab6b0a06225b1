#pragma once

#include <string>

#include "cohsup/cert.hpp"
#include "cohsup/ringfile.hpp"

namespace cohsup {

struct example_bundle {
  std::string name;  // filesystem-safe
  ring_file ring;
  certificate cert;
};

// built-in worked examples, each a ring file plus a matching certificate:
//   shortgor3      five quadric generators in three variables, five-step chain
//   thomas         two hand-picked quotients certified in manual mode
//   monomial4      monomial ideal in four variables, three manual quotients
//   truncated:d,s  I = m^s in d variables
//   sr:<path>      monomial route applied to the ring file at <path>
example_bundle example(const std::string& name);

}  // namespace cohsup
