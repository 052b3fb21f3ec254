#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtorsion/field.hpp"

namespace qtorsion {

struct GenParams {
  std::size_t length = 2;   // m, at most 6
  std::size_t max_dim = 4;  // at most 8
  std::string profile = "iso";  // iso | self | non-qiso | acyclic
  FieldTag field = FieldTag::Q;
};

/// Seeded random instance. Profiles iso, self and non-qiso produce a map
/// document with inline complexes; acyclic produces a complex document.
/// Throws ParamOutOfRange.
nlohmann::json gen_instance(std::uint64_t seed, const GenParams& params);

/// Runs one command line (without the program name). Exit codes: 0 ok,
/// 1 parse or validation failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtorsion
