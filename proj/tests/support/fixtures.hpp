#pragma once

#include <filesystem>
#include <string>

#include "qtorsion/document.hpp"

namespace fixtures {

inline std::filesystem::path path(const std::string& name) { return std::filesystem::path(QTORSION_FIXTURES) / name; }

inline qtorsion::QComplex q_complex(const std::string& name) {
  return std::get<qtorsion::QComplex>(qtorsion::load_complex(path(name)));
}

inline qtorsion::QMap q_map(const std::string& name) { return std::get<qtorsion::QMap>(qtorsion::load_map(path(name))); }

inline qtorsion::PolyComplex poly_complex(const std::string& name) {
  return qtorsion::parse_poly_complex(qtorsion::read_json_file(path(name)));
}

}  // namespace fixtures
