#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "qtorsion/chain_map.hpp"
#include "qtorsion/complex.hpp"
#include "qtorsion/field.hpp"
#include "qtorsion/ufd.hpp"

namespace qtorsion {

using QComplex = ChainComplex<Rational>;
using QtComplex = ChainComplex<RationalFunction>;
using QMap = ChainMap<Rational>;
using QtMap = ChainMap<RationalFunction>;

/// A complex or map over whichever field its document names.
using AnyComplex = std::variant<QComplex, QtComplex>;
using AnyMap = std::variant<QMap, QtMap>;

FieldTag field_of(const AnyComplex& c);
FieldTag field_of(const AnyMap& f);

/// Documents use JSON with every scalar written as a string:
///   complex: {"field": "Q" | "Q(t)", "dims": [...], "boundaries": [[[...]]]}
///   map:     {"source": complex | "path", "target": complex | "path",
///             "maps": [[[...]]], "comment": "..."}
/// Relative paths inside a map document resolve against its directory.
/// Malformed input throws ParseError with a locus such as
/// "boundaries[0][1][2]"; structurally sound input that violates an
/// invariant throws the invariant's own error code.
AnyComplex parse_complex(const nlohmann::json& doc, const std::filesystem::path& base = {});
AnyMap parse_map(const nlohmann::json& doc, const std::filesystem::path& base = {});

/// Q(t) complex whose entries must all be polynomials (NotPolynomial otherwise).
PolyComplex parse_poly_complex(const nlohmann::json& doc);
PolyChainMap parse_poly_map(const nlohmann::json& doc, const std::filesystem::path& base = {});

nlohmann::json read_json_file(const std::filesystem::path& path);
AnyComplex load_complex(const std::filesystem::path& path);
AnyMap load_map(const std::filesystem::path& path);

template <class F>
nlohmann::json to_json(const Matrix<F>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class R>
nlohmann::json to_json(const ChainComplex<R>& c, FieldTag tag) {
  nlohmann::json bs = nlohmann::json::array();
  for (const auto& b : c.boundaries()) bs.push_back(to_json(b));
  return {{"field", std::string(field_name(tag))}, {"dims", c.dims()}, {"boundaries", std::move(bs)}};
}

template <Field F>
nlohmann::json to_json(const ChainComplex<F>& c) {
  return to_json(c, FieldTraits<F>::tag);
}

template <class R>
nlohmann::json to_json(const ChainMap<R>& f, FieldTag tag) {
  nlohmann::json maps = nlohmann::json::array();
  for (const auto& m : f.maps()) maps.push_back(to_json(m));
  return {{"source", to_json(f.source(), tag)}, {"target", to_json(f.target(), tag)}, {"maps", std::move(maps)}};
}

template <Field F>
nlohmann::json to_json(const ChainMap<F>& f) {
  return to_json(f, FieldTraits<F>::tag);
}

nlohmann::json to_json(const AnyComplex& c);
nlohmann::json to_json(const AnyMap& f);

}  // namespace qtorsion
