// Document-level bindings: complexes and maps cross the boundary as JSON
// text, scalars as their canonical strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qtorsion/cli.hpp"
#include "qtorsion/document.hpp"
#include "qtorsion/error.hpp"
#include "qtorsion/torsion.hpp"
#include "qtorsion/ufd.hpp"

namespace py = pybind11;
using namespace qtorsion;
using nlohmann::json;

namespace {

AnyMap map_from(const std::string& text, const std::string& base) { return parse_map(json::parse(text), base); }

AnyComplex complex_from(const std::string& text) { return parse_complex(json::parse(text)); }

template <class Fn>
std::string on_map(const std::string& text, const std::string& base, Fn fn) {
  return std::visit([&](const auto& f) { return fn(f).to_string(); }, map_from(text, base));
}

std::string homology_report(const std::string& text) {
  return std::visit(
      [](const auto& c) {
        json out = json::array();
        for (const auto& h : homology_data(c))
          out.push_back({{"betti", h.betti},
                         {"boundary_rank", h.boundary_rank},
                         {"cycles", to_json(h.cycles)},
                         {"boundaries", to_json(h.boundaries)},
                         {"representatives", to_json(h.reps)}});
        return out.dump();
      },
      complex_from(text));
}

std::string induced_report(const std::string& text, const std::string& base) {
  return std::visit(
      [](const auto& f) {
        json out = json::array();
        for (const auto& m : induced_homology_maps(f)) out.push_back(to_json(m));
        return out.dump();
      },
      map_from(text, base));
}

std::string dual_document(const std::string& text, const std::string& base) {
  json doc = json::parse(text);
  if (doc.contains("source"))
    return std::visit([](const auto& f) { return to_json(dual_map(f)).dump(); }, parse_map(doc, base));
  return std::visit([](const auto& c) { return to_json(dual_complex(c)).dump(); }, parse_complex(doc));
}

PolyMatrix poly_matrix(const json& rows) {
  if (!rows.is_array()) throw Error(ErrorCode::ParseError, "expected an array of rows");
  std::vector<Row<Polynomial>> out;
  for (const auto& r : rows) {
    if (!r.is_array()) throw Error(ErrorCode::ParseError, "expected an array of rows");
    Row<Polynomial> row;
    for (const auto& x : r) {
      if (!x.is_string()) throw Error(ErrorCode::ParseError, "scalars must be strings");
      RationalFunction v = RationalFunction::parse(x.get<std::string>());
      if (!v.is_polynomial()) throw Error(ErrorCode::NotPolynomial, x.get<std::string>());
      row.push_back(v.numerator());
    }
    out.push_back(std::move(row));
  }
  return matrix_from_rows(out.empty() ? 0 : out[0].size(), out);
}

std::string smith_report(const std::string& text) {
  SmithDecomposition s = smith_normal_form(poly_matrix(json::parse(text)));
  json factors = json::array();
  for (const auto& p : s.invariant_factors()) factors.push_back(p.to_string());
  return json{{"u", to_json(s.u)},
              {"u_inverse", to_json(s.u_inverse)},
              {"v", to_json(s.v)},
              {"d", to_json(s.d)},
              {"rank", s.rank},
              {"invariant_factors", factors}}
      .dump();
}

PolyComplex poly_from(const std::string& text) { return parse_poly_complex(json::parse(text)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact torsion of chain maps over Q and Q(t)";

  static py::exception<Error> error_type(m, "QTorsionError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object degree = e.degree() ? py::object(py::int_(*e.degree())) : py::object(py::none());
      py::tuple args = py::make_tuple(e.what(), error_name(e.code()), degree, e.detail());
      PyErr_SetObject(error_type.ptr(), args.ptr());
    } catch (const json::exception& e) {
      py::tuple args = py::make_tuple(std::string("ParseError: ") + e.what(), "ParseError", py::none(), e.what());
      PyErr_SetObject(error_type.ptr(), args.ptr());
    }
  });

  m.def("rational", [](const std::string& s) { return Rational::parse(s).to_string(); });
  m.def("rational_function", [](const std::string& s) { return RationalFunction::parse(s).to_string(); });

  m.def("validate_complex", [](const std::string& t) { complex_from(t); });
  m.def("validate_map", [](const std::string& t, const std::string& base) { map_from(t, base); });
  m.def("homology", &homology_report);
  m.def("induced_maps", &induced_report);
  m.def("is_quasi_isomorphism", [](const std::string& t, const std::string& base) {
    return std::visit([](const auto& f) { return is_quasi_isomorphism(f); }, map_from(t, base));
  });
  m.def("torsion", [](const std::string& t, const std::string& base) {
    return on_map(t, base, [](const auto& f) { return torsion(f); });
  });
  m.def("torsion_self_map", [](const std::string& t, const std::string& base) {
    return on_map(t, base, [](const auto& f) { return torsion_self_map(f); });
  });
  m.def("torsion_acyclic", [](const std::string& t) {
    return std::visit([](const auto& c) { return torsion_acyclic(c).to_string(); }, complex_from(t));
  });
  m.def("dual", &dual_document);

  m.def("smith_normal_form", &smith_report);
  m.def("order_of_homology",
        [](const std::string& t, std::size_t i) { return order_of_homology(poly_from(t), i).to_string(); });
  m.def("turaev_torsion", [](const std::string& t) { return turaev_torsion(poly_from(t)).to_string(); });
  m.def("torsion_over_ufd", [](const std::string& t, const std::string& base) {
    return torsion_over_ufd(parse_poly_map(json::parse(t), base)).to_string();
  });

  m.def("generate", [](std::uint64_t seed, std::size_t length, std::size_t max_dim, const std::string& profile,
                       const std::string& field) {
    GenParams p{length, max_dim, profile, FieldTag::Q};
    if (field == "Q(t)") p.field = FieldTag::Qt;
    else if (field != "Q") throw Error(ErrorCode::ParamOutOfRange, "field must be Q or Q(t)");
    return gen_instance(seed, p).dump();
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
