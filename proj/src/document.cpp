#include "qtorsion/document.hpp"

#include <fstream>
#include <sstream>

#include "qtorsion/error.hpp"

namespace qtorsion {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& locus, const std::string& what) {
  throw Error(ErrorCode::ParseError, locus + ": " + what);
}

const json& member(const json& doc, const std::string& key, const std::string& locus) {
  if (!doc.is_object()) parse_fail(locus.empty() ? "document" : locus, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) parse_fail(locus.empty() ? key : locus + "." + key, "missing");
  return *it;
}

std::string join(const std::string& locus, const std::string& key) {
  return locus.empty() ? key : locus + "." + key;
}

FieldTag parse_field(const json& doc, const std::string& locus) {
  const json& f = member(doc, "field", locus);
  if (f == "Q") return FieldTag::Q;
  if (f == "Q(t)") return FieldTag::Qt;
  parse_fail(join(locus, "field"), "expected \"Q\" or \"Q(t)\"");
}

std::vector<std::size_t> parse_dims(const json& doc, const std::string& locus) {
  const json& d = member(doc, "dims", locus);
  const std::string where = join(locus, "dims");
  if (!d.is_array() || d.empty()) parse_fail(where, "expected a nonempty array");
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i].is_number_integer() || d[i].get<long>() < 0)
      parse_fail(where + "[" + std::to_string(i) + "]", "expected a nonnegative integer");
    dims.push_back(d[i].get<std::size_t>());
  }
  return dims;
}

template <class R, class Parse>
Matrix<R> parse_matrix(const json& m, std::size_t rows, std::size_t cols, const std::string& locus, Parse parse) {
  if (!m.is_array()) parse_fail(locus, "expected an array of rows");
  if (m.size() != rows)
    throw Error(ErrorCode::ShapeMismatch,
                locus + " has " + std::to_string(m.size()) + " rows, expected " + std::to_string(rows));
  Matrix<R> out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string row_locus = locus + "[" + std::to_string(i) + "]";
    if (!m[i].is_array()) parse_fail(row_locus, "expected an array");
    if (m[i].size() != cols)
      throw Error(ErrorCode::ShapeMismatch,
                  row_locus + " has " + std::to_string(m[i].size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) {
      const std::string where = row_locus + "[" + std::to_string(j) + "]";
      const json& x = m[i][j];
      if (!x.is_string()) parse_fail(where, "scalars must be strings");
      try {
        out(i, j) = parse(x.get<std::string>());
      } catch (const Error& e) {
        parse_fail(where, std::string(error_name(e.code())) + (e.detail().empty() ? "" : " (" + e.detail() + ")"));
      }
    }
  }
  return out;
}

template <class R, class Parse>
ChainComplex<R> build_complex(const json& doc, const std::string& locus, Parse parse) {
  auto dims = parse_dims(doc, locus);
  const json& b = member(doc, "boundaries", locus);
  const std::string where = join(locus, "boundaries");
  if (!b.is_array()) parse_fail(where, "expected an array");
  if (b.size() + 1 != dims.size())
    throw Error(ErrorCode::ShapeMismatch, where + " has " + std::to_string(b.size()) + " entries, expected " +
                                              std::to_string(dims.size() - 1));
  std::vector<Matrix<R>> bs;
  for (std::size_t i = 0; i < b.size(); ++i)
    bs.push_back(parse_matrix<R>(b[i], dims[i + 1], dims[i], where + "[" + std::to_string(i) + "]", parse));
  return ChainComplex<R>(std::move(dims), std::move(bs));
}

Polynomial parse_polynomial(const std::string& s) {
  RationalFunction r = RationalFunction::parse(s);
  if (!r.is_polynomial()) throw Error(ErrorCode::NotPolynomial, s);
  return r.numerator();
}

AnyComplex complex_at(const json& doc, const std::string& locus) {
  if (parse_field(doc, locus) == FieldTag::Q)
    return build_complex<Rational>(doc, locus, [](const std::string& s) { return Rational::parse(s); });
  return build_complex<RationalFunction>(doc, locus, [](const std::string& s) { return RationalFunction::parse(s); });
}

// Inline object, or a path string resolved against `base`.
json resolve_reference(const json& ref, const std::filesystem::path& base, const std::string& locus) {
  if (ref.is_object()) return ref;
  if (!ref.is_string()) parse_fail(locus, "expected a complex object or a file path");
  std::filesystem::path p = ref.get<std::string>();
  if (p.is_relative()) p = base / p;
  try {
    return read_json_file(p);
  } catch (const Error& e) {
    parse_fail(locus, e.detail());
  }
}

template <class R, class Parse>
ChainMap<R> build_map(const ChainComplex<R>& src, const ChainComplex<R>& tgt, const json& doc, Parse parse) {
  const json& maps = member(doc, "maps", "");
  if (!maps.is_array()) parse_fail("maps", "expected an array");
  const std::size_t m = std::max(src.length(), tgt.length());
  if (maps.size() != m + 1)
    throw Error(ErrorCode::ShapeMismatch,
                "maps has " + std::to_string(maps.size()) + " entries, expected " + std::to_string(m + 1));
  std::vector<Matrix<R>> mats;
  for (std::size_t i = 0; i <= m; ++i)
    mats.push_back(parse_matrix<R>(maps[i], src.dim(i), tgt.dim(i), "maps[" + std::to_string(i) + "]", parse));
  return ChainMap<R>(src, tgt, std::move(mats));
}

}  // namespace

FieldTag field_of(const AnyComplex& c) { return c.index() == 0 ? FieldTag::Q : FieldTag::Qt; }
FieldTag field_of(const AnyMap& f) { return f.index() == 0 ? FieldTag::Q : FieldTag::Qt; }

AnyComplex parse_complex(const json& doc, const std::filesystem::path&) { return complex_at(doc, ""); }

AnyMap parse_map(const json& doc, const std::filesystem::path& base) {
  AnyComplex src = complex_at(resolve_reference(member(doc, "source", ""), base, "source"), "source");
  AnyComplex tgt = complex_at(resolve_reference(member(doc, "target", ""), base, "target"), "target");
  if (src.index() != tgt.index())
    throw Error(ErrorCode::FieldMismatch, "source is over " + std::string(field_name(field_of(src))) +
                                              ", target over " + std::string(field_name(field_of(tgt))));
  if (src.index() == 0)
    return build_map(std::get<QComplex>(src), std::get<QComplex>(tgt), doc,
                     [](const std::string& s) { return Rational::parse(s); });
  return build_map(std::get<QtComplex>(src), std::get<QtComplex>(tgt), doc,
                   [](const std::string& s) { return RationalFunction::parse(s); });
}

PolyComplex parse_poly_complex(const json& doc) {
  if (parse_field(doc, "") != FieldTag::Qt)
    throw Error(ErrorCode::FieldMismatch, "polynomial complexes must use field \"Q(t)\"");
  return build_complex<Polynomial>(doc, "", parse_polynomial);
}

PolyChainMap parse_poly_map(const json& doc, const std::filesystem::path& base) {
  json s = resolve_reference(member(doc, "source", ""), base, "source");
  json t = resolve_reference(member(doc, "target", ""), base, "target");
  for (const auto* d : {&s, &t})
    if (parse_field(*d, "") != FieldTag::Qt)
      throw Error(ErrorCode::FieldMismatch, "polynomial complexes must use field \"Q(t)\"");
  auto src = build_complex<Polynomial>(s, "source", parse_polynomial);
  auto tgt = build_complex<Polynomial>(t, "target", parse_polynomial);
  return build_map(src, tgt, doc, parse_polynomial);
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    // e.byte is a 1-based offset; report line and column instead.
    std::ifstream again(path);
    std::string text((std::istreambuf_iterator<char>(again)), std::istreambuf_iterator<char>());
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError,
                path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
  }
}

AnyComplex load_complex(const std::filesystem::path& path) {
  return parse_complex(read_json_file(path), path.parent_path());
}

AnyMap load_map(const std::filesystem::path& path) { return parse_map(read_json_file(path), path.parent_path()); }

json to_json(const AnyComplex& c) {
  return std::visit([](const auto& x) { return to_json(x); }, c);
}

json to_json(const AnyMap& f) {
  return std::visit([](const auto& x) { return to_json(x); }, f);
}

}  // namespace qtorsion
