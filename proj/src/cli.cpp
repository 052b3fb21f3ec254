#include "qtorsion/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "qtorsion/document.hpp"
#include "qtorsion/error.hpp"
#include "qtorsion/generator.hpp"
#include "qtorsion/torsion.hpp"
#include "qtorsion/ufd.hpp"

namespace qtorsion {

using nlohmann::json;

namespace {

template <Field F>
json map_instance(Rng& rng, const GenParams& p) {
  const std::string& profile = p.profile;
  Shape a = random_shape(rng, p.length, p.max_dim);
  if (profile == "non-qiso" && a.y[0] == 0) {
    // make room for a nonzero H_0 so the degenerate map really fails
    a.y[0] = 1;
    if (a.dim(0) > p.max_dim) a.x[0] = p.max_dim - 1;
  }
  auto src = random_complex<F>(rng, a);
  if (profile == "self") return to_json(random_chain_map(rng, src, src, MapKind::QuasiIso));
  Shape b = random_shape(rng, p.length, p.max_dim, &a.y);
  auto tgt = random_complex<F>(rng, b);
  return to_json(random_chain_map(rng, src, tgt, profile == "iso" ? MapKind::QuasiIso : MapKind::Degenerate));
}

template <Field F>
json acyclic_instance(Rng& rng, const GenParams& p) {
  Shape a = random_shape(rng, p.length, p.max_dim, nullptr, true);
  return to_json(random_complex<F>(rng, a).complex);
}

std::string join_dims(const std::vector<std::size_t>& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + std::to_string(d[i]);
  return s + "]";
}

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::UsageError || code == ErrorCode::ParamOutOfRange ? 2 : 1;
}

// One parsed command line.
struct Options {
  std::string command;
  std::string map_file;
  std::string complex_file;
  std::string out_file;
  bool json = false;
  std::uint64_t seed = 1;
  std::optional<long> degree;
  GenParams gen;
  std::string field = "Q";
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  void run() {
    const std::string& c = o_.command;
    if (c == "validate") return validate();
    if (c == "homology") return homology();
    if (c == "torsion") return torsion_cmd(false);
    if (c == "torsion-self") return torsion_cmd(true);
    if (c == "torsion-acyclic") return torsion_acyclic_cmd();
    if (c == "dual") return dual();
    if (c == "snf") return snf();
    if (c == "ord") return ord();
    if (c == "turaev") return turaev();
    if (c == "gen") return gen();
    throw Error(ErrorCode::UsageError, "unknown command " + c);
  }

 private:
  const std::string& need_map() const {
    if (o_.map_file.empty()) throw Error(ErrorCode::UsageError, o_.command + " needs --map FILE");
    return o_.map_file;
  }
  const std::string& need_complex() const {
    if (o_.complex_file.empty()) throw Error(ErrorCode::UsageError, o_.command + " needs --complex FILE");
    return o_.complex_file;
  }

  void emit(const json& report, const std::string& human) {
    std::string text = o_.json ? report.dump(2) + "\n" : human;
    if (o_.out_file.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(o_.out_file);
    if (!f) throw Error(ErrorCode::UsageError, "cannot write " + o_.out_file);
    f << text;
  }

  // Documents written by dual/gen are always JSON.
  void emit_document(const json& doc) {
    if (o_.out_file.empty()) {
      out_ << doc.dump(2) << "\n";
      return;
    }
    std::ofstream f(o_.out_file);
    if (!f) throw Error(ErrorCode::UsageError, "cannot write " + o_.out_file);
    f << doc.dump(2) << "\n";
  }

  void validate() {
    if (!o_.map_file.empty()) {
      AnyMap f = load_map(o_.map_file);
      std::visit(
          [&](const auto& m) {
            emit({{"command", "validate"}, {"kind", "map"}, {"field", field_name(field_of(f))}, {"ok", true}},
                 "ok: chain map over " + std::string(field_name(field_of(f))) + ", length " +
                     std::to_string(m.length()) + "\n");
          },
          f);
      return;
    }
    AnyComplex c = load_complex(need_complex());
    std::visit(
        [&](const auto& x) {
          emit({{"command", "validate"}, {"kind", "complex"}, {"field", field_name(field_of(c))}, {"dims", x.dims()},
                {"ok", true}},
               "ok: complex over " + std::string(field_name(field_of(c))) + ", dims " + join_dims(x.dims()) + "\n");
        },
        c);
  }

  void homology() {
    AnyComplex c = load_complex(need_complex());
    std::visit(
        [&](const auto& x) {
          auto h = homology_data(x);
          json degrees = json::array();
          std::ostringstream s;
          for (std::size_t i = 0; i < h.size(); ++i) {
            degrees.push_back({{"degree", i},
                               {"betti", h[i].betti},
                               {"boundary_rank", h[i].boundary_rank},
                               {"cycles", to_json(h[i].cycles)},
                               {"boundaries", to_json(h[i].boundaries)},
                               {"representatives", to_json(h[i].reps)}});
            s << "H_" << i << ": dim " << h[i].betti << ", rank B_" << i << " = " << h[i].boundary_rank;
            for (std::size_t r = 0; r < h[i].reps.rows(); ++r) {
              s << (r ? ", " : "; reps ") << "(";
              for (std::size_t k = 0; k < h[i].reps.cols(); ++k) s << (k ? ", " : "") << h[i].reps(r, k);
              s << ")";
            }
            s << "\n";
          }
          emit({{"command", "homology"}, {"field", field_name(field_of(c))}, {"degrees", degrees}}, s.str());
        },
        c);
  }

  void torsion_cmd(bool self) {
    AnyMap f = load_map(need_map());
    std::string tau = std::visit(
        [&](const auto& m) { return (self ? torsion_self_map(m) : torsion(m)).to_string(); }, f);
    emit({{"command", o_.command}, {"field", field_name(field_of(f))}, {"tau", tau}}, "tau = " + tau + "\n");
  }

  void torsion_acyclic_cmd() {
    AnyComplex c = load_complex(need_complex());
    std::string tau = std::visit([](const auto& x) { return torsion_acyclic(x).to_string(); }, c);
    emit({{"command", o_.command}, {"field", field_name(field_of(c))}, {"tau", tau}}, "tau = " + tau + "\n");
  }

  void dual() {
    if (!o_.map_file.empty()) {
      AnyMap f = load_map(o_.map_file);
      emit_document(std::visit([](const auto& m) { return to_json(dual_map(m)); }, f));
      return;
    }
    AnyComplex c = load_complex(need_complex());
    emit_document(std::visit([](const auto& x) { return to_json(dual_complex(x)); }, c));
  }

  PolyComplex poly_complex() const { return parse_poly_complex(read_json_file(need_complex())); }

  std::size_t degree_in(std::size_t top) const {
    if (!o_.degree) throw Error(ErrorCode::UsageError, o_.command + " needs --degree I");
    if (*o_.degree < 0 || static_cast<std::size_t>(*o_.degree) > top)
      throw Error(ErrorCode::DegreeOutOfRange, "valid degrees are 0.." + std::to_string(top),
                  static_cast<int>(*o_.degree));
    return static_cast<std::size_t>(*o_.degree);
  }

  void snf() {
    PolyComplex c = poly_complex();
    if (c.length() == 0) throw Error(ErrorCode::UsageError, "complex has no boundaries");
    std::vector<std::size_t> which;
    if (o_.degree) {
      which.push_back(degree_in(c.length() - 1));
    } else {
      for (std::size_t i = 0; i < c.length(); ++i) which.push_back(i);
    }
    json items = json::array();
    std::ostringstream s;
    for (auto i : which) {
      SmithDecomposition d = smith_normal_form(c.boundary(i));
      json factors = json::array();
      s << "d_" << i << ": ";
      auto f = d.invariant_factors();
      for (std::size_t k = 0; k < f.size(); ++k) {
        factors.push_back(f[k].to_string());
        s << (k ? ", " : "") << f[k];
      }
      if (f.empty()) s << "(zero)";
      s << "\n";
      items.push_back({{"degree", i}, {"invariant_factors", factors}, {"rank", d.rank}});
    }
    emit({{"command", "snf"}, {"boundaries", items}}, s.str());
  }

  void ord() {
    PolyComplex c = poly_complex();
    std::size_t i = degree_in(c.length());
    std::string v = order_of_homology(c, i).to_string();
    emit({{"command", "ord"}, {"degree", i}, {"order", v}}, "ord H_" + std::to_string(i) + " = " + v + "\n");
  }

  void turaev() {
    PolyComplex c = poly_complex();
    std::string tau = turaev_torsion(c).to_string();
    emit({{"command", "turaev"}, {"tau", tau}, {"up_to", "nonzero rational factor"}},
         "tau = " + tau + "\n(up to a nonzero rational factor)\n");
  }

  void gen() {
    GenParams p = o_.gen;
    if (o_.field == "Q") {
      p.field = FieldTag::Q;
    } else if (o_.field == "Q(t)") {
      p.field = FieldTag::Qt;
    } else {
      throw Error(ErrorCode::ParamOutOfRange, "--field must be Q or Q(t)");
    }
    emit_document(gen_instance(o_.seed, p));
  }

  const Options& o_;
  std::ostream& out_;
};

}  // namespace

json gen_instance(std::uint64_t seed, const GenParams& p) {
  if (p.length > 6) throw Error(ErrorCode::ParamOutOfRange, "length must be at most 6");
  if (p.max_dim < 1 || p.max_dim > 8) throw Error(ErrorCode::ParamOutOfRange, "max-dim must be in 1..8");
  const bool acyclic = p.profile == "acyclic";
  if (!acyclic && p.profile != "iso" && p.profile != "self" && p.profile != "non-qiso")
    throw Error(ErrorCode::ParamOutOfRange, "unknown profile " + p.profile);
  Rng rng(seed);
  json doc;
  if (p.field == FieldTag::Q) {
    doc = acyclic ? acyclic_instance<Rational>(rng, p) : map_instance<Rational>(rng, p);
  } else {
    doc = acyclic ? acyclic_instance<RationalFunction>(rng, p) : map_instance<RationalFunction>(rng, p);
  }
  if (!acyclic) doc["comment"] = "generated, seed " + std::to_string(seed) + ", profile " + p.profile;
  return doc;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact torsion of chain maps over Q and Q(t)", "qtorsion"};
  app.require_subcommand(1);
  Options o;
  auto add_io = [&](CLI::App* sub, bool map, bool complex) {
    if (map) sub->add_option("--map", o.map_file, "chain map document");
    if (complex) sub->add_option("--complex", o.complex_file, "complex document");
    sub->add_flag("--json", o.json, "machine-readable report");
    sub->add_option("--out", o.out_file, "write output to FILE");
  };
  add_io(app.add_subcommand("validate", "check a complex or chain map"), true, true);
  add_io(app.add_subcommand("homology", "canonical homology data"), false, true);
  add_io(app.add_subcommand("torsion", "torsion of a quasi-isomorphism"), true, false);
  add_io(app.add_subcommand("torsion-self", "torsion of a self-map from induced maps"), true, false);
  add_io(app.add_subcommand("torsion-acyclic", "torsion of an acyclic complex"), false, true);
  add_io(app.add_subcommand("dual", "dual complex or dual map document"), true, true);
  for (const char* name : {"snf", "ord"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "snf" ? "Smith normal form of boundaries over Q[t]"
                                                                    : "order of H_I over Q[t]");
    add_io(sub, false, true);
    sub->add_option("--degree", o.degree, "degree I");
  }
  add_io(app.add_subcommand("turaev", "alternating product of homology orders over Q[t]"), false, true);
  auto* gen = app.add_subcommand("gen", "seeded random instance");
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--length", o.gen.length, "complex length m (<= 6)");
  gen->add_option("--max-dim", o.gen.max_dim, "largest dimension (<= 8)");
  gen->add_option("--profile", o.gen.profile, "iso | self | non-qiso | acyclic");
  gen->add_option("--field", o.field, "Q | Q(t)");
  gen->add_option("--out", o.out_file, "write the document to FILE");

  std::vector<const char*> argv{"qtorsion"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: UsageError: " << e.what() << "\n";
    return 2;
  }
  o.command = app.get_subcommands().front()->get_name();
  try {
    Runner(o, out).run();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return 0;
}

}  // namespace qtorsion
