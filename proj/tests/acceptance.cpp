// Acceptance run: one [PASS]/[FAIL] line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <vector>
#include <string>

#include "fixtures.hpp"
#include "properties.hpp"
#include "qtorsion/torsion.hpp"
#include "qtorsion/ufd.hpp"

using namespace qtorsion;
using QM = Matrix<Rational>;

namespace {

struct Verdict {
  bool ok = true;
  std::string note;
};

class Batch {
 public:
  template <class Check>
  void run(const std::string& name, Check check, std::uint64_t n, std::uint64_t first = 0) {
    for (std::uint64_t seed = first; seed < first + n; ++seed) {
      ++total_;
      try {
        props::Outcome r = check(seed);
        if (r.sign > 0) ++plus_;
        if (r.sign < 0) ++minus_;
        if (!r.observation.empty()) {
          ++units_[r.observation];
          log_.push_back(name + " seed " + std::to_string(seed) + ": " + r.observation);
        }
        if (!r.ok) fail(name, seed, r.detail);
      } catch (const std::exception& e) {
        fail(name, seed, std::string("threw ") + e.what());
      }
    }
  }

  bool ok() const { return failures_ == 0; }
  int total() const { return total_; }
  int plus() const { return plus_; }
  int minus() const { return minus_; }
  const std::map<std::string, int>& units() const { return units_; }
  const std::vector<std::string>& log() const { return log_; }
  std::string summary() const {
    return std::to_string(total_ - failures_) + "/" + std::to_string(total_) + " ok" +
           (first_.empty() ? "" : "; first failure " + first_);
  }

 private:
  void fail(const std::string& name, std::uint64_t seed, const std::string& why) {
    if (failures_++ == 0) first_ = name + " seed " + std::to_string(seed) + ": " + why;
  }

  int total_ = 0;
  int failures_ = 0;
  int plus_ = 0;
  int minus_ = 0;
  std::map<std::string, int> units_;
  std::vector<std::string> log_;
  std::string first_;
};

// Observed rational units, condensed: how often the ratio was exactly 1, -1
// or some other constant.
std::string unit_list(const std::map<std::string, int>& units) {
  int one = 0, minus_one = 0, other = 0;
  for (const auto& [u, n] : units) {
    if (u == "1") one += n;
    else if (u == "-1") minus_one += n;
    else other += n;
  }
  return "1 x" + std::to_string(one) + ", -1 x" + std::to_string(minus_one) + ", other constants x" +
         std::to_string(other) + " (" + std::to_string(units.size()) + " distinct)";
}

Verdict golden_triangle() {
  auto f = fixtures::q_map("example1.map.json");
  Rational tau = torsion(f);
  // h_0 = (1, 1, 1) as in the hand computation; b_0 is already canonical.
  BasisChoice<Rational> choice;
  choice.homology = {QM{{1, 1, 1}}, std::nullopt};
  auto b = torsion_brackets(f, choice);
  bool ok = tau == Rational(1, 2) && b.source[0] == Rational(3) && b.target[0] == Rational(3) &&
            b.value == Rational(1, 2);
  return {ok, "tau = " + tau.to_string() + ", degree-0 brackets " + b.source[0].to_string() + "/" +
                  b.target[0].to_string()};
}

Verdict golden_square() {
  auto f = fixtures::q_map("example2.map.json");
  Rational fast = torsion_self_map(f);
  Rational full = torsion(f);
  return {fast == Rational(1, 2) && full == fast, "self-map " + fast.to_string() + ", definition " + full.to_string()};
}

Verdict golden_figure_eight() {
  auto f = fixtures::q_map("example3.map.json");
  Rational tau = torsion(f);
  auto induced = induced_homology_maps(f);
  bool ok = tau == Rational(1) && induced[1] == (QM{{1, 1}, {0, 1}});
  return {ok, "tau = " + tau.to_string()};
}

Verdict multiplicativity() {
  Batch q, qt;
  q.run("Q", props::multiplicativity<Rational>, 200);
  qt.run("Q(t)", props::multiplicativity<RationalFunction>, 200);
  return {q.ok() && qt.ok(), "Q " + q.summary() + "; Q(t) " + qt.summary()};
}

Verdict well_definedness() {
  Batch b;
  b.run("choices", [](std::uint64_t s) { return props::well_definedness<Rational>(s, 10); }, 100);
  return {b.ok(), b.summary() + " (10 choices each)"};
}

Verdict sum_sign() {
  Batch b;
  b.run("sum", props::sum_sign<Rational>, 200);
  bool both = b.plus() > 0 && b.minus() > 0;
  return {b.ok() && both, b.summary() + "; predicted +1 x" + std::to_string(b.plus()) + ", -1 x" +
                              std::to_string(b.minus())};
}

Verdict duality() {
  Batch b;
  b.run("dual", props::duality<Rational>, 200);
  return {b.ok(), b.summary() + "; predicted +1 x" + std::to_string(b.plus()) + ", -1 x" + std::to_string(b.minus())};
}

Verdict structure() {
  Batch b;
  b.run("acyclic quotient", props::acyclic_quotient<Rational>, 100);
  b.run("zero maps", props::zero_maps<Rational>, 100);
  b.run("injection/projection", props::injection_projection<Rational>, 100);
  b.run("base change", props::base_change<Rational>, 100);
  b.run("self-map", props::self_map<Rational>, 100);
  b.run("triangular", props::triangular<Rational>, 100);
  b.run("quotient", props::quotient<Rational>, 100);
  return {b.ok(), b.summary() + " over 7 families"};
}

Verdict homotopy() {
  Batch b;
  b.run("homotopy", props::homotopy<Rational>, 100);
  b.run("equivalence", props::chain_equivalence<Rational>, 100);
  b.run("conjugacy", props::conjugacy<Rational>, 100);
  return {b.ok(), b.summary() + " over 3 families"};
}

// Per-instance units for the polynomial suites, written with --units FILE.
std::vector<std::string> unit_log;

Verdict ufd() {
  Batch snf, turaev, order;
  snf.run("snf", props::snf_validity, 200);
  turaev.run("turaev", props::turaev_consistency, 100);
  order.run("order", props::order_formula, 100);
  unit_log = turaev.log();
  unit_log.insert(unit_log.end(), order.log().begin(), order.log().end());
  auto c = fixtures::poly_complex("tminus1.json");
  const RationalFunction expected = RationalFunction(Polynomial::t() - Polynomial(1)).inverse();
  RationalFunction by_orders = turaev_torsion(c);
  RationalFunction by_def = torsion_acyclic(tensor_to_fractions(c));
  bool example = by_orders == expected && by_def == expected && (by_def / by_orders).is_one();
  return {snf.ok() && turaev.ok() && order.ok() && example,
          "snf " + snf.summary() + "; orders " + turaev.summary() + " [units " + unit_list(turaev.units()) +
              "]; maps " + order.summary() + " [units " + unit_list(order.units()) + "]; (t-1) example " +
              by_def.to_string()};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Verdict()> check;
  double limit_ms;  // 0 = no limit
};

}  // namespace

int main(int argc, char** argv) {
  std::string units_file;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--units") units_file = argv[i + 1];
  const Criterion criteria[] = {
      {1, "golden triangle", golden_triangle, 10},
      {2, "golden square", golden_square, 0},
      {3, "golden figure eight", golden_figure_eight, 0},
      {4, "multiplicativity", multiplicativity, 30000},
      {5, "basis-choice independence", well_definedness, 0},
      {6, "direct-sum sign law", sum_sign, 0},
      {7, "duality", duality, 0},
      {8, "structure identities", structure, 0},
      {9, "homotopy, equivalence, conjugacy", homotopy, 0},
      {10, "polynomial ring suite", ufd, 60000},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("threw ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::string timing = std::to_string(ms);
    timing = timing.substr(0, timing.find('.') + 2) + " ms";
    if (c.limit_ms > 0) {
      timing += " (limit " + std::to_string(static_cast<int>(c.limit_ms)) + " ms)";
      if (ms >= c.limit_ms) v.ok = false;
    }
    if (!v.ok) ++failed;
    std::cout << (v.ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << ": " << v.note << " [" << timing
              << "]" << std::endl;
  }
  if (!units_file.empty()) {
    std::ofstream f(units_file);
    for (const auto& line : unit_log) f << line << "\n";
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
