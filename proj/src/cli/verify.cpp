#include "nesthilb/cli.hpp"
#include "nesthilb/fock.hpp"

#include "oracle.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace nesthilb::cli {

namespace {

class Reporter {
 public:
  explicit Reporter(std::ostream& out) : out_(out) {}

  void check(bool ok, const std::string& name, const std::string& detail = "") {
    if (ok) {
      out_ << "PASS " << name << "\n";
      return;
    }
    out_ << "FAIL " << name;
    if (!detail.empty()) out_ << ": " << detail;
    out_ << "\n";
    if (pass_) first_failure_ = name + (detail.empty() ? "" : ": " + detail);
    pass_ = false;
  }

  bool finish(const std::string& suite) {
    if (!pass_) out_ << "first counterexample: " << first_failure_ << "\n";
    out_ << "suite " << suite << ": " << (pass_ ? "pass" : "fail") << "\n";
    return pass_;
  }

 private:
  std::ostream& out_;
  bool pass_ = true;
  std::string first_failure_;
};

std::string point(const std::string& surface, const std::string& bundle, int n1, int n2) {
  return surface + " " + bundle + " n1=" + std::to_string(n1) + " n2=" + std::to_string(n2);
}

// Surfaces and bundles of the route and closed-form checks.
const std::vector<std::pair<std::string, std::vector<std::string>>>& bundle_matrix() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> m{
      {"p2", {"O", "O(1)", "K"}},
      {"p1xp1", {"O", "O(1,0)", "K"}},
  };
  return m;
}

void suite_gottsche(int cap, Reporter& r) {
  for (const char* name : {"p2", "p1xp1", "hirzebruch(1)"}) {
    const ToricSurface s = builtin_surface(name);
    const Series2 g = gottsche_series(s, cap);
    const auto counts = fixed_point_counts(s, cap);
    for (int n = 0; n <= cap; ++n) {
      const Rational expected = g.coefficient(n, n);
      r.check(expected == Rational(counts[static_cast<std::size_t>(n)]),
              std::string(name) + " n=" + std::to_string(n),
              "fixed points " + std::to_string(counts[static_cast<std::size_t>(n)]) +
                  ", product coefficient " + expected.to_string());
    }
  }
}

void suite_nestprod(int cap, const EngineOptions& opts, Reporter& r) {
  for (const auto& [surface, bundles] : bundle_matrix()) {
    const ToricSurface s = builtin_surface(surface);
    for (const auto& label : bundles) {
      const auto m = bundle_by_label(s, label);
      for (int total = 0; total <= cap; ++total)
        for (int n2 = 0; 2 * n2 <= total; ++n2) {
          const int n1 = total - n2;
          const Rational a = nested_route_invariant(s, m, n1, n2, opts);
          const Rational b = product_route_invariant(s, m, n1, n2, opts);
          r.check(a == b, point(surface, label, n1, n2),
                  "nested " + a.to_string() + ", product " + b.to_string());
        }
    }
  }
}

void suite_theorem4(int cap, const EngineOptions& opts, Reporter& r) {
  for (const auto& [surface, bundles] : bundle_matrix()) {
    const ToricSurface s = builtin_surface(surface);
    for (const auto& label : bundles) {
      const auto m = bundle_by_label(s, label);
      const Series2 z = z_nest_series(s, m, cap, opts);
      const Series2 closed = closed_form_series(s, m, cap);
      for (int total = 0; total <= cap; ++total)
        for (int n2 = 0; n2 <= total; ++n2) {
          const int n1 = total - n2;
          r.check(z.coefficient(n1, n2) == closed.coefficient(n1, n2), point(surface, label, n1, n2),
                  "localization " + z.coefficient(n1, n2).to_string() + ", closed form " +
                      closed.coefficient(n1, n2).to_string());
        }
    }
  }
}

void suite_universality(int cap, const EngineOptions& opts, Reporter& r) {
  const UniversalSeries u = universal_series_fit(cap, opts);
  for (const auto& g : universal_generators()) {
    const ToricSurface s = builtin_surface(g.surface);
    const auto m = bundle_by_label(s, g.bundle);
    r.check(universal_prediction(u, chern_numbers(s, m)) == z_nest_series(s, m, cap, opts),
            "generator " + g.surface + " " + g.bundle);
  }
  const ToricSurface f1 = builtin_surface("hirzebruch(1)");
  for (const char* label : {"O", "negsection", "fiber", "section"}) {
    const auto m = bundle_by_label(f1, label);
    const Series2 predicted = universal_prediction(u, chern_numbers(f1, m));
    const Series2 direct = z_nest_series(f1, m, cap, opts);
    r.check(predicted == direct, std::string("hirzebruch(1) ") + label,
            "predicted " + predicted.to_string() + ", direct " + direct.to_string());
  }
}

void suite_fock(int cap, Reporter& r) {
  const std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> cases{
      {"p2", {{"O", "O"}, {"O(1)", "O"}, {"O", "O(1)"}, {"O(1)", "K"}}},
      {"p1xp1", {{"O", "O"}, {"O(1,0)", "O(0,1)"}, {"K", "O(1,0)"}}},
  };
  for (const auto& [surface, pairs] : cases) {
    const ToricSurface s = builtin_surface(surface);
    const fock::Lattice l = fock::lattice_from_surface(s);
    const Series2 g = gottsche_series(s, cap / 2);
    const Series2 zero_trace = fock::w_trace(l, l.zero(), l.zero(), cap);
    bool degenerate = true;
    for (const auto& t : zero_trace.terms())
      degenerate = degenerate && t.d1 == t.d2 && t.coeff == g.coefficient(t.d1, t.d2);
    for (const auto& t : g.terms())
      degenerate = degenerate && zero_trace.coefficient(t.d1, t.d2) == t.coeff;
    r.check(degenerate, surface + " zero bundles give the Gottsche series");
    for (const auto& [a, b] : pairs) {
      const auto m1 = fock::embed_bundle(s, bundle_by_label(s, a));
      const auto m2 = fock::embed_bundle(s, bundle_by_label(s, b));
      const Series2 trace = fock::w_trace(l, m1, m2, cap);
      const Series2 product = fock::str_product(l, m1, m2, cap);
      r.check(trace == product, surface + " trace (" + a + ", " + b + ")",
              "trace " + trace.to_string() + ", product " + product.to_string());
      r.check(fock::gamma_commutation_check(l, m1, m2, cap),
              surface + " Gamma commutation (" + a + ", " + b + ")");
    }
    const auto h = fock::embed_bundle(s, bundle_by_label(s, pairs.back().first));
    r.check(fock::q_conjugation_check(l, h, cap), surface + " q^N conjugation");
  }
}

void suite_oracle(int cap, Reporter& r) {
  for (int n1 = 0; n1 <= cap; ++n1)
    for (int n2 = 0; n2 <= n1; ++n2)
      for (const auto& p : enumerate_nested_pairs(n1, n2)) {
        const std::string name = "(" + p.outer.to_string() + ", " + p.inner.to_string() + ")";
        const LaurentPoly expected = oracle::tangent(p.outer, p.inner);
        const LaurentPoly got = virtual_tangent_character(p).poly();
        r.check(got == expected, "tangent " + name,
                "formula " + got.to_string() + ", oracle " + expected.to_string());
        r.check(block_character(p.outer, p.inner).poly() == oracle::ext_block(p.outer, p.inner),
                "block " + name);
      }
  const ToricSurface p2 = builtin_surface("p2");
  for (int n1 = 0; n1 <= cap; ++n1)
    for (int n2 = 0; n2 <= n1; ++n2) {
      const long a = static_cast<long>(enumerate_global_fixed_points(p2, n1, n2).size());
      const long b = oracle::count_nested_fixed_points(3, n1, n2);
      r.check(a == b, "p2 fixed points n1=" + std::to_string(n1) + " n2=" + std::to_string(n2),
              "enumerated " + std::to_string(a) + ", brute force " + std::to_string(b));
    }
}

void suite_duality(int cap, const EngineOptions& opts, Reporter& r) {
  const std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> cases{
      {"p2", {{"O", "O"}, {"O(1)", "O"}, {"O", "K"}}},
      {"p1xp1", {{"O(1,0)", "O(0,1)"}}},
  };
  for (const auto& [surface, pairs] : cases) {
    const ToricSurface s = builtin_surface(surface);
    for (const auto& [a, b] : pairs) {
      const auto m1 = bundle_by_label(s, a);
      const auto m2 = bundle_by_label(s, b);
      const auto m2d = dual_bundle(s, m2);
      for (int n1 = 0; n1 <= cap; ++n1)
        for (int n2 = 0; n1 + n2 <= cap; ++n2) {
          const Rational swapped = top_chern_pairing(s, m1, m2, n1, n2, true, opts);
          Rational dual = top_chern_pairing(s, m1, m2d, n1, n2, false, opts);
          if ((n1 + n2) % 2 == 1) dual = -dual;
          r.check(swapped == dual, point(surface, a + "|" + b, n1, n2),
                  "swapped " + swapped.to_string() + ", signed dual " + dual.to_string());
        }
    }
  }
}

void suite_multi(int cap, const EngineOptions& opts, Reporter& r) {
  const ToricSurface s = builtin_surface("p2");
  const auto h = bundle_by_label(s, "O(1)");
  const auto o = trivial_bundle(s);
  for (int total = 0; total <= cap; ++total)
    for (int n2 = 0; 2 * n2 <= total; ++n2) {
      const int n1 = total - n2;
      const Rational a = multi_bundle_invariant(s, {h, h}, {o}, n1, n2, Route::nested, opts);
      const Rational b = multi_bundle_invariant(s, {h, h}, {o}, n1, n2, Route::product, opts);
      r.check(a == b, point("p2", "[O(1),O(1)]/[O]", n1, n2),
              "nested " + a.to_string() + ", product " + b.to_string());
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gottsche",     "nestprod", "theorem4", "universality",
                                              "fock",         "oracle",   "duality",  "multi"};
  return names;
}

int default_suite_cap(const std::string& suite) {
  static const std::map<std::string, int> caps{
      {"gottsche", 6}, {"nestprod", 5}, {"theorem4", 5}, {"universality", 4},
      {"fock", 3},     {"oracle", 3},   {"duality", 4},  {"multi", 4}};
  const auto it = caps.find(suite);
  if (it == caps.end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return it->second;
}

bool run_suite(const std::string& suite, int cap, const EngineOptions& opts, std::ostream& out) {
  if (cap < 0) throw std::invalid_argument("cap must be nonnegative");
  Reporter r(out);
  if (suite == "gottsche") suite_gottsche(cap, r);
  else if (suite == "nestprod") suite_nestprod(cap, opts, r);
  else if (suite == "theorem4") suite_theorem4(cap, opts, r);
  else if (suite == "universality") {
    if (cap < 1) throw std::invalid_argument("universality needs cap >= 1");
    suite_universality(cap, opts, r);
  } else if (suite == "fock") suite_fock(cap, r);
  else if (suite == "oracle") suite_oracle(cap, r);
  else if (suite == "duality") suite_duality(cap, opts, r);
  else if (suite == "multi") suite_multi(cap, opts, r);
  else throw std::invalid_argument("unknown suite '" + suite + "'");
  return r.finish(suite);
}

}  // namespace nesthilb::cli
