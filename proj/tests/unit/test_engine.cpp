#include "nesthilb/engine.hpp"
#include "nesthilb/errors.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace nesthilb;

namespace {

// Solves the 4x4 system sum_j e[i][j] * chern(B_j) = unit_i exactly.
std::array<std::array<Rational, 4>, 4> solve_universal_exponents() {
  std::array<std::array<Rational, 4>, 4> chern{};  // chern[j] = (M^2, MK, K^2, c2) of B_j
  for (std::size_t j = 0; j < 4; ++j) {
    const auto& g = universal_generators()[j];
    const ToricSurface s = builtin_surface(g.surface);
    const ChernNumbers c = chern_numbers(s, bundle_by_label(s, g.bundle));
    chern[j] = {Rational(c.m_squared), Rational(c.m_dot_k), Rational(c.k_squared), Rational(c.c2)};
  }
  // log B_j = sum_i chern[j][i] log A_i, so log A = C^{-1} log B with C[j][i] = chern[j][i]
  std::array<std::array<Rational, 8>, 4> aug{};
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t i = 0; i < 4; ++i) aug[j][i] = chern[j][i];
    aug[j][4 + j] = 1;
  }
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    while (aug[pivot][col].is_zero()) ++pivot;
    std::swap(aug[pivot], aug[col]);
    const Rational p = aug[col][col];
    for (auto& x : aug[col]) x /= p;
    for (std::size_t r = 0; r < 4; ++r)
      if (r != col && !aug[r][col].is_zero()) {
        const Rational f = aug[r][col];
        for (std::size_t k = 0; k < 8; ++k) aug[r][k] -= f * aug[col][k];
      }
  }
  std::array<std::array<Rational, 4>, 4> out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i][j] = aug[i][4 + j];
  return out;
}

}  // namespace

TEST_CASE("fixed point enumeration") {
  const ToricSurface p2 = builtin_surface("p2");
  CHECK(enumerate_global_fixed_points(p2, 1, 0).size() == 3);
  CHECK(enumerate_global_fixed_points(p2, 1, 1).size() == 3);
  CHECK(enumerate_global_fixed_points(p2, 2, 1).size() == 12);
  CHECK_THROWS_WITH(enumerate_global_fixed_points(p2, 1, 2), "empty nesting range");
  for (const char* name : {"p2", "p1xp1"}) {
    const ToricSurface s = builtin_surface(name);
    for (int n1 = 0; n1 <= 4; ++n1)
      for (int n2 = 0; n2 <= n1; ++n2) {
        const auto points = enumerate_global_fixed_points(s, n1, n2);
        CHECK(static_cast<long>(points.size()) ==
              oracle::count_nested_fixed_points(s.euler_number(), n1, n2));
        for (const auto& p : points) {
          int a = 0, b = 0;
          for (const auto& pair : p.pairs) {
            a += pair.outer.size();
            b += pair.inner.size();
          }
          CHECK(a == n1);
          CHECK(b == n2);
        }
      }
  }
  CHECK(enumerate_product_fixed_points(p2, 1, 2).size() == 3 * 9);
}

TEST_CASE("nested route basics") {
  const ToricSurface p2 = builtin_surface("p2");
  const auto o = trivial_bundle(p2);
  CHECK(nested_route_invariant(p2, o, 0, 0) == 1);
  CHECK(nested_route_invariant(p2, bundle_by_label(p2, "O(1)"), 0, 0) == 1);
  CHECK(nested_route_invariant(p2, o, 1, 0) == 9);
  CHECK(product_route_invariant(p2, o, 0, 0) == 1);
  CHECK(product_route_invariant(p2, o, 1, 0) == 9);
  // <K, K - M> at (1,0); M^2 - M.K + e at (1,1)
  const auto h = bundle_by_label(p2, "O(1)");
  CHECK(nested_route_invariant(p2, h, 1, 0) == 12);
  CHECK(nested_route_invariant(p2, h, 1, 1) == 7);
  CHECK_THROWS_WITH(nested_route_invariant(p2, o, 1, 2), "empty nesting range");
  // the product side is defined for n1 < n2 and vanishes
  CHECK(product_route_invariant(p2, o, 1, 2) == 0);
  CHECK(product_route_invariant(p2, h, 0, 2) == 0);
}

TEST_CASE("localization records specializations and is seed independent") {
  const ToricSurface p1p1 = builtin_surface("p1xp1");
  const auto m = bundle_by_label(p1p1, "O(1,0)");
  EngineOptions a, b;
  b.seed = 12345;
  const Localization la = nested_route(p1p1, m, 2, 1, a);
  const Localization lb = nested_route(p1p1, m, 2, 1, b);
  CHECK(la.value == lb.value);
  CHECK(la.specializations.size() == 2);
  CHECK(la.specializations[0].x != lb.specializations[0].x);
  CHECK(la.agreement);
  EngineOptions threads;
  threads.jobs = 3;
  CHECK(nested_route(p1p1, m, 2, 1, threads).value == la.value);
  CHECK(product_route(p1p1, m, 2, 1, threads).value == la.value);
}

TEST_CASE("inconsistent integrands are rejected") {
  const ToricSurface p2 = builtin_surface("p2");
  // a class supported at one fixed point leaves a nonzero degree-0 coefficient
  auto first_chart = [](const GlobalFixedPoint& p) { return p.pairs[0].outer.size() == 1; };
  auto bad = [&](const GlobalFixedPoint& p, const Specialization&,
                 int cap) -> std::optional<GradedPoly> {
    if (!first_chart(p)) return std::nullopt;
    return GradedPoly::one(cap);
  };
  CHECK_THROWS_AS(localize_nested(p2, 1, 0, bad), InconsistencyError);
  // a top coefficient that is not the restriction of a global class
  auto drifting = [&](const GlobalFixedPoint& p, const Specialization& s,
                      int cap) -> std::optional<GradedPoly> {
    if (!first_chart(p)) return std::nullopt;
    return GradedPoly::monomial(cap, s.x, cap);
  };
  CHECK_THROWS_AS(localize_nested(p2, 1, 0, drifting), InconsistencyError);
  // summed over all points a constant integrand cancels exactly
  auto constant = [](const GlobalFixedPoint&, const Specialization&,
                     int cap) -> std::optional<GradedPoly> { return GradedPoly::one(cap); };
  CHECK(localize_nested(p2, 1, 0, constant).value == 0);
  // a degenerate point everywhere exhausts the redraws
  auto degenerate = [](const GlobalFixedPoint&, const Specialization&,
                       int) -> std::optional<GradedPoly> {
    throw DegenerateSpecialization("degenerate specialization");
  };
  CHECK_THROWS_AS(localize_nested(p2, 1, 0, degenerate), DegenerateSpecialization);
}

TEST_CASE("route agreement on small cases") {
  for (const char* name : {"p2", "p1xp1"}) {
    const ToricSurface s = builtin_surface(name);
    for (const char* label : {"O", "K", "D1"}) {
      const auto m = bundle_by_label(s, label);
      for (int n1 = 0; n1 <= 3; ++n1)
        for (int n2 = 0; n2 <= n1 && n1 + n2 <= 3; ++n2)
          CHECK(nested_route_invariant(s, m, n1, n2) == product_route_invariant(s, m, n1, n2));
    }
  }
}

TEST_CASE("multi bundle integrands") {
  const ToricSurface p2 = builtin_surface("p2");
  const auto o = trivial_bundle(p2);
  const auto h = bundle_by_label(p2, "O(1)");
  CHECK(multi_bundle_invariant(p2, {o}, {}, 2, 1, Route::nested) == nested_route_invariant(p2, o, 2, 1));
  CHECK(multi_bundle_invariant(p2, {h}, {h}, 2, 1, Route::nested) == 0);
  CHECK(multi_bundle_invariant(p2, {h}, {h}, 2, 1, Route::product) == 0);
  for (int n1 = 0; n1 <= 3; ++n1)
    for (int n2 = 0; n2 <= n1 && n1 + n2 <= 3; ++n2)
      CHECK(multi_bundle_invariant(p2, {h, h}, {o}, n1, n2, Route::nested) ==
            multi_bundle_invariant(p2, {h, h}, {o}, n1, n2, Route::product));
}

TEST_CASE("localization equals the closed product on small caps") {
  const ToricSurface p2 = builtin_surface("p2");
  const auto o = trivial_bundle(p2);
  const Series2 closed = closed_form_series(p2, o, 3);
  CHECK(closed.coefficient(0, 0) == 1);
  CHECK(closed.coefficient(1, 0) == 9);
  for (int n1 = 0; n1 <= 3; ++n1)
    for (int n2 = n1 + 1; n1 + n2 <= 3; ++n2) CHECK(closed.coefficient(n1, n2) == 0);
  CHECK(z_nest_series(p2, o, 3) == closed);
  const Series2 z = z_nest_series(p2, o, 2);
  CHECK(z.coefficient(0, 0) == 1);
  CHECK(z.coefficient(1, 0) == 9);
  CHECK(z.coefficient(0, 1) == 0);
  CHECK(z_series(p2, o, 2, Route::product) == z);
  const ToricSurface f2 = builtin_surface("hirzebruch(2)");
  const auto neg = bundle_by_label(f2, "negsection");
  CHECK(z_nest_series(f2, neg, 3) == closed_form_series(f2, neg, 3));
}

TEST_CASE("Gottsche series and fixed point counts") {
  const ToricSurface p2 = builtin_surface("p2");
  const Series2 g = gottsche_series(p2, 4);
  const std::vector<long> expected{1, 3, 9, 22, 51};
  CHECK(fixed_point_counts(p2, 4) == expected);
  for (int n = 0; n <= 4; ++n) CHECK(g.coefficient(n, n) == expected[static_cast<std::size_t>(n)]);
  CHECK(fixed_point_counts(builtin_surface("p1xp1"), 1)[1] == 4);
  for (const char* name : {"p2", "p1xp1", "hirzebruch(1)"}) {
    const ToricSurface s = builtin_surface(name);
    const Series2 gs = gottsche_series(s, 6);
    const auto counts = fixed_point_counts(s, 6);
    for (int n = 0; n <= 6; ++n) CHECK(gs.coefficient(n, n) == counts[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("universal exponents solve the generator system") {
  const auto solved = solve_universal_exponents();
  CHECK(solved == universal_exponents());
  CHECK(universal_exponents()[2][0] == Rational::parse("1/3"));
}

TEST_CASE("universal series") {
  const int cap = 3;
  const UniversalSeries u = universal_series_fit(cap);
  for (const auto& a : u.a) CHECK(a.constant_term() == 1);
  const ToricSurface p2 = builtin_surface("p2");
  CHECK(universal_prediction(u, ChernNumbers{0, 0, 9, 3}) == z_nest_series(p2, trivial_bundle(p2), cap));
  const ToricSurface f1 = builtin_surface("hirzebruch(1)");
  for (const char* label : {"O", "negsection"}) {
    const auto m = bundle_by_label(f1, label);
    CHECK(universal_prediction(u, chern_numbers(f1, m)) == z_nest_series(f1, m, cap));
  }
  CHECK_THROWS(universal_series_fit(0));
}

TEST_CASE("duality of the product integrand") {
  const ToricSurface p2 = builtin_surface("p2");
  const auto o = trivial_bundle(p2);
  const auto h = bundle_by_label(p2, "O(1)");
  for (int n1 = 0; n1 <= 2; ++n1)
    for (int n2 = 0; n1 + n2 <= 3; ++n2) {
      const Rational sign = (n1 + n2) % 2 == 0 ? 1 : -1;
      CHECK(top_chern_pairing(p2, h, o, n1, n2, true) ==
            sign * top_chern_pairing(p2, h, dual_bundle(p2, o), n1, n2, false));
    }
}
