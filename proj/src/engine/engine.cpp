#include "nesthilb/engine.hpp"

#include "nesthilb/errors.hpp"
#include "nesthilb/parallel.hpp"

#include <stdexcept>

namespace nesthilb {

namespace {

// All ways to write n as an ordered sum of `parts` nonnegative integers,
// largest first entry first.
void compositions(int n, int parts, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    current.push_back(n);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int k = n; k >= 0; --k) {
    current.push_back(k);
    compositions(n - k, parts - 1, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int n, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  compositions(n, parts, current, out);
  return out;
}

// Cartesian product of per-chart choice lists, last chart fastest.
template <typename T>
void cartesian(const std::vector<std::vector<T>>& choices, std::vector<T>& current,
               std::vector<std::vector<T>>& out) {
  if (current.size() == choices.size()) {
    out.push_back(current);
    return;
  }
  for (const T& c : choices[current.size()]) {
    current.push_back(c);
    cartesian(choices, current, out);
    current.pop_back();
  }
}

Character local_to_global(const Character& c, const Chart& chart) {
  return substitute_weights(c, chart.u, chart.v);
}

template <typename Point, typename PerPoint>
Localization localize(const std::vector<Point>& points, int dim, const PerPoint& per_point,
                      const EngineOptions& opts) {
  SpecializationSource source(opts.seed);
  Localization result;
  std::vector<GradedPoly> sums;
  for (int pass = 0; pass < 2; ++pass) {
    for (int attempt = 0;; ++attempt) {
      const Specialization spec = source.draw();
      try {
        GradedPoly sum = parallel_sum(points.size(), opts.jobs, GradedPoly(dim),
                                      [&](std::size_t i) { return per_point(points[i], spec); });
        result.specializations.push_back(spec);
        sums.push_back(std::move(sum));
        break;
      } catch (const DegenerateSpecialization&) {
        if (attempt >= opts.max_redraws)
          throw DegenerateSpecialization("no generic specialization after " +
                                         std::to_string(opts.max_redraws) + " redraws");
      }
    }
  }
  for (const GradedPoly& sum : sums)
    for (int k = 0; k < dim; ++k)
      if (!sum[k].is_zero())
        throw InconsistencyError("non-constant localization sum: degree " + std::to_string(k) +
                                 " coefficient " + sum[k].to_string());
  if (sums[0][dim] != sums[1][dim])
    throw InconsistencyError("specialization disagreement: " + sums[0][dim].to_string() +
                             " vs " + sums[1][dim].to_string());
  result.value = sums[0][dim];
  return result;
}

void check_nesting(int n1, int n2) {
  if (n1 < n2) throw std::invalid_argument("empty nesting range");
  if (n2 < 0) throw std::invalid_argument("negative number of points");
}

// c_{n}(E) at spec, or nullopt when E carries the trivial weight.
std::optional<Rational> top_chern(const Character& e, const Specialization& spec, int n) {
  if (e.has_trivial_weight()) return std::nullopt;
  return chern_poly(e, spec, n)[n];
}

GradedPoly chern_ratio(const std::vector<Character>& num, const std::vector<Character>& den,
                       const Specialization& spec, int cap) {
  GradedPoly out = GradedPoly::one(cap);
  for (const auto& c : num) out = out * chern_poly(c, spec, cap);
  GradedPoly d = GradedPoly::one(cap);
  for (const auto& c : den) d = d * chern_poly(c, spec, cap);
  return out / d;
}

}  // namespace

std::vector<std::vector<Partition>> enumerate_partition_tuples(int charts, int n) {
  if (n < 0) throw std::invalid_argument("negative number of points");
  std::vector<std::vector<Partition>> out;
  for (const auto& sizes : compositions(n, charts)) {
    std::vector<std::vector<Partition>> choices;
    for (int k : sizes) choices.push_back(enumerate_partitions(k));
    std::vector<Partition> current;
    cartesian(choices, current, out);
  }
  return out;
}

std::vector<GlobalFixedPoint> enumerate_global_fixed_points(const ToricSurface& s, int n1,
                                                            int n2) {
  check_nesting(n1, n2);
  const int k = s.euler_number();
  std::vector<GlobalFixedPoint> out;
  for (const auto& outer : compositions(n1, k)) {
    for (const auto& inner : compositions(n2, k)) {
      bool ok = true;
      for (int i = 0; i < k; ++i) ok = ok && inner[i] <= outer[i];
      if (!ok) continue;
      std::vector<std::vector<NestedPair>> choices;
      for (int i = 0; i < k; ++i) choices.push_back(enumerate_nested_pairs(outer[i], inner[i]));
      std::vector<std::vector<NestedPair>> tuples;
      std::vector<NestedPair> current;
      cartesian(choices, current, tuples);
      for (auto& t : tuples) out.push_back({std::move(t)});
    }
  }
  return out;
}

std::vector<ProductFixedPoint> enumerate_product_fixed_points(const ToricSurface& s, int n1,
                                                              int n2) {
  const auto first = enumerate_partition_tuples(s.euler_number(), n1);
  const auto second = enumerate_partition_tuples(s.euler_number(), n2);
  std::vector<ProductFixedPoint> out;
  out.reserve(first.size() * second.size());
  for (const auto& a : first)
    for (const auto& b : second) out.push_back({a, b});
  return out;
}

Character nested_tangent(const ToricSurface& s, const GlobalFixedPoint& p) {
  Character out;
  for (std::size_t i = 0; i < s.charts().size(); ++i)
    out += local_to_global(virtual_tangent_character(p.pairs[i]), s.charts()[i]);
  return out;
}

Character nested_bundle_character(const ToricSurface& s, const GlobalFixedPoint& p,
                                  const EquivariantLineBundle& m) {
  Character out;
  for (std::size_t i = 0; i < s.charts().size(); ++i) {
    const Character v = block_character(p.pairs[i].outer, p.pairs[i].inner);
    out += twist_character(local_to_global(v, s.charts()[i]), m.weights[i]);
  }
  return out;
}

Character product_tangent(const ToricSurface& s, const ProductFixedPoint& p) {
  Character out;
  for (std::size_t i = 0; i < s.charts().size(); ++i) {
    const Character v =
        block_character(p.first[i], p.first[i]) + block_character(p.second[i], p.second[i]);
    out += local_to_global(v, s.charts()[i]);
  }
  return out;
}

Character product_bundle_character(const ToricSurface& s, const ProductFixedPoint& p,
                                   const EquivariantLineBundle& m) {
  Character out;
  for (std::size_t i = 0; i < s.charts().size(); ++i) {
    const Character v = block_character(p.first[i], p.second[i]);
    out += twist_character(local_to_global(v, s.charts()[i]), m.weights[i]);
  }
  return out;
}

Character swapped_bundle_character(const ToricSurface& s, const ProductFixedPoint& p,
                                   const EquivariantLineBundle& m) {
  Character out;
  for (std::size_t i = 0; i < s.charts().size(); ++i) {
    const Character v = block_character(p.second[i], p.first[i]);
    out += twist_character(local_to_global(v, s.charts()[i]), m.weights[i]);
  }
  return out;
}

Localization localize_nested(const ToricSurface& s, int n1, int n2,
                             const NestedIntegrand& integrand, const EngineOptions& opts) {
  const int dim = n1 + n2;
  const auto points = enumerate_global_fixed_points(s, n1, n2);
  auto per_point = [&](const GlobalFixedPoint& p, const Specialization& spec) {
    auto value = integrand(p, spec, dim);
    if (!value) return GradedPoly(dim);
    return *value * (Rational(1) / euler_class(nested_tangent(s, p), spec));
  };
  return localize(points, dim, per_point, opts);
}

Localization localize_product(const ToricSurface& s, int n1, int n2,
                              const ProductIntegrand& integrand, const EngineOptions& opts) {
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("negative number of points");
  const int dim = 2 * (n1 + n2);
  const auto points = enumerate_product_fixed_points(s, n1, n2);
  auto per_point = [&](const ProductFixedPoint& p, const Specialization& spec) {
    auto value = integrand(p, spec, dim);
    if (!value) return GradedPoly(dim);
    return *value * (Rational(1) / euler_class(product_tangent(s, p), spec));
  };
  return localize(points, dim, per_point, opts);
}

std::string to_string(Route r) { return r == Route::nested ? "nested" : "product"; }

Localization nested_route(const ToricSurface& s, const EquivariantLineBundle& m, int n1, int n2,
                          const EngineOptions& opts) {
  return multi_bundle(s, {m}, {}, n1, n2, Route::nested, opts);
}

Localization product_route(const ToricSurface& s, const EquivariantLineBundle& m, int n1, int n2,
                           const EngineOptions& opts) {
  return multi_bundle(s, {m}, {}, n1, n2, Route::product, opts);
}

Rational nested_route_invariant(const ToricSurface& s, const EquivariantLineBundle& m, int n1,
                                int n2, const EngineOptions& opts) {
  return nested_route(s, m, n1, n2, opts).value;
}

Rational product_route_invariant(const ToricSurface& s, const EquivariantLineBundle& m, int n1,
                                 int n2, const EngineOptions& opts) {
  return product_route(s, m, n1, n2, opts).value;
}

Localization multi_bundle(const ToricSurface& s, const std::vector<EquivariantLineBundle>& ms,
                          const std::vector<EquivariantLineBundle>& ns, int n1, int n2, Route route,
                          const EngineOptions& opts) {
  if (route == Route::nested) {
    check_nesting(n1, n2);
    return localize_nested(
        s, n1, n2,
        [&](const GlobalFixedPoint& p, const Specialization& spec,
            int cap) -> std::optional<GradedPoly> {
          std::vector<Character> num, den;
          for (const auto& m : ms) num.push_back(nested_bundle_character(s, p, m));
          for (const auto& n : ns) den.push_back(nested_bundle_character(s, p, n));
          return chern_ratio(num, den, spec, cap);
        },
        opts);
  }
  const int n = n1 + n2;
  const EquivariantLineBundle o = trivial_bundle(s);
  return localize_product(
      s, n1, n2,
      [&](const ProductFixedPoint& p, const Specialization& spec,
          int cap) -> std::optional<GradedPoly> {
        const auto c = top_chern(product_bundle_character(s, p, o), spec, n);
        if (!c) return std::nullopt;
        std::vector<Character> num, den;
        for (const auto& m : ms) num.push_back(product_bundle_character(s, p, m));
        for (const auto& m : ns) den.push_back(product_bundle_character(s, p, m));
        return GradedPoly::monomial(n, *c, cap) * chern_ratio(num, den, spec, cap);
      },
      opts);
}

Rational multi_bundle_invariant(const ToricSurface& s,
                                const std::vector<EquivariantLineBundle>& ms,
                                const std::vector<EquivariantLineBundle>& ns, int n1, int n2,
                                Route route, const EngineOptions& opts) {
  return multi_bundle(s, ms, ns, n1, n2, route, opts).value;
}

Rational top_chern_pairing(const ToricSurface& s, const EquivariantLineBundle& m1,
                           const EquivariantLineBundle& m2, int n1, int n2, bool swapped,
                           const EngineOptions& opts) {
  const int n = n1 + n2;
  return localize_product(
             s, n1, n2,
             [&](const ProductFixedPoint& p, const Specialization& spec,
                 int cap) -> std::optional<GradedPoly> {
               const auto a = top_chern(product_bundle_character(s, p, m1), spec, n);
               if (!a) return std::nullopt;
               const Character second = swapped ? swapped_bundle_character(s, p, m2)
                                                : product_bundle_character(s, p, m2);
               const auto b = top_chern(second, spec, n);
               if (!b) return std::nullopt;
               return GradedPoly::monomial(2 * n, *a * *b, cap);
             },
             opts)
      .value;
}

InvariantRecord integrate(const ToricSurface& s, const EquivariantLineBundle& m, int n1, int n2,
                          Route route, const EngineOptions& opts) {
  const Localization l = route == Route::nested ? nested_route(s, m, n1, n2, opts)
                                                : product_route(s, m, n1, n2, opts);
  return {s.name(), m.label, n1, n2, route, l.value, l.specializations, l.agreement};
}

Series2 z_series(const ToricSurface& s, const EquivariantLineBundle& m, int cap, Route route,
                 const EngineOptions& opts) {
  if (cap < 0) throw std::invalid_argument("negative cap");
  Series2 out(cap);
  for (int total = 0; total <= cap; ++total)
    for (int n2 = 0; 2 * n2 <= total; ++n2) {
      const int n1 = total - n2;
      out.set(n1, n2, route == Route::nested ? nested_route_invariant(s, m, n1, n2, opts)
                                             : product_route_invariant(s, m, n1, n2, opts));
    }
  return out;
}

Series2 z_nest_series(const ToricSurface& s, const EquivariantLineBundle& m, int cap,
                      const EngineOptions& opts) {
  return z_series(s, m, cap, Route::nested, opts);
}

Series2 closed_form_series(const ToricSurface& s, const EquivariantLineBundle& m, int cap) {
  const ChernNumbers c = chern_numbers(s, m);
  const Rational a(c.k_squared - c.m_dot_k);
  const Rational b(c.m_dot_k - c.m_squared - c.c2);
  auto factors = factor_family(1, 0, 1, -1, 1, a, cap);
  const auto diagonal = factor_family(1, 0, 1, 0, 1, b, cap);
  factors.insert(factors.end(), diagonal.begin(), diagonal.end());
  Series2 product = product_formula(factors, cap);
  Series2 out(cap);
  for (const auto& t : product.terms())
    out.set(t.d1, t.d2, (t.d1 + t.d2) % 2 == 0 ? t.coeff : -t.coeff);
  return out;
}

Series2 gottsche_series(const ToricSurface& s, int max_n) {
  const int cap = 2 * max_n;
  return product_formula(factor_family(1, 0, 1, 0, 1, Rational(-s.euler_number()), cap), cap);
}

std::vector<long> fixed_point_counts(const ToricSurface& s, int max_n) {
  std::vector<long> out;
  for (int n = 0; n <= max_n; ++n)
    out.push_back(static_cast<long>(enumerate_partition_tuples(s.euler_number(), n).size()));
  return out;
}

const std::array<UniversalGenerator, 4>& universal_generators() {
  static const std::array<UniversalGenerator, 4> g{{
      {"p2", "O"},
      {"p2", "O(1)"},
      {"p1xp1", "O"},
      {"p1xp1", "O(1,0)"},
  }};
  return g;
}

const std::array<std::array<Rational, 4>, 4>& universal_exponents() {
  // rows A1..A4, columns B1..B4; Chern numbers (M^2, MK, K^2, c2) of the
  // generators are (0,0,9,3), (1,-3,9,3), (0,0,8,4), (0,-2,8,4)
  static const std::array<std::array<Rational, 4>, 4> e{{
      {Rational(-1), Rational(1), Rational::parse("3/2"), Rational::parse("-3/2")},
      {Rational(0), Rational(0), Rational::parse("1/2"), Rational::parse("-1/2")},
      {Rational::parse("1/3"), Rational(0), Rational::parse("-1/4"), Rational(0)},
      {Rational::parse("-2/3"), Rational(0), Rational::parse("3/4"), Rational(0)},
  }};
  return e;
}

UniversalSeries universal_series_fit(int cap, const EngineOptions& opts) {
  if (cap < 1) throw std::invalid_argument("universal fit needs cap >= 1");
  std::array<Series2, 4> b;
  for (std::size_t j = 0; j < 4; ++j) {
    const auto& g = universal_generators()[j];
    const ToricSurface s = builtin_surface(g.surface);
    b[j] = z_nest_series(s, bundle_by_label(s, g.bundle), cap, opts);
  }
  UniversalSeries out;
  for (std::size_t i = 0; i < 4; ++i) {
    Series2 a = Series2::one(cap);
    for (std::size_t j = 0; j < 4; ++j)
      if (!universal_exponents()[i][j].is_zero()) a = a * series_pow(b[j], universal_exponents()[i][j]);
    out.a[i] = a;
  }
  return out;
}

Series2 universal_prediction(const UniversalSeries& u, const ChernNumbers& c) {
  const std::array<long, 4> e{c.m_squared, c.m_dot_k, c.k_squared, c.c2};
  Series2 out = Series2::one(u.a[0].cap());
  for (std::size_t i = 0; i < 4; ++i)
    if (e[i] != 0) out = out * series_pow(u.a[i], Rational(e[i]));
  return out;
}

}  // namespace nesthilb
