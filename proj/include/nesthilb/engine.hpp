#pragma once

#include "nesthilb/graded.hpp"
#include "nesthilb/partition.hpp"
#include "nesthilb/series.hpp"
#include "nesthilb/specialization.hpp"
#include "nesthilb/toric.hpp"
#include "nesthilb/vertex.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nesthilb {

/// One nested pair per chart, with total outer size n1 and inner size n2.
struct GlobalFixedPoint {
  std::vector<NestedPair> pairs;
};

/// A torus-fixed point of S^[n1] x S^[n2]: one partition per chart on each side.
/// The two sides need not be nested.
struct ProductFixedPoint {
  std::vector<Partition> first;
  std::vector<Partition> second;
};

/// All tuples (one partition per chart) with total size n. Charts with larger
/// share come first: the size composition runs in reverse lexicographic
/// order, then the last chart's partition varies fastest.
std::vector<std::vector<Partition>> enumerate_partition_tuples(int charts, int n);

/// Throws std::invalid_argument ("empty nesting range") when n1 < n2.
std::vector<GlobalFixedPoint> enumerate_global_fixed_points(const ToricSurface& s, int n1, int n2);

/// Every pair (tuple of size n1, tuple of size n2).
std::vector<ProductFixedPoint> enumerate_product_fixed_points(const ToricSurface& s, int n1,
                                                              int n2);

// Global characters at fixed points.

Character nested_tangent(const ToricSurface& s, const GlobalFixedPoint& p);
/// Fiber of K_M^{[n1>=n2]}: sum over charts of m_P V(outer_P, inner_P).
Character nested_bundle_character(const ToricSurface& s, const GlobalFixedPoint& p,
                                  const EquivariantLineBundle& m);
Character product_tangent(const ToricSurface& s, const ProductFixedPoint& p);
/// Fiber of E^{n1,n2}_M at (first, second): sum of m_P V(first_P, second_P).
Character product_bundle_character(const ToricSurface& s, const ProductFixedPoint& p,
                                   const EquivariantLineBundle& m);
/// Fiber of E^{n2,n1}_M at the swapped point: sum of m_P V(second_P, first_P).
Character swapped_bundle_character(const ToricSurface& s, const ProductFixedPoint& p,
                                   const EquivariantLineBundle& m);

struct EngineOptions {
  std::uint64_t seed = SpecializationSource::kDefaultSeed;
  unsigned jobs = 1;
  int max_redraws = 8;
};

struct Localization {
  Rational value;
  std::vector<Specialization> specializations;
  bool agreement = true;
};

/// Per-point integrand truncated at the given cap. std::nullopt marks a
/// contribution that vanishes identically (not merely at this point).
using NestedIntegrand = std::function<std::optional<GradedPoly>(
    const GlobalFixedPoint&, const Specialization&, int cap)>;
using ProductIntegrand = std::function<std::optional<GradedPoly>(
    const ProductFixedPoint&, const Specialization&, int cap)>;

/// Sum of integrand / e(T^vir) over the nested fixed points, read at degree
/// n1 + n2. Requires zero coefficients below that degree and agreement of two
/// specializations; throws InconsistencyError otherwise.
Localization localize_nested(const ToricSurface& s, int n1, int n2,
                             const NestedIntegrand& integrand, const EngineOptions& opts = {});
/// Same on S^[n1] x S^[n2], read at degree 2(n1 + n2).
Localization localize_product(const ToricSurface& s, int n1, int n2,
                              const ProductIntegrand& integrand, const EngineOptions& opts = {});

enum class Route { nested, product };
std::string to_string(Route r);

/// Integral of c(K_M) over the virtual class of S^[n1>=n2].
Localization nested_route(const ToricSurface& s, const EquivariantLineBundle& m, int n1, int n2,
                          const EngineOptions& opts = {});
/// Integral of c_{n1+n2}(E^{n1,n2}) c(E^{n1,n2}_M) over S^[n1] x S^[n2].
Localization product_route(const ToricSurface& s, const EquivariantLineBundle& m, int n1, int n2,
                           const EngineOptions& opts = {});

Rational nested_route_invariant(const ToricSurface& s, const EquivariantLineBundle& m, int n1,
                                int n2, const EngineOptions& opts = {});
Rational product_route_invariant(const ToricSurface& s, const EquivariantLineBundle& m, int n1,
                                 int n2, const EngineOptions& opts = {});

/// Integrand prod c(K_{M_i}) / prod c(K_{N_j}) on either route.
Localization multi_bundle(const ToricSurface& s, const std::vector<EquivariantLineBundle>& ms,
                          const std::vector<EquivariantLineBundle>& ns, int n1, int n2, Route route,
                          const EngineOptions& opts = {});
Rational multi_bundle_invariant(const ToricSurface& s,
                                const std::vector<EquivariantLineBundle>& ms,
                                const std::vector<EquivariantLineBundle>& ns, int n1, int n2,
                                Route route, const EngineOptions& opts = {});

/// Integral over S^[n1] x S^[n2] of c_top(E^{n1,n2}_{M1}) times c_top of the
/// second class: E^{n2,n1}_{M2} (pulled back along the swap) when swapped,
/// else E^{n1,n2}_{M2}.
Rational top_chern_pairing(const ToricSurface& s, const EquivariantLineBundle& m1,
                           const EquivariantLineBundle& m2, int n1, int n2, bool swapped,
                           const EngineOptions& opts = {});

struct InvariantRecord {
  std::string surface;
  std::string bundle;
  int n1 = 0;
  int n2 = 0;
  Route route = Route::nested;
  Rational value;
  std::vector<Specialization> specializations;
  bool agreement = true;
};

InvariantRecord integrate(const ToricSurface& s, const EquivariantLineBundle& m, int n1, int n2,
                          Route route, const EngineOptions& opts = {});

/// sum over n1 >= n2, n1 + n2 <= cap of q1^n1 q2^n2 times the invariant.
Series2 z_series(const ToricSurface& s, const EquivariantLineBundle& m, int cap, Route route,
                 const EngineOptions& opts = {});
Series2 z_nest_series(const ToricSurface& s, const EquivariantLineBundle& m, int cap,
                      const EngineOptions& opts = {});

/// prod_{n>0} (1 - q1^n q2^(n-1))^<K,K-M> (1 - q1^n q2^n)^(<K-M,M> - e)
/// with the coefficient of q1^n1 q2^n2 multiplied by (-1)^(n1+n2).
Series2 closed_form_series(const ToricSurface& s, const EquivariantLineBundle& m, int cap);

/// prod (1 - q^n)^(-e) with q = q1 q2, through q^max_n.
Series2 gottsche_series(const ToricSurface& s, int max_n);
/// Number of torus-fixed points of S^[n] for n = 0..max_n.
std::vector<long> fixed_point_counts(const ToricSurface& s, int max_n);

struct UniversalGenerator {
  std::string surface;
  std::string bundle;
};

/// The four (surface, bundle) pairs B1..B4.
const std::array<UniversalGenerator, 4>& universal_generators();
/// exponent[i][j] of B_{j+1} in A_{i+1}.
const std::array<std::array<Rational, 4>, 4>& universal_exponents();

struct UniversalSeries {
  std::array<Series2, 4> a;
};

UniversalSeries universal_series_fit(int cap, const EngineOptions& opts = {});
/// A1^{M^2} A2^{M.K} A3^{K^2} A4^{c2}.
Series2 universal_prediction(const UniversalSeries& u, const ChernNumbers& c);

}  // namespace nesthilb
