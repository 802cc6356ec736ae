#pragma once

#include "nesthilb/laurent.hpp"
#include "nesthilb/specialization.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace nesthilb {

/// Primitive vector of the fan lattice N.
struct Ray {
  int x;
  int y;
  friend auto operator<=>(const Ray&, const Ray&) = default;
};

/// Torus-fixed point of a toric surface: the cone spanned by rays
/// (first, second) with local coordinate characters u, v (the dual basis).
/// The tangent weights at the point are -u, -v.
struct Chart {
  int first;
  int second;
  Weight u;
  Weight v;
};

/// Smooth projective toric surface given by its rays in counterclockwise
/// order. Every adjacent pair must span a unimodular cone and the rays must
/// wind exactly once around the origin.
class ToricSurface {
 public:
  ToricSurface(std::string name, std::vector<Ray> rays,
               std::map<std::string, std::vector<int>> named_bundles = {});

  const std::string& name() const { return name_; }
  const std::vector<Ray>& rays() const { return rays_; }
  const std::vector<Chart>& charts() const { return charts_; }
  int euler_number() const { return static_cast<int>(charts_.size()); }
  const std::map<std::string, std::vector<int>>& named_bundles() const { return named_bundles_; }

 private:
  std::string name_;
  std::vector<Ray> rays_;
  std::vector<Chart> charts_;
  std::map<std::string, std::vector<int>> named_bundles_;
};

/// "p2", "p1xp1" or "hirzebruch(a)" with a >= 0. Throws std::invalid_argument
/// on any other name.
ToricSurface builtin_surface(const std::string& name);

/// Parses a surface config document (JSON):
///   {"name": "...", "rays": [[x, y], ...], "bundles": {"label": [a_1, ..., a_k]}}
ToricSurface parse_surface_config(const std::string& text);
ToricSurface load_surface_config(const std::filesystem::path& path);

/// Torus-equivariant line bundle O(sum a_i D_i). At each chart the fiber
/// character m_P solves <m_P, ray> = -a_ray for the chart's two rays.
struct EquivariantLineBundle {
  std::string label;
  std::vector<int> divisor_coeffs;
  std::vector<Weight> weights;  // one per chart
};

EquivariantLineBundle line_bundle(const ToricSurface& s, std::vector<int> coeffs,
                                  std::string label = "");
EquivariantLineBundle trivial_bundle(const ToricSurface& s);
EquivariantLineBundle canonical_bundle(const ToricSurface& s);
/// M^D = K - M.
EquivariantLineBundle dual_bundle(const ToricSurface& s, const EquivariantLineBundle& m);
/// Tensor product; divisor coefficients add.
EquivariantLineBundle tensor(const ToricSurface& s, const EquivariantLineBundle& a,
                             const EquivariantLineBundle& b);

/// Resolves "O", "K", "D<i>" (1-based ray index) or a named bundle of s.
EquivariantLineBundle bundle_by_label(const ToricSurface& s, const std::string& label);

/// Intersection number of c1(L1) and c1(L2) by localization on the surface,
/// evaluated at two independent generic points which must agree on an
/// integer. Throws InconsistencyError ("non-constant localization sum")
/// otherwise.
long intersection_number(const ToricSurface& s, const EquivariantLineBundle& l1,
                         const EquivariantLineBundle& l2,
                         std::uint64_t seed = SpecializationSource::kDefaultSeed);

struct ChernNumbers {
  long m_squared;
  long m_dot_k;
  long k_squared;
  long c2;
  friend bool operator==(const ChernNumbers&, const ChernNumbers&) = default;
};

ChernNumbers chern_numbers(const ToricSurface& s, const EquivariantLineBundle& m);

/// Indices of the rays D_i forming a basis of Pic(S): all rays outside the
/// first chart.
std::vector<int> picard_basis(const ToricSurface& s);

/// Coordinates of the divisor class of coeffs in picard_basis().
std::vector<long> picard_coordinates(const ToricSurface& s, const std::vector<int>& coeffs);

/// Intersection form on picard_basis().
std::vector<std::vector<long>> intersection_form(const ToricSurface& s);

}  // namespace nesthilb
