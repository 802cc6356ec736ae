#include "nesthilb/toric.hpp"

#include "nesthilb/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace nesthilb {

namespace {

long det(Ray a, Ray b) { return static_cast<long>(a.x) * b.y - static_cast<long>(a.y) * b.x; }

int pair(Weight m, Ray r) { return m.a * r.x + m.b * r.y; }

}  // namespace

ToricSurface::ToricSurface(std::string name, std::vector<Ray> rays,
                           std::map<std::string, std::vector<int>> named_bundles)
    : name_(std::move(name)), rays_(std::move(rays)), named_bundles_(std::move(named_bundles)) {
  const auto k = rays_.size();
  if (k < 3) throw std::invalid_argument("a complete fan needs at least 3 rays");
  for (std::size_t i = 0; i < k; ++i) {
    const Ray r1 = rays_[i];
    const Ray r2 = rays_[(i + 1) % k];
    if (det(r1, r2) != 1)
      throw std::invalid_argument("rays " + std::to_string(i + 1) + " and " +
                                  std::to_string((i + 1) % k + 1) +
                                  " do not span a unimodular counterclockwise cone");
    // dual basis: columns of the inverse of [r1; r2] (det 1)
    charts_.push_back({static_cast<int>(i), static_cast<int>((i + 1) % k), Weight{r2.y, -r2.x},
                       Weight{-r1.y, r1.x}});
  }
  // each step turns by less than pi, so counting the cones that contain the
  // direction of ray 1 in their half-open span (r_i, r_{i+1}] gives the winding number
  int winding = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const Ray a = rays_[i];
    const Ray b = rays_[(i + 1) % k];
    if (det(a, rays_[0]) > 0 && det(rays_[0], b) >= 0) ++winding;
  }
  if (winding != 1) throw std::invalid_argument("rays do not wind once around the origin");
  for (const auto& [label, coeffs] : named_bundles_)
    if (coeffs.size() != k)
      throw std::invalid_argument("bundle '" + label + "' needs one coefficient per ray");
}

ToricSurface builtin_surface(const std::string& name) {
  if (name == "p2") return ToricSurface("p2", {{1, 0}, {0, 1}, {-1, -1}}, {{"O(1)", {1, 0, 0}}});
  if (name == "p1xp1")
    return ToricSurface("p1xp1", {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
                        {{"O(1,0)", {1, 0, 0, 0}}, {"O(0,1)", {0, 1, 0, 0}}});
  static const std::regex hirzebruch(R"(hirzebruch\((\d+)\))");
  std::smatch m;
  if (std::regex_match(name, m, hirzebruch)) {
    const int a = std::stoi(m[1].str());
    return ToricSurface(name, {{1, 0}, {0, 1}, {-1, a}, {0, -1}},
                        {{"fiber", {1, 0, 0, 0}},
                         {"negsection", {0, 1, 0, 0}},
                         {"section", {0, 0, 0, 1}}});
  }
  throw std::invalid_argument("unknown surface '" + name + "'");
}

ToricSurface parse_surface_config(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("surface config: ") + e.what());
  }
  try {
    std::vector<Ray> rays;
    for (const auto& r : doc.at("rays")) {
      if (r.size() != 2) throw std::invalid_argument("surface config: ray must have 2 entries");
      rays.push_back({r.at(0).get<int>(), r.at(1).get<int>()});
    }
    std::map<std::string, std::vector<int>> bundles;
    if (doc.contains("bundles"))
      for (const auto& [label, coeffs] : doc.at("bundles").items())
        bundles[label] = coeffs.get<std::vector<int>>();
    return ToricSurface(doc.at("name").get<std::string>(), std::move(rays), std::move(bundles));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("surface config: ") + e.what());
  }
}

ToricSurface load_surface_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read surface config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_surface_config(buf.str());
}

EquivariantLineBundle line_bundle(const ToricSurface& s, std::vector<int> coeffs,
                                  std::string label) {
  if (coeffs.size() != s.rays().size())
    throw std::invalid_argument("line bundle needs one coefficient per ray");
  EquivariantLineBundle l;
  for (const Chart& c : s.charts()) {
    const int a1 = coeffs[static_cast<std::size_t>(c.first)];
    const int a2 = coeffs[static_cast<std::size_t>(c.second)];
    const Weight m = (-a1) * c.u + (-a2) * c.v;
    if (pair(m, s.rays()[c.first]) != -a1 || pair(m, s.rays()[c.second]) != -a2)
      throw InconsistencyError("linearization solve failed");
    l.weights.push_back(m);
  }
  if (label.empty()) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
    os << "]";
    label = os.str();
  }
  l.label = std::move(label);
  l.divisor_coeffs = std::move(coeffs);
  return l;
}

EquivariantLineBundle trivial_bundle(const ToricSurface& s) {
  return line_bundle(s, std::vector<int>(s.rays().size(), 0), "O");
}

EquivariantLineBundle canonical_bundle(const ToricSurface& s) {
  return line_bundle(s, std::vector<int>(s.rays().size(), -1), "K");
}

EquivariantLineBundle dual_bundle(const ToricSurface& s, const EquivariantLineBundle& m) {
  std::vector<int> coeffs = m.divisor_coeffs;
  for (int& a : coeffs) a = -1 - a;
  return line_bundle(s, std::move(coeffs), "K-(" + m.label + ")");
}

EquivariantLineBundle tensor(const ToricSurface& s, const EquivariantLineBundle& a,
                             const EquivariantLineBundle& b) {
  std::vector<int> coeffs = a.divisor_coeffs;
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += b.divisor_coeffs[i];
  return line_bundle(s, std::move(coeffs), a.label + "+" + b.label);
}

EquivariantLineBundle bundle_by_label(const ToricSurface& s, const std::string& label) {
  if (label == "O") return trivial_bundle(s);
  if (label == "K") return canonical_bundle(s);
  if (const auto it = s.named_bundles().find(label); it != s.named_bundles().end())
    return line_bundle(s, it->second, label);
  static const std::regex divisor(R"(D(\d+))");
  std::smatch m;
  if (std::regex_match(label, m, divisor)) {
    const auto i = std::stoul(m[1].str());
    if (i >= 1 && i <= s.rays().size()) {
      std::vector<int> coeffs(s.rays().size(), 0);
      coeffs[i - 1] = 1;
      return line_bundle(s, std::move(coeffs), label);
    }
  }
  throw std::invalid_argument("unknown bundle '" + label + "' on " + s.name());
}

long intersection_number(const ToricSurface& s, const EquivariantLineBundle& l1,
                         const EquivariantLineBundle& l2, std::uint64_t seed) {
  SpecializationSource source(seed);
  auto evaluate = [&](const Specialization& sp) {
    Rational total;
    for (std::size_t i = 0; i < s.charts().size(); ++i) {
      const Chart& c = s.charts()[i];
      const Rational tangent = sp.evaluate(c.u) * sp.evaluate(c.v);
      if (tangent.is_zero()) throw DegenerateSpecialization("degenerate specialization");
      total += sp.evaluate(l1.weights[i]) * sp.evaluate(l2.weights[i]) / tangent;
    }
    return total;
  };
  auto generic_value = [&] {
    for (int attempt = 0; attempt < 8; ++attempt) {
      try {
        return evaluate(source.draw());
      } catch (const DegenerateSpecialization&) {
      }
    }
    throw DegenerateSpecialization("no generic specialization after 8 draws");
  };
  const Rational first = generic_value();
  const Rational second = generic_value();
  if (first != second || !first.is_integer())
    throw InconsistencyError("non-constant localization sum");
  return first.to_long();
}

ChernNumbers chern_numbers(const ToricSurface& s, const EquivariantLineBundle& m) {
  const auto k = canonical_bundle(s);
  return {intersection_number(s, m, m), intersection_number(s, m, k),
          intersection_number(s, k, k), s.euler_number()};
}

std::vector<int> picard_basis(const ToricSurface& s) {
  std::vector<int> out;
  const Chart& c0 = s.charts().front();
  for (int i = 0; i < static_cast<int>(s.rays().size()); ++i)
    if (i != c0.first && i != c0.second) out.push_back(i);
  return out;
}

std::vector<long> picard_coordinates(const ToricSurface& s, const std::vector<int>& coeffs) {
  if (coeffs.size() != s.rays().size())
    throw std::invalid_argument("divisor needs one coefficient per ray");
  // subtract div(chi^m) = sum <m, r_i> D_i to clear the first chart's rays
  const Chart& c0 = s.charts().front();
  const Weight m = coeffs[c0.first] * c0.u + coeffs[c0.second] * c0.v;
  std::vector<long> out;
  for (int i : picard_basis(s)) out.push_back(coeffs[i] - pair(m, s.rays()[i]));
  return out;
}

std::vector<std::vector<long>> intersection_form(const ToricSurface& s) {
  const auto basis = picard_basis(s);
  std::vector<EquivariantLineBundle> divisors;
  for (int i : basis) {
    std::vector<int> coeffs(s.rays().size(), 0);
    coeffs[i] = 1;
    divisors.push_back(line_bundle(s, coeffs));
  }
  std::vector<std::vector<long>> form(basis.size(), std::vector<long>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      form[i][j] = intersection_number(s, divisors[i], divisors[j]);
  return form;
}

}  // namespace nesthilb
