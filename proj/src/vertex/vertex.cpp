#include "nesthilb/vertex.hpp"

#include "nesthilb/errors.hpp"

#include <stdexcept>

namespace nesthilb {

Character::Character(LaurentPoly poly) : poly_(std::move(poly)) {
  for (const auto& [w, c] : poly_.terms())
    if (!c.is_integer())
      throw std::invalid_argument("character coefficients must be integers");
}

long Character::multiplicity(Weight w) const { return poly_.coefficient(w).to_long(); }

long Character::rank() const { return poly_.at_one().to_long(); }

namespace {

// (1 - t1)(1 - t2)/(t1 t2)
const LaurentPoly& delta_over_t1t2() {
  static const LaurentPoly d{{{-1, -1}, 1}, {{-1, 0}, -1}, {{0, -1}, -1}, {{0, 0}, 1}};
  return d;
}

}  // namespace

Character block_character(const Partition& mu_a, const Partition& mu_b) {
  const LaurentPoly za_bar = laurent_bar(z_character(mu_a));
  const LaurentPoly zb = z_character(mu_b);
  LaurentPoly v = zb + za_bar.shifted({-1, -1});
  v -= za_bar * zb * delta_over_t1t2();
  return Character(std::move(v));
}

Character virtual_tangent_character(const NestedPair& p) {
  const LaurentPoly z1 = z_character(p.outer);
  const LaurentPoly z2 = z_character(p.inner);
  const LaurentPoly z1_bar = laurent_bar(z1);
  const LaurentPoly z2_bar = laurent_bar(z2);
  LaurentPoly v = z1 + z2_bar.shifted({-1, -1});
  v += (z1_bar * z2 - z1_bar * z1 - z2_bar * z2) * delta_over_t1t2();
  return Character(std::move(v));
}

Character twist_character(const Character& c, Weight m) { return Character(c.poly().shifted(m)); }

Character substitute_weights(const Character& c, Weight u, Weight v) {
  const long det = static_cast<long>(u.a) * v.b - static_cast<long>(u.b) * v.a;
  if (det != 1 && det != -1) throw std::invalid_argument("singular chart");
  LaurentPoly out;
  for (const auto& [w, coeff] : c.poly().terms())
    out.add_term({w.a * u.a + w.b * v.a, w.a * u.b + w.b * v.b}, coeff);
  return Character(std::move(out));
}

Rational euler_class(const Character& c, const Specialization& s) {
  Rational num = 1;
  Rational den = 1;
  for (const auto& [w, coeff] : c.poly().terms()) {
    if (w.is_trivial()) throw TrivialWeightError("trivial weight in Euler class");
    const Rational value = s.evaluate(w);
    if (value.is_zero()) throw DegenerateSpecialization("degenerate specialization");
    const long mult = coeff.to_long();
    if (mult > 0)
      num *= pow(value, mult);
    else
      den *= pow(value, -mult);
  }
  return num / den;
}

GradedPoly chern_poly(const Character& c, const Specialization& s, int cap) {
  GradedPoly out = GradedPoly::one(cap);
  for (const auto& [w, coeff] : c.poly().terms()) {
    const Rational value = s.evaluate(w);
    if (value.is_zero()) continue;
    const long mult = coeff.to_long();
    for (long i = 0; i < mult; ++i) out.mul_linear(value);
    for (long i = 0; i < -mult; ++i) out.div_linear(value);
  }
  return out;
}

}  // namespace nesthilb
