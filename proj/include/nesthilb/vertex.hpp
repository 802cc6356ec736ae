#pragma once

#include "nesthilb/graded.hpp"
#include "nesthilb/laurent.hpp"
#include "nesthilb/partition.hpp"

#include <string>

namespace nesthilb {

/// Virtual torus representation: coefficient c at (a, b) is the weight
/// t1^a t2^b with multiplicity c. Coefficients are integers.
class Character {
 public:
  Character() = default;
  /// Throws std::invalid_argument on a non-integer coefficient.
  explicit Character(LaurentPoly poly);

  const LaurentPoly& poly() const { return poly_; }
  long multiplicity(Weight w) const;
  /// Sum of multiplicities.
  long rank() const;
  /// Net multiplicity of the trivial weight is nonzero.
  bool has_trivial_weight() const { return multiplicity({}) != 0; }

  Character& operator+=(const Character& o) { poly_ += o.poly_; return *this; }
  Character& operator-=(const Character& o) { poly_ -= o.poly_; return *this; }
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend bool operator==(const Character&, const Character&) = default;

  std::string to_string() const { return poly_.to_string(); }

 private:
  LaurentPoly poly_;
};

/// A point (x, y) at which the linear form a*w1 + b*w2 is evaluated.
struct Specialization {
  Rational x;
  Rational y;
  Rational evaluate(Weight w) const { return Rational(w.a) * x + Rational(w.b) * y; }
};

/// chi(O, O) - chi(I_a, I_b) on C^2 for the monomial ideals of mu_a, mu_b:
///   Z_b + bar(Z_a)/(t1 t2) - bar(Z_a) Z_b (1 - t1)(1 - t2)/(t1 t2).
Character block_character(const Partition& mu_a, const Partition& mu_b);

/// Virtual tangent space at the fixed point I_1 ⊆ I_2:
///   Z1 + bar(Z2)/(t1 t2) + (bar(Z1) Z2 - bar(Z1) Z1 - bar(Z2) Z2)(1 - t1)(1 - t2)/(t1 t2).
Character virtual_tangent_character(const NestedPair& p);

/// Tensoring by the character t^m: shifts every weight by m.
Character twist_character(const Character& c, Weight m);

/// Monomial substitution t1 -> t^u, t2 -> t^v. Throws std::invalid_argument
/// ("singular chart") unless det(u, v) = ±1.
Character substitute_weights(const Character& c, Weight u, Weight v);

/// Product of (a x + b y)^mult over all weights. Throws TrivialWeightError on
/// a trivial weight with nonzero multiplicity and DegenerateSpecialization if
/// any other weight vanishes at s.
Rational euler_class(const Character& c, const Specialization& s);

/// Total Chern class prod (1 + g (a x + b y))^mult truncated at g^cap.
/// Trivial weights contribute 1.
GradedPoly chern_poly(const Character& c, const Specialization& s, int cap);

}  // namespace nesthilb
