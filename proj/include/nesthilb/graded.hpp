#pragma once

#include "nesthilb/rational.hpp"

#include <string>
#include <vector>

namespace nesthilb {

/// Polynomial in a formal grading variable g, truncated at degree cap.
/// Carries cohomological degree through a numeric specialization of the
/// equivariant parameters.
class GradedPoly {
 public:
  explicit GradedPoly(int cap = 0);

  static GradedPoly one(int cap);

  int cap() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  Rational& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  Rational coefficient(int k) const;

  /// Multiplies in place by (1 + x g).
  void mul_linear(const Rational& x);
  /// Divides in place by (1 + x g).
  void div_linear(const Rational& x);

  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator*=(const Rational& c);
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator*(GradedPoly a, const Rational& c) { return a *= c; }
  /// Product truncated at min cap.
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  /// Truncated quotient; b must have constant term 1.
  friend GradedPoly operator/(const GradedPoly& a, const GradedPoly& b);
  friend bool operator==(const GradedPoly&, const GradedPoly&) = default;

  /// c * g^k truncated at cap.
  static GradedPoly monomial(int k, const Rational& c, int cap);

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace nesthilb
