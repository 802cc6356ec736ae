#pragma once

#include "nesthilb/rational.hpp"

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace nesthilb {

/// Exponent pair (a, b) of the monomial t1^a t2^b. Read as a torus weight it
/// is the linear form a*w1 + b*w2.
struct Weight {
  int a = 0;
  int b = 0;

  bool is_trivial() const { return a == 0 && b == 0; }
  friend Weight operator+(Weight x, Weight y) { return {x.a + y.a, x.b + y.b}; }
  friend Weight operator-(Weight x, Weight y) { return {x.a - y.a, x.b - y.b}; }
  friend Weight operator-(Weight x) { return {-x.a, -x.b}; }
  friend Weight operator*(int k, Weight x) { return {k * x.a, k * x.b}; }
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Laurent polynomial in t1, t2 with rational coefficients. Zero coefficients
/// are never stored, so structural equality is mathematical equality.
class LaurentPoly {
 public:
  using Terms = std::map<Weight, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::initializer_list<std::pair<const Weight, Rational>> terms);

  static LaurentPoly monomial(Weight w, const Rational& c = 1);
  static LaurentPoly t1() { return monomial({1, 0}); }
  static LaurentPoly t2() { return monomial({0, 1}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(Weight w) const;

  /// Adds c*t^w, pruning the entry if it cancels.
  void add_term(Weight w, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator-(const LaurentPoly& x);
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator*(LaurentPoly x, const Rational& c) { return x *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly x) { return x *= c; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Sum of coefficients, i.e. the value at t1 = t2 = 1.
  Rational at_one() const;

  /// Multiplies by the monomial t^shift.
  LaurentPoly shifted(Weight shift) const;

  std::string to_string() const;

 private:
  Terms terms_;
};

LaurentPoly laurent_mul(const LaurentPoly& x, const LaurentPoly& y);

/// t1 -> 1/t1, t2 -> 1/t2.
LaurentPoly laurent_bar(const LaurentPoly& x);

}  // namespace nesthilb
