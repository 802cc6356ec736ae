#pragma once

#include "nesthilb/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace nesthilb {

/// Bivariate power series in q1, q2 over the rationals, truncated at total
/// degree d1 + d2 <= cap. Storage is dense and triangular.
class Series2 {
 public:
  struct Term {
    int d1;
    int d2;
    Rational coeff;
  };

  explicit Series2(int cap = 0);

  static Series2 one(int cap);
  static Series2 monomial(int d1, int d2, const Rational& c, int cap);

  int cap() const { return cap_; }
  Rational coefficient(int d1, int d2) const;
  void set(int d1, int d2, const Rational& c);
  void add(int d1, int d2, const Rational& c);
  Rational constant_term() const { return coeffs_[0]; }

  /// Nonzero entries ordered by total degree, then by d2.
  std::vector<Term> terms() const;

  /// Copy with a smaller (or equal) cap.
  Series2 truncated(int cap) const;

  Series2& operator+=(const Series2& o);
  Series2& operator-=(const Series2& o);
  Series2& operator*=(const Rational& c);
  friend Series2 operator+(Series2 a, const Series2& b) { return a += b; }
  friend Series2 operator-(Series2 a, const Series2& b) { return a -= b; }
  friend Series2 operator*(Series2 a, const Rational& c) { return a *= c; }
  /// Product truncated at min(a.cap, b.cap).
  friend Series2 operator*(const Series2& a, const Series2& b);
  friend bool operator==(const Series2&, const Series2&) = default;

  std::string to_string() const;

 private:
  static std::size_t index(int d1, int d2);
  void check(int d1, int d2) const;

  int cap_;
  std::vector<Rational> coeffs_;
};

/// log(s) for a series with constant term 1.
Series2 series_log(const Series2& s);

/// exp(s) for a series with constant term 0.
Series2 series_exp(const Series2& s);

/// s^r = exp(r log s); requires constant term 1 ("non-unit series power").
Series2 series_pow(const Series2& s, const Rational& r);

/// One factor (1 - q1^d1 q2^d2)^exponent of a product formula.
struct ProductFactor {
  int d1;
  int d2;
  Rational exponent;
};

/// Product of the given factors, truncated at cap. Factors whose monomial
/// lies beyond cap contribute 1.
Series2 product_formula(std::span<const ProductFactor> factors, int cap);

/// The factors (1 - q1^(a1*n + b1) q2^(a2*n + b2))^exponent for n >= n_start,
/// restricted to monomials of total degree <= cap. Every monomial must have
/// positive total degree and the per-n step a1 + a2 must be positive.
std::vector<ProductFactor> factor_family(int a1, int b1, int a2, int b2, int n_start,
                                         const Rational& exponent, int cap);

/// Generalized binomial coefficient binom(r, k).
Rational binomial(const Rational& r, int k);

}  // namespace nesthilb
