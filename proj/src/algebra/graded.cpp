#include "nesthilb/graded.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nesthilb {

GradedPoly::GradedPoly(int cap) {
  if (cap < 0) throw std::invalid_argument("graded cap must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(cap) + 1);
}

GradedPoly GradedPoly::one(int cap) { return monomial(0, 1, cap); }

GradedPoly GradedPoly::monomial(int k, const Rational& c, int cap) {
  GradedPoly p(cap);
  if (k >= 0 && k <= cap) p[k] = c;
  return p;
}

Rational GradedPoly::coefficient(int k) const {
  if (k < 0 || k > cap()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

void GradedPoly::mul_linear(const Rational& x) {
  for (int k = cap(); k >= 1; --k) coeffs_[k] += x * coeffs_[k - 1];
}

void GradedPoly::div_linear(const Rational& x) {
  for (int k = 1; k <= cap(); ++k) coeffs_[k] -= x * coeffs_[k - 1];
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  if (o.cap() < cap()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  const int cap = std::min(a.cap(), b.cap());
  GradedPoly r(cap);
  for (int i = 0; i <= cap; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= cap; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

GradedPoly operator/(const GradedPoly& a, const GradedPoly& b) {
  if (b.coeffs_[0] != Rational(1))
    throw std::domain_error("graded division needs unit constant term");
  const int cap = std::min(a.cap(), b.cap());
  GradedPoly r(cap);
  for (int k = 0; k <= cap; ++k) {
    Rational v = a.coeffs_[k];
    for (int j = 1; j <= k; ++j) v -= b.coeffs_[j] * r.coeffs_[k - j];
    r.coeffs_[k] = v;
  }
  return r;
}

std::string GradedPoly::to_string() const {
  std::ostringstream os;
  for (int k = 0; k <= cap(); ++k) {
    if (k) os << " + ";
    os << "(" << coeffs_[k] << ")g^" << k;
  }
  return os.str();
}

}  // namespace nesthilb
