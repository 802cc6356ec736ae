#include "nesthilb/series.hpp"

#include <sstream>
#include <stdexcept>

namespace nesthilb {

Series2::Series2(int cap) : cap_(cap) {
  if (cap < 0) throw std::invalid_argument("series cap must be nonnegative");
  coeffs_.resize(index(0, cap) + 1);
}

std::size_t Series2::index(int d1, int d2) {
  const auto total = static_cast<std::size_t>(d1 + d2);
  return total * (total + 1) / 2 + static_cast<std::size_t>(d2);
}

void Series2::check(int d1, int d2) const {
  if (d1 < 0 || d2 < 0 || d1 + d2 > cap_)
    throw std::out_of_range("series index outside truncation");
}

Series2 Series2::one(int cap) { return monomial(0, 0, 1, cap); }

Series2 Series2::monomial(int d1, int d2, const Rational& c, int cap) {
  Series2 s(cap);
  if (d1 + d2 <= cap) s.set(d1, d2, c);
  return s;
}

Rational Series2::coefficient(int d1, int d2) const {
  if (d1 < 0 || d2 < 0 || d1 + d2 > cap_) return 0;
  return coeffs_[index(d1, d2)];
}

void Series2::set(int d1, int d2, const Rational& c) {
  check(d1, d2);
  coeffs_[index(d1, d2)] = c;
}

void Series2::add(int d1, int d2, const Rational& c) {
  check(d1, d2);
  coeffs_[index(d1, d2)] += c;
}

std::vector<Series2::Term> Series2::terms() const {
  std::vector<Term> out;
  for (int total = 0; total <= cap_; ++total)
    for (int d2 = 0; d2 <= total; ++d2) {
      const Rational& c = coeffs_[index(total - d2, d2)];
      if (!c.is_zero()) out.push_back({total - d2, d2, c});
    }
  return out;
}

Series2 Series2::truncated(int cap) const {
  if (cap > cap_) throw std::invalid_argument("cannot raise series cap");
  Series2 s(cap);
  for (std::size_t i = 0; i < s.coeffs_.size(); ++i) s.coeffs_[i] = coeffs_[i];
  return s;
}

Series2& Series2::operator+=(const Series2& o) {
  if (o.cap_ < cap_) *this = truncated(o.cap_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Series2& Series2::operator-=(const Series2& o) {
  if (o.cap_ < cap_) *this = truncated(o.cap_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Series2& Series2::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Series2 operator*(const Series2& a, const Series2& b) {
  const int cap = std::min(a.cap_, b.cap_);
  Series2 r(cap);
  for (int ta = 0; ta <= cap; ++ta)
    for (int ja = 0; ja <= ta; ++ja) {
      const Rational& ca = a.coeffs_[Series2::index(ta - ja, ja)];
      if (ca.is_zero()) continue;
      for (int tb = 0; ta + tb <= cap; ++tb)
        for (int jb = 0; jb <= tb; ++jb) {
          const Rational& cb = b.coeffs_[Series2::index(tb - jb, jb)];
          if (cb.is_zero()) continue;
          r.coeffs_[Series2::index(ta - ja + tb - jb, ja + jb)] += ca * cb;
        }
    }
  return r;
}

std::string Series2::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coeff << ")";
    if (t.d1) os << "*q1^" << t.d1;
    if (t.d2) os << "*q2^" << t.d2;
  }
  if (first) os << "0";
  os << " + O(deg " << cap_ + 1 << ")";
  return os.str();
}

Series2 series_log(const Series2& s) {
  if (s.constant_term() != Rational(1)) throw std::domain_error("non-unit series power");
  Series2 x = s;
  x.set(0, 0, 0);
  Series2 result(s.cap());
  Series2 power = x;
  // x^k has no terms below degree k
  for (int k = 1; k <= s.cap(); ++k) {
    Series2 term = power;
    term *= Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
    result += term;
    power = power * x;
  }
  return result;
}

Series2 series_exp(const Series2& s) {
  if (!s.constant_term().is_zero())
    throw std::domain_error("series exp needs zero constant term");
  Series2 result = Series2::one(s.cap());
  Series2 power = Series2::one(s.cap());
  Rational factorial = 1;
  for (int k = 1; k <= s.cap(); ++k) {
    power = power * s;
    factorial *= Rational(k);
    Series2 term = power;
    term *= Rational(1) / factorial;
    result += term;
  }
  return result;
}

Series2 series_pow(const Series2& s, const Rational& r) {
  if (s.constant_term() != Rational(1)) throw std::domain_error("non-unit series power");
  if (r.is_zero()) return Series2::one(s.cap());
  Series2 l = series_log(s);
  l *= r;
  return series_exp(l);
}

Rational binomial(const Rational& r, int k) {
  Rational c = 1;
  for (int i = 0; i < k; ++i) c = c * (r - Rational(i)) / Rational(i + 1);
  return c;
}

Series2 product_formula(std::span<const ProductFactor> factors, int cap) {
  Series2 result = Series2::one(cap);
  for (const auto& f : factors) {
    const int deg = f.d1 + f.d2;
    if (f.d1 < 0 || f.d2 < 0 || deg <= 0)
      throw std::invalid_argument("product factor monomial must have positive degree");
    if (deg > cap || f.exponent.is_zero()) continue;
    // (1 - m)^e = sum_k binom(e, k) (-m)^k
    Series2 factor(cap);
    for (int k = 0; k * deg <= cap; ++k) {
      Rational c = binomial(f.exponent, k);
      if (k % 2 == 1) c = -c;
      factor.set(k * f.d1, k * f.d2, c);
    }
    result = result * factor;
  }
  return result;
}

std::vector<ProductFactor> factor_family(int a1, int b1, int a2, int b2, int n_start,
                                         const Rational& exponent, int cap) {
  if (a1 < 0 || a2 < 0 || a1 + a2 <= 0)
    throw std::invalid_argument("factor family must grow with n");
  std::vector<ProductFactor> out;
  for (int n = n_start;; ++n) {
    const int d1 = a1 * n + b1;
    const int d2 = a2 * n + b2;
    if (d1 + d2 > cap) break;
    if (d1 < 0 || d2 < 0 || d1 + d2 <= 0)
      throw std::invalid_argument("factor family monomial must have positive degree");
    out.push_back({d1, d2, exponent});
  }
  return out;
}

}  // namespace nesthilb
