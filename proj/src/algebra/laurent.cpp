#include "nesthilb/laurent.hpp"

#include <sstream>

namespace nesthilb {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Weight{}, c);
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const Weight, Rational>> terms) {
  for (const auto& [w, c] : terms) add_term(w, c);
}

LaurentPoly LaurentPoly::monomial(Weight w, const Rational& c) {
  LaurentPoly p;
  p.add_term(w, c);
  return p;
}

Rational LaurentPoly::coefficient(Weight w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(Weight w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator-(const LaurentPoly& x) {
  LaurentPoly r = x;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly r;
  for (const auto& [wx, cx] : x.terms_)
    for (const auto& [wy, cy] : y.terms_) r.add_term(wx + wy, cx * cy);
  return r;
}

Rational LaurentPoly::at_one() const {
  Rational s;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::shifted(Weight shift) const {
  LaurentPoly r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w + shift, c);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (!unit || w.is_trivial()) os << mag;
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      os << name;
      if (e != 1) os << "^" << e;
    };
    if (!unit && !w.is_trivial()) os << "*";
    var("t1", w.a);
    if (w.a != 0 && w.b != 0) os << "*";
    var("t2", w.b);
  }
  return os.str();
}

LaurentPoly laurent_mul(const LaurentPoly& x, const LaurentPoly& y) { return x * y; }

LaurentPoly laurent_bar(const LaurentPoly& x) {
  LaurentPoly r;
  for (const auto& [w, c] : x.terms()) r.add_term(-w, c);
  return r;
}

}  // namespace nesthilb
