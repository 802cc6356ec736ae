#include "nesthilb/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nesthilb::fock {

Lattice::Lattice(std::vector<std::vector<long>> pairing, LatticeVector canonical, int euler_number)
    : pairing_(std::move(pairing)), canonical_(std::move(canonical)), euler_number_(euler_number) {
  const std::size_t r = pairing_.size();
  for (std::size_t i = 0; i < r; ++i) {
    if (pairing_[i].size() != r) throw std::invalid_argument("pairing must be square");
    for (std::size_t j = 0; j < i; ++j)
      if (pairing_[i][j] != pairing_[j][i]) throw std::invalid_argument("pairing must be symmetric");
  }
  if (canonical_.size() != r) throw std::invalid_argument("canonical vector has the wrong rank");
}

long Lattice::pair(const LatticeVector& a, const LatticeVector& b) const {
  long total = 0;
  for (std::size_t i = 0; i < pairing_.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < pairing_.size(); ++j) total += a[i] * pairing_[i][j] * b[j];
  return total;
}

LatticeVector Lattice::dual(const LatticeVector& m) const {
  LatticeVector out = canonical_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= m[i];
  return out;
}

namespace {

LatticeVector picard_vector(const ToricSurface& s, const std::vector<int>& coeffs) {
  const auto pic = picard_coordinates(s, coeffs);
  LatticeVector v(pic.size() + 2, 0);
  std::copy(pic.begin(), pic.end(), v.begin() + 1);
  return v;
}

}  // namespace

Lattice lattice_from_surface(const ToricSurface& s) {
  const auto form = intersection_form(s);
  const std::size_t r = form.size() + 2;
  std::vector<std::vector<long>> pairing(r, std::vector<long>(r, 0));
  pairing[0][r - 1] = pairing[r - 1][0] = 1;
  for (std::size_t i = 0; i < form.size(); ++i)
    for (std::size_t j = 0; j < form.size(); ++j) pairing[i + 1][j + 1] = form[i][j];
  return Lattice(std::move(pairing), picard_vector(s, canonical_bundle(s).divisor_coeffs),
                 s.euler_number());
}

LatticeVector embed_bundle(const ToricSurface& s, const EquivariantLineBundle& m) {
  return picard_vector(s, m.divisor_coeffs);
}

int grading(const Monomial& m) {
  int g = 0;
  for (const Mode& x : m) g += x.n;
  return g;
}

FockElement FockElement::vacuum() { return basis({}); }

FockElement FockElement::basis(Monomial m) {
  std::sort(m.begin(), m.end());
  FockElement x;
  x.add(m, {}, Rational(1));
  return x;
}

void FockElement::add(const Monomial& m, const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({m, e}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational FockElement::coefficient(const Monomial& m, const Exponents& e) const {
  const auto it = terms_.find({m, e});
  return it == terms_.end() ? Rational() : it->second;
}

int FockElement::max_grading() const {
  int g = 0;
  for (const auto& [key, c] : terms_) g = std::max(g, grading(key.first));
  return g;
}

FockElement& FockElement::operator+=(const FockElement& o) {
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

FockElement& FockElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, value] : terms_) value *= c;
  return *this;
}

FockElement FockElement::shifted(int slot, int shift) const {
  FockElement out;
  for (const auto& [key, c] : terms_) {
    Exponents e = key.second;
    e[static_cast<std::size_t>(slot)] += shift;
    out.terms_.emplace(Key{key.first, e}, c);
  }
  return out;
}

FockElement FockElement::truncated(int cap) const {
  FockElement out;
  for (const auto& [key, c] : terms_)
    if (grading(key.first) <= cap) out.terms_.emplace(key, c);
  return out;
}

std::string FockElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")";
    first = false;
    const auto& e = key.second;
    if (e[0]) os << " z1^" << e[0];
    if (e[1]) os << " z2^" << e[1];
    if (e[2]) os << " q^" << e[2];
    for (const Mode& m : key.first) os << " a_-" << m.n << "(e" << m.basis << ")";
    os << " |0>";
  }
  return os.str();
}

FockElement apply_alpha(int m, const LatticeVector& v, const FockElement& x, const Lattice& l,
                        int cap) {
  if (m == 0) throw std::invalid_argument("alpha_0 is not a Heisenberg mode here");
  FockElement out;
  if (m < 0) {
    const int n = -m;
    for (const auto& [key, c] : x.terms()) {
      if (grading(key.first) + n > cap) continue;
      for (int j = 0; j < l.rank(); ++j) {
        if (v[static_cast<std::size_t>(j)] == 0) continue;
        Monomial mono = key.first;
        mono.insert(std::upper_bound(mono.begin(), mono.end(), Mode{n, j}), Mode{n, j});
        out.add(mono, key.second, c * Rational(v[static_cast<std::size_t>(j)]));
      }
    }
    return out;
  }
  const long sign = m % 2 == 1 ? 1 : -1;
  for (const auto& [key, c] : x.terms()) {
    const Monomial& mono = key.first;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i].n != m) continue;
      long pairing = 0;
      for (int j = 0; j < l.rank(); ++j)
        pairing += v[static_cast<std::size_t>(j)] * l.pair_basis(j, mono[i].basis);
      if (pairing == 0) continue;
      Monomial rest = mono;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      out.add(rest, key.second, c * Rational(sign * m * pairing));
    }
  }
  return out;
}

FockElement gamma_operator(int sign, const LatticeVector& m, const GammaArg& z, const FockElement& x,
                           const Lattice& l, int cap) {
  if (std::all_of(m.begin(), m.end(), [](long c) { return c == 0; })) return x.truncated(cap);
  auto exponent = [&](const FockElement& y) {
    FockElement out;
    const int top = sign < 0 ? cap : y.max_grading();
    for (int n = 1; n <= top; ++n) {
      FockElement t = apply_alpha(sign < 0 ? -n : n, m, y, l, cap);
      if (t.is_zero()) continue;
      const int dz = sign < 0 ? n : -n;
      t = t.shifted(z.slot, dz);
      if (z.q_power != 0) t = t.shifted(2, dz * z.q_power);
      t *= Rational(z.sign < 0 && n % 2 == 1 ? -1 : 1) / Rational(n);
      out += t;
    }
    return out;
  };
  // Gamma_+ lowers the grading, so inputs above cap still feed lower terms
  FockElement result = x.truncated(cap);
  FockElement term = sign < 0 ? result : x;
  for (int k = 1;; ++k) {
    term = exponent(term);
    if (term.is_zero()) break;
    term *= Rational(1) / Rational(k);
    result += term.truncated(cap);
  }
  return result;
}

FockElement apply_w(const LatticeVector& m, int slot, const FockElement& x, const Lattice& l,
                    int cap) {
  LatticeVector minus_m = m;
  for (long& c : minus_m) c = -c;
  LatticeVector minus_dual = l.dual(m);
  for (long& c : minus_dual) c = -c;
  const FockElement y = gamma_operator(+1, minus_dual, {1, slot, 0}, x, l, cap);
  return gamma_operator(-1, minus_m, {-1, slot, 0}, y, l, cap);
}

FockElement apply_q_number(const FockElement& x) {
  FockElement out;
  for (const auto& [key, c] : x.terms()) {
    Exponents e = key.second;
    e[2] += grading(key.first);
    out.add(key.first, e, c);
  }
  return out;
}

namespace {

void basis_rec(int rank, int remaining, Mode lowest, Monomial& current,
               std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int n = lowest.n; n <= remaining; ++n)
    for (int j = (n == lowest.n ? lowest.basis : 0); j < rank; ++j) {
      current.push_back({n, j});
      basis_rec(rank, remaining - n, {n, j}, current, out);
      current.pop_back();
    }
}

FockElement z1_truncated(const FockElement& x, int cap) {
  FockElement out;
  for (const auto& [key, c] : x.terms())
    if (key.second[0] <= cap) out.add(key.first, key.second, c);
  return out;
}

}  // namespace

std::vector<Monomial> fock_basis(int rank, int g) {
  std::vector<Monomial> out;
  Monomial current;
  basis_rec(rank, g, {1, 0}, current, out);
  return out;
}

bool gamma_commutation_check(const Lattice& l, const LatticeVector& m1, const LatticeVector& m2,
                             int cap) {
  const GammaArg z1{1, 0, 0};
  const GammaArg z2{1, 1, 0};
  const Rational k(l.pair(m1, m2));
  for (int g = 0; g <= cap; ++g)
    for (const Monomial& b : fock_basis(l.rank(), g)) {
      const FockElement x = FockElement::basis(b);
      const FockElement lhs =
          gamma_operator(+1, m2, z2, gamma_operator(-1, m1, z1, x, l, g + cap), l, g + cap);
      const FockElement inner =
          gamma_operator(-1, m1, z1, gamma_operator(+1, m2, z2, x, l, g + cap), l, g + cap);
      FockElement rhs;
      for (int j = 0; j <= cap; ++j) {
        FockElement t = inner.shifted(0, j).shifted(1, -j);
        t *= binomial(k, j);
        rhs += t;
      }
      if (z1_truncated(lhs, cap) != z1_truncated(rhs, cap)) return false;
    }
  return true;
}

bool q_conjugation_check(const Lattice& l, const LatticeVector& m, int cap) {
  for (int g = 0; g <= cap; ++g)
    for (const Monomial& b : fock_basis(l.rank(), g)) {
      const FockElement x = FockElement::basis(b);
      const FockElement lhs = apply_q_number(gamma_operator(-1, m, {1, 0, 0}, x, l, cap));
      const FockElement rhs = gamma_operator(-1, m, {1, 0, 1}, apply_q_number(x), l, cap);
      if (lhs != rhs) return false;
    }
  return true;
}

Series2 w_trace(const Lattice& l, const LatticeVector& m1, const LatticeVector& m2, int cap) {
  Series2 out(cap);
  for (int n = 0; n <= cap; ++n)
    for (const Monomial& b : fock_basis(l.rank(), n)) {
      const FockElement x = FockElement::basis(b);
      const FockElement y = apply_w(m2, 1, apply_w(m1, 0, x, l, cap - n), l, n);
      for (const auto& [key, c] : y.terms()) {
        if (key.first != b) continue;
        const int p = key.second[0] - key.second[1];
        if (p % 2 != 0) continue;
        const int j = n + p / 2;
        if (j >= 0 && n + j <= cap) out.add(n, j, c);
      }
    }
  return out;
}

Series2 str_product(const Lattice& l, const LatticeVector& m1, const LatticeVector& m2, int cap) {
  const LatticeVector d1 = l.dual(m1);
  const LatticeVector d2 = l.dual(m2);
  auto factors = factor_family(1, 0, 1, 1, 0, Rational(l.pair(m1, d2)), cap);
  const auto diagonal = factor_family(
      1, 0, 1, 0, 1, Rational(l.pair(d1, m1) + l.pair(d2, m2) - l.euler_number()), cap);
  const auto below = factor_family(1, 0, 1, -1, 1, Rational(l.pair(d1, m2)), cap);
  factors.insert(factors.end(), diagonal.begin(), diagonal.end());
  factors.insert(factors.end(), below.begin(), below.end());
  return product_formula(factors, cap);
}

}  // namespace nesthilb::fock
