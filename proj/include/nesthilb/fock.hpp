#pragma once

#include "nesthilb/rational.hpp"
#include "nesthilb/series.hpp"
#include "nesthilb/toric.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nesthilb::fock {

using LatticeVector = std::vector<long>;

/// Cohomology lattice of a surface with its pairing. Only even classes
/// occur, so supertraces over the Fock space are plain traces.
class Lattice {
 public:
  static constexpr bool kEvenOnly = true;

  /// Throws std::invalid_argument unless the pairing is square and symmetric
  /// and the canonical vector has matching rank.
  Lattice(std::vector<std::vector<long>> pairing, LatticeVector canonical, int euler_number);

  int rank() const { return static_cast<int>(pairing_.size()); }
  int euler_number() const { return euler_number_; }
  const LatticeVector& canonical() const { return canonical_; }
  long pair(const LatticeVector& a, const LatticeVector& b) const;
  long pair_basis(int i, int j) const { return pairing_[i][j]; }
  /// M^D = K - M.
  LatticeVector dual(const LatticeVector& m) const;
  LatticeVector zero() const { return LatticeVector(pairing_.size(), 0); }

 private:
  std::vector<std::vector<long>> pairing_;
  LatticeVector canonical_;
  int euler_number_;
};

/// Full even cohomology H^0 + H^2 + H^4 of a toric surface: basis 1, the
/// Picard basis, then the point class; rank e(S). <1, pt> = 1.
Lattice lattice_from_surface(const ToricSurface& s);
/// Image of c1(M) in lattice_from_surface(s).
LatticeVector embed_bundle(const ToricSurface& s, const EquivariantLineBundle& m);

/// Creation operator alpha_{-n}(e_basis).
struct Mode {
  int n;
  int basis;
  friend auto operator<=>(const Mode&, const Mode&) = default;
};

/// Sorted multiset of creation operators applied to the vacuum.
using Monomial = std::vector<Mode>;
int grading(const Monomial& m);

/// Formal exponents of (z1, z2, q) attached to a term.
using Exponents = std::array<int, 3>;

class FockElement {
 public:
  using Key = std::pair<Monomial, Exponents>;

  static FockElement vacuum();
  static FockElement basis(Monomial m);

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Monomial& m, const Exponents& e, const Rational& c);
  Rational coefficient(const Monomial& m, const Exponents& e = {}) const;
  int max_grading() const;

  FockElement& operator+=(const FockElement& o);
  FockElement& operator*=(const Rational& c);
  friend FockElement operator+(FockElement a, const FockElement& b) { return a += b; }
  friend FockElement operator-(FockElement a, const FockElement& b) {
    FockElement nb = b;
    nb *= Rational(-1);
    return a += nb;
  }
  friend bool operator==(const FockElement&, const FockElement&) = default;

  /// Multiplies every term by z^shift in slot (0 = z1, 1 = z2, 2 = q).
  FockElement shifted(int slot, int shift) const;
  /// Drops terms with grading above cap.
  FockElement truncated(int cap) const;
  std::string to_string() const;

 private:
  std::map<Key, Rational> terms_;
};

/// Heisenberg mode alpha_m(v) with [alpha_m(a), alpha_{-m}(b)] = (-1)^(m-1) m <a,b>.
/// Creation results above grading cap are dropped. Throws on m = 0.
FockElement apply_alpha(int m, const LatticeVector& v, const FockElement& x, const Lattice& l,
                        int cap);

/// Argument sign * z_slot * q^q_power of a vertex operator.
struct GammaArg {
  int sign = 1;
  int slot = 0;
  int q_power = 0;
};

/// Gamma_-(M, z) = exp(sum_{n>0} z^n/n alpha_{-n}(M)) for sign < 0 and
/// Gamma_+(M, z) = exp(sum_{n>0} z^{-n}/n alpha_n(M)) for sign > 0, acting on
/// x and truncated at grading cap.
FockElement gamma_operator(int sign, const LatticeVector& m, const GammaArg& z, const FockElement& x,
                           const Lattice& l, int cap);

/// W(M)(z) = Gamma_-(-M, -z) Gamma_+(-M^D, z).
FockElement apply_w(const LatticeVector& m, int slot, const FockElement& x, const Lattice& l,
                    int cap);

/// Multiplies each term by q^grading.
FockElement apply_q_number(const FockElement& x);

/// All monomials of the given grading.
std::vector<Monomial> fock_basis(int rank, int grading);

/// Gamma_+(M2, z2) Gamma_-(M1, z1) = (1 + z1/z2)^<M1,M2> Gamma_-(M1, z1) Gamma_+(M2, z2)
/// on every basis element of grading <= cap, compared in z1-degree <= cap.
bool gamma_commutation_check(const Lattice& l, const LatticeVector& m1, const LatticeVector& m2,
                             int cap);

/// q^N Gamma_-(M, z) = Gamma_-(M, qz) q^N on basis elements of grading <= cap.
bool q_conjugation_check(const Lattice& l, const LatticeVector& m, int cap);

/// Trace of q^N W(M1)(z1) W(M2)(z2) with z2 = 1/z1, rewritten in q1 = q z1^-2,
/// q2 = z1^2 and truncated at total degree cap.
Series2 w_trace(const Lattice& l, const LatticeVector& m1, const LatticeVector& m2, int cap);

/// prod_{n>=0} (1 - q1^n q2^(n+1))^<M1,M2^D>
///   prod_{n>0} (1 - (q1 q2)^n)^(<M1^D,M1> + <M2^D,M2> - e)
///   prod_{n>0} (1 - q1^n q2^(n-1))^<M1^D,M2>
Series2 str_product(const Lattice& l, const LatticeVector& m1, const LatticeVector& m2, int cap);

}  // namespace nesthilb::fock
