#pragma once

#include "hallfrob/laurent.hpp"

#include <memory>
#include <optional>

namespace hf {

/// n-th cyclotomic polynomial via the Moebius product formula
///   Phi_n(t) = prod_{d|n} (t^d - 1)^{mu(n/d)}
/// with exact polynomial division.
IntPoly cyclotomic_poly(int n);

/// Phi_l(t^2) == Phi_{2l}(t) for even l, Phi_l(t)*Phi_{2l}(t) for odd l.
bool check_phi_square_identity(int ell);

/// Balanced Gaussian binomial [m k] in v_i = v^d.  Zero for k < 0 or k > m.
LaurentPoly gauss_binom(int m, int k, int d = 1);

/// Quantum integer [n] in v^d: (v^{dn} - v^{-dn}) / (v^d - v^{-d}).
LaurentPoly quantum_int(int n, int d = 1);

/// [n]_d! = [n][n-1]...[1].
LaurentPoly quantum_factorial(int n, int d = 1);

/// The standard q-binomial as an integer: gauss_binom evaluated at q after
/// unbalancing, i.e. #{k-dim subspaces of F_q^m}.
Int q_binom_eval(int m, int k, const Int& q);

/// v -> (-1)^{ell+1} v^ell, a ring endomorphism of Z[v, v^{-1}].
LaurentPoly rho_twist(const LaurentPoly& p, int ell);

class CycloRing;

/// Element of A_ell = Z[v,v^{-1}]/(Phi_{2ell}(v)), stored as the canonical
/// remainder of degree < phi(2ell).
class CycloElt {
public:
  CycloElt() = default;

  const CycloRing* ring() const { return ring_; }
  const std::vector<Int>& rep() const { return rep_; }
  bool is_zero() const;

  CycloElt operator+(const CycloElt& o) const;
  CycloElt operator-(const CycloElt& o) const;
  CycloElt operator*(const CycloElt& o) const;
  CycloElt operator-() const;
  bool operator==(const CycloElt& o) const;
  bool operator!=(const CycloElt& o) const { return !(*this == o); }

  LaurentPoly to_laurent() const;
  std::string str() const;

private:
  friend class CycloRing;
  const CycloRing* ring_ = nullptr;
  std::vector<Int> rep_;  // coefficients 0 .. phi(2ell)-1
};

/// The quotient ring A_ell.  Negative exponents are cleared by multiplying
/// with v^{2 ell k}, a unit (v^{2 ell} = 1 in A_ell); Phi_{2ell} is monic so
/// the remainder is canonical.
class CycloRing {
public:
  explicit CycloRing(int ell);

  int ell() const { return ell_; }
  int degree() const { return deg_; }
  const IntPoly& modulus() const { return phi_; }

  CycloElt reduce(const LaurentPoly& p) const;
  CycloElt zero() const { return reduce(LaurentPoly()); }
  CycloElt one() const { return reduce(LaurentPoly::one()); }
  /// Image of v^k (k may be negative).
  CycloElt v_power(int k) const { return reduce(LaurentPoly::v(((k % (2 * ell_)) + 2 * ell_) % (2 * ell_))); }
  CycloElt from_int(const Int& n) const { return reduce(LaurentPoly::monomial(n, 0)); }

  /// epsilon_ell = (-1)^{ell+1} v^ell, the compatible square root of q^ell.
  CycloElt epsilon_ell() const;

  /// Membership of z in the ideal (v^2 - q) A_ell, by exact linear algebra
  /// over Q against the lattice spanned by v^j (v^2 - q) mod Phi_{2ell}.
  bool in_ideal_v2_minus_q(const CycloElt& z, const Int& q) const;

private:
  int ell_;
  int deg_;
  IntPoly phi_;
};

LaurentPoly reduce_canonical(const LaurentPoly& p, int ell);

/// reduce_mod_cyclo as a standalone operation.
CycloElt reduce_mod_cyclo(const LaurentPoly& p, const CycloRing& ring);

/// Binomial lemmas in A_ell (nondivisible case, gcd(ell, d) = 1):
///  - ell | a, ell !| t:  [a t]_d maps to 0;
///  - ell | a, ell | t:   [a t]_d maps to rho([a/ell t/ell]_d).
/// Vacuously true when ell does not divide a.
bool check_binom_vanishing(int a, int t, int d, int ell);

/// N(zeta^2 - q) for zeta a primitive 2ell-th root of unity, computed as the
/// resultant Res(Phi_{2ell}(t), t^2 - q).
Int cyclo_norm_zeta2_minus_q(int ell, const Int& q);

/// Equality in Z[v^{+-1}]/(v^2 - q): fold both and compare exact rationals.
bool eq_mod_v2_minus_q(const LaurentPoly& a, const LaurentPoly& b, const Int& q);

/// Equality in Z[v]/(Phi_{2ell}(v), v^2 - q).
bool eq_in_cyclo_sqrtq(const LaurentPoly& a, const LaurentPoly& b,
                       const CycloRing& ring, const Int& q);

// Serialization: Laurent polynomials as JSON-ready [exponent, coeff-string]
// pairs, coefficients as decimal strings.
std::vector<std::pair<int, std::string>> laurent_to_pairs(const LaurentPoly& p);
LaurentPoly laurent_from_pairs(const std::vector<std::pair<int, std::string>>& pairs);

}  // namespace hf
