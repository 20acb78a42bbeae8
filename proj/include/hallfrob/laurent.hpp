#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace hf {

using Int = mpz_class;
using Rat = mpq_class;

/// Laurent polynomial in one variable v over Z. Coefficients are
/// arbitrary-precision; zero coefficients are never stored.
class LaurentPoly {
public:
  LaurentPoly() = default;

  static LaurentPoly monomial(Int coeff, int exp);
  static LaurentPoly one() { return monomial(1, 0); }
  static LaurentPoly v(int exp = 1) { return monomial(1, exp); }

  bool is_zero() const { return c_.empty(); }
  int lo() const;
  int hi() const;
  Int coeff(int exp) const;
  void set_coeff(int exp, const Int& a);
  const std::map<int, Int>& terms() const { return c_; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

  LaurentPoly scaled(const Int& a) const;
  /// Multiply by v^k.
  LaurentPoly shifted(int k) const;
  /// Substitute v -> v^{-1}.
  LaurentPoly bar() const;
  /// Substitute v -> s * v^l  (s = -1 if negate, else +1).
  LaurentPoly subst_signed_power(int l, bool negate) const;

  /// Exact division; aborts via exception if the division has a remainder.
  LaurentPoly div_exact(const LaurentPoly& d) const;

  /// Evaluate at v = t for exact integer t (requires lo() >= 0 or t = +-1).
  Int eval(const Int& t) const;

  /// Fold v^2 -> q: returns (A, B) with poly == A + B*v in Q after the
  /// substitution, as exact rationals (negative exponents give 1/q powers).
  std::pair<Rat, Rat> fold_sqrt(const Int& q) const;

  std::string str(const std::string& var = "v") const;

private:
  std::map<int, Int> c_;
  void trim(int exp);
};

/// Dense polynomial in one variable over Z, nonnegative exponents.
/// Leading coefficient nonzero unless the polynomial is zero.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  static IntPoly monomial(Int coeff, int exp);
  static IntPoly one() { return monomial(1, 0); }
  static IntPoly t(int exp = 1) { return monomial(1, exp); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Int coeff(int exp) const;
  const std::vector<Int>& coeffs() const { return c_; }

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  IntPoly div_exact(const IntPoly& d) const;
  Int eval(const Int& t) const;
  /// Substitute t -> t^k.
  IntPoly compose_power(int k) const;
  LaurentPoly to_laurent() const;

  std::string str(const std::string& var = "t") const;

private:
  std::vector<Int> c_;
  void normalize();
};

/// Resultant Res(f, g) of two integer polynomials, computed as the
/// determinant of the Sylvester matrix by fraction-free elimination.
Int resultant(const IntPoly& f, const IntPoly& g);

}  // namespace hf
