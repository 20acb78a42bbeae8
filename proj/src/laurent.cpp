#include "hallfrob/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace hf {

LaurentPoly LaurentPoly::monomial(Int coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.c_[exp] = std::move(coeff);
  return p;
}

int LaurentPoly::lo() const {
  if (c_.empty()) throw std::logic_error("lo() of zero Laurent polynomial");
  return c_.begin()->first;
}

int LaurentPoly::hi() const {
  if (c_.empty()) throw std::logic_error("hi() of zero Laurent polynomial");
  return c_.rbegin()->first;
}

Int LaurentPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Int(0) : it->second;
}

void LaurentPoly::set_coeff(int exp, const Int& a) {
  if (a == 0)
    c_.erase(exp);
  else
    c_[exp] = a;
}

void LaurentPoly::trim(int exp) {
  auto it = c_.find(exp);
  if (it != c_.end() && it->second == 0) c_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto& [e, a] : c_) r.c_[e] = -a;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto& [e, a] : o.c_) {
    c_[e] += a;
    trim(e);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto& [e, a] : o.c_) {
    c_[e] -= a;
    trim(e);
  }
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto& [e1, a1] : c_)
    for (auto& [e2, a2] : o.c_) {
      r.c_[e1 + e2] += a1 * a2;
    }
  for (auto it = r.c_.begin(); it != r.c_.end();) {
    if (it->second == 0)
      it = r.c_.erase(it);
    else
      ++it;
  }
  return r;
}

LaurentPoly LaurentPoly::scaled(const Int& a) const {
  LaurentPoly r;
  if (a == 0) return r;
  for (auto& [e, c] : c_) r.c_[e] = c * a;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (auto& [e, c] : c_) r.c_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (auto& [e, c] : c_) r.c_[-e] = c;
  return r;
}

LaurentPoly LaurentPoly::subst_signed_power(int l, bool negate) const {
  LaurentPoly r;
  for (auto& [e, c] : c_) {
    Int a = c;
    if (negate && (e % 2 != 0)) a = -a;
    r.c_[e * l] += a;
  }
  for (auto it = r.c_.begin(); it != r.c_.end();) {
    if (it->second == 0)
      it = r.c_.erase(it);
    else
      ++it;
  }
  return r;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("Laurent division by zero");
  if (is_zero()) return {};
  // Shift both to ordinary polynomials and long-divide from the top.
  LaurentPoly num = shifted(-lo());
  LaurentPoly den = d.shifted(-d.lo());
  int shift = lo() - d.lo();
  LaurentPoly quot;
  Int dlead = den.c_.rbegin()->second;
  int dhi = den.hi();
  while (!num.is_zero() && num.hi() >= dhi) {
    Int nlead = num.c_.rbegin()->second;
    if (!mpz_divisible_p(nlead.get_mpz_t(), dlead.get_mpz_t()))
      throw std::domain_error("inexact Laurent division");
    Int q = nlead / dlead;
    int e = num.hi() - dhi;
    quot.c_[e] = q;
    num -= den.shifted(e).scaled(q);
  }
  if (!num.is_zero()) throw std::domain_error("inexact Laurent division");
  return quot.shifted(shift);
}

Int LaurentPoly::eval(const Int& t) const {
  Int r = 0;
  for (auto& [e, c] : c_) {
    if (e < 0) {
      if (t == 1) { r += c; continue; }
      if (t == -1) { r += (e % 2 == 0) ? c : -c; continue; }
      throw std::domain_error("negative exponent in integer evaluation");
    }
    Int p;
    mpz_pow_ui(p.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(e));
    r += c * p;
  }
  return r;
}

std::pair<Rat, Rat> LaurentPoly::fold_sqrt(const Int& q) const {
  Rat a = 0, b = 0;
  for (auto& [e, c] : c_) {
    int half = (e >= 0) ? e / 2 : -((-e + 1) / 2);  // floor(e/2)
    Rat pw;
    Int qp;
    mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(),
               static_cast<unsigned long>(half >= 0 ? half : -half));
    pw = (half >= 0) ? Rat(qp) : Rat(1) / Rat(qp);
    if (e % 2 == 0)
      a += Rat(c) * pw;
    else
      b += Rat(c) * pw;
  }
  a.canonicalize();
  b.canonicalize();
  return {a, b};
}

std::string LaurentPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const Int& a = it->second;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    Int abs_a = abs(a);
    int e = it->first;
    if (abs_a != 1 || e == 0) os << abs_a.get_str();
    if (e != 0) {
      if (abs_a != 1) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(Int coeff, int exp) {
  IntPoly p;
  if (coeff != 0) {
    p.c_.assign(exp + 1, Int(0));
    p.c_[exp] = std::move(coeff);
  }
  return p;
}

Int IntPoly::coeff(int exp) const {
  if (exp < 0 || exp >= static_cast<int>(c_.size())) return 0;
  return c_[exp];
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.normalize();
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  IntPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.normalize();
  return r;
}

IntPoly IntPoly::div_exact(const IntPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (is_zero()) return {};
  IntPoly num = *this;
  IntPoly quot;
  quot.c_.assign(c_.size(), Int(0));
  const Int& dlead = d.c_.back();
  while (!num.is_zero() && num.degree() >= d.degree()) {
    Int nlead = num.c_.back();
    if (!mpz_divisible_p(nlead.get_mpz_t(), dlead.get_mpz_t()))
      throw std::domain_error("inexact polynomial division");
    Int q = nlead / dlead;
    int e = num.degree() - d.degree();
    quot.c_[e] = q;
    IntPoly sub;
    sub.c_.assign(e + d.c_.size(), Int(0));
    for (size_t i = 0; i < d.c_.size(); ++i) sub.c_[e + i] = d.c_[i] * q;
    num = num - sub;
  }
  if (!num.is_zero()) throw std::domain_error("inexact polynomial division");
  quot.normalize();
  return quot;
}

Int IntPoly::eval(const Int& t) const {
  Int r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
  return r;
}

IntPoly IntPoly::compose_power(int k) const {
  if (is_zero()) return {};
  IntPoly r;
  r.c_.assign((c_.size() - 1) * k + 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
  r.normalize();
  return r;
}

LaurentPoly IntPoly::to_laurent() const {
  LaurentPoly r;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) r.set_coeff(static_cast<int>(i), c_[i]);
  return r;
}

std::string IntPoly::str(const std::string& var) const {
  return to_laurent().str(var);
}

Int resultant(const IntPoly& f, const IntPoly& g) {
  int m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), f.coeff(0).get_mpz_t(), static_cast<unsigned long>(n));
    return r;
  }
  if (n == 0) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), g.coeff(0).get_mpz_t(), static_cast<unsigned long>(m));
    return r;
  }
  // Sylvester matrix, (m+n) x (m+n).
  int sz = m + n;
  std::vector<std::vector<Int>> a(sz, std::vector<Int>(sz, Int(0)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) a[r][r + k] = f.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) a[n + r][r + k] = g.coeff(n - k);
  // Bareiss fraction-free determinant.
  Int denom = 1;
  int sign = 1;
  for (int k = 0; k < sz - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < sz; ++r)
        if (a[r][k] != 0) { piv = r; break; }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < sz; ++i)
      for (int j = k + 1; j < sz; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / denom;
      }
    denom = a[k][k];
  }
  return sign > 0 ? a[sz - 1][sz - 1] : -a[sz - 1][sz - 1];
}

}  // namespace hf
