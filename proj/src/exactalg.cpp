#include "hallfrob/exactalg.hpp"

#include <numeric>
#include <stdexcept>

namespace hf {

namespace {

int mobius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

IntPoly t_pow_minus_one(int d) {
  IntPoly p = IntPoly::t(d);
  return p - IntPoly::one();
}

}  // namespace

IntPoly cyclotomic_poly(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
  IntPoly num = IntPoly::one();
  IntPoly den = IntPoly::one();
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = mobius(n / d);
    if (mu == 1)
      num = num * t_pow_minus_one(d);
    else if (mu == -1)
      den = den * t_pow_minus_one(d);
  }
  return num.div_exact(den);
}

bool check_phi_square_identity(int ell) {
  if (ell < 1) throw std::invalid_argument("check_phi_square_identity: ell >= 1");
  IntPoly lhs = cyclotomic_poly(ell).compose_power(2);
  IntPoly rhs = (ell % 2 == 0) ? cyclotomic_poly(2 * ell)
                               : cyclotomic_poly(ell) * cyclotomic_poly(2 * ell);
  return lhs == rhs;
}

LaurentPoly quantum_int(int n, int d) {
  // (v^{dn} - v^{-dn}) / (v^d - v^{-d}) = v^{d(n-1)} + v^{d(n-3)} + ...
  LaurentPoly r;
  for (int e = -(n - 1); e <= n - 1; e += 2) r += LaurentPoly::v(d * e);
  return r;
}

LaurentPoly quantum_factorial(int n, int d) {
  LaurentPoly r = LaurentPoly::one();
  for (int j = 2; j <= n; ++j) r *= quantum_int(j, d);
  return r;
}

LaurentPoly gauss_binom(int m, int k, int d) {
  if (m < 0) throw std::invalid_argument("gauss_binom: m >= 0 required");
  if (k < 0 || k > m) return {};
  LaurentPoly num = LaurentPoly::one();
  for (int j = 0; j < k; ++j) num *= quantum_int(m - j, d);
  return num.div_exact(quantum_factorial(k, d));
}

Int q_binom_eval(int m, int k, const Int& q) {
  if (k < 0 || k > m) return 0;
  // prod_{j=0}^{k-1} (q^{m-j} - 1) / (q^{j+1} - 1), exact at each step as an
  // integer thanks to reassociating: standard q-Pascal evaluation instead.
  std::vector<Int> row(k + 1, Int(0));
  row[0] = 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      Int qp;
      mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(j));
      row[j] = qp * row[j] + row[j - 1];
    }
  }
  return row[k];
}

LaurentPoly rho_twist(const LaurentPoly& p, int ell) {
  if (ell < 1) throw std::invalid_argument("rho_twist: ell >= 1");
  return p.subst_signed_power(ell, ell % 2 == 0);
}

// ---------------------------------------------------------------------------

namespace {
int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}
}  // namespace

CycloRing::CycloRing(int ell) : ell_(ell) {
  if (ell < 1) throw std::invalid_argument("CycloRing: ell >= 1");
  phi_ = cyclotomic_poly(2 * ell);
  deg_ = phi_.degree();
  if (deg_ != euler_phi(2 * ell)) throw std::logic_error("cyclotomic degree mismatch");
}

LaurentPoly reduce_canonical(const LaurentPoly& p, int ell) {
  CycloRing ring(ell);
  return ring.reduce(p).to_laurent();
}

CycloElt CycloRing::reduce(const LaurentPoly& p) const {
  CycloElt e;
  e.ring_ = this;
  e.rep_.assign(deg_, Int(0));
  if (p.is_zero()) return e;
  // Clear negative exponents: v^{2 ell} = 1 in A_ell.
  LaurentPoly q = p;
  if (q.lo() < 0) {
    int k = (-q.lo() + 2 * ell_ - 1) / (2 * ell_);
    q = q.shifted(2 * ell_ * k);
  }
  // Remainder modulo the monic Phi_{2ell}.
  std::vector<Int> c(q.hi() + 1, Int(0));
  for (auto& [ex, a] : q.terms()) c[ex] = a;
  for (int i = static_cast<int>(c.size()) - 1; i >= deg_; --i) {
    if (c[i] == 0) continue;
    Int lead = c[i];
    for (int j = 0; j <= deg_; ++j) c[i - deg_ + j] -= lead * phi_.coeff(j);
  }
  for (int i = 0; i < deg_; ++i) e.rep_[i] = c[i];
  return e;
}

CycloElt reduce_mod_cyclo(const LaurentPoly& p, const CycloRing& ring) {
  return ring.reduce(p);
}

bool CycloElt::is_zero() const {
  for (auto& a : rep_)
    if (a != 0) return false;
  return true;
}

LaurentPoly CycloElt::to_laurent() const {
  LaurentPoly p;
  for (size_t i = 0; i < rep_.size(); ++i)
    if (rep_[i] != 0) p.set_coeff(static_cast<int>(i), rep_[i]);
  return p;
}

std::string CycloElt::str() const { return to_laurent().str(); }

namespace {
void check_same_ring(const CycloElt& a, const CycloElt& b) {
  if (a.ring() == nullptr || b.ring() == nullptr ||
      a.ring()->ell() != b.ring()->ell())
    throw std::invalid_argument("CycloElt: mixed rings");
}
}  // namespace

CycloElt CycloElt::operator+(const CycloElt& o) const {
  check_same_ring(*this, o);
  return ring_->reduce(to_laurent() + o.to_laurent());
}

CycloElt CycloElt::operator-(const CycloElt& o) const {
  check_same_ring(*this, o);
  return ring_->reduce(to_laurent() - o.to_laurent());
}

CycloElt CycloElt::operator*(const CycloElt& o) const {
  check_same_ring(*this, o);
  return ring_->reduce(to_laurent() * o.to_laurent());
}

CycloElt CycloElt::operator-() const {
  if (!ring_) return *this;
  return ring_->reduce(-to_laurent());
}

bool CycloElt::operator==(const CycloElt& o) const {
  check_same_ring(*this, o);
  return rep_ == o.rep_;
}

CycloElt CycloRing::epsilon_ell() const {
  LaurentPoly e = LaurentPoly::v(ell_);
  if (ell_ % 2 == 0) e = -e;  // (-1)^{ell+1}
  return reduce(e);
}

bool CycloRing::in_ideal_v2_minus_q(const CycloElt& z, const Int& q) const {
  // Lattice generators: g_j = v^j (v^2 - q) reduced mod Phi_{2ell}.
  int n = deg_;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
  for (int j = 0; j < n; ++j) {
    LaurentPoly g = LaurentPoly::v(j + 2) - LaurentPoly::monomial(q, j);
    CycloElt ge = reduce(g);
    for (int i = 0; i < n; ++i) m[i][j] = Rat(ge.rep()[i]);
  }
  for (int i = 0; i < n; ++i) m[i][n] = Rat(z.rep()[i]);
  // Solve M c = z over Q; solution exists and is unique (det = +-N(v^2-q) != 0
  // for q >= 2); membership iff all coordinates are integers.
  int row = 0;
  std::vector<int> pivots;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[row], m[piv]);
    Rat inv = m[row][col];
    for (int c2 = col; c2 <= n; ++c2) m[row][c2] /= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int c2 = col; c2 <= n; ++c2) m[r][c2] -= f * m[row][c2];
    }
    pivots.push_back(col);
    ++row;
  }
  if (static_cast<int>(pivots.size()) != n)
    throw std::logic_error("in_ideal_v2_minus_q: singular generator lattice");
  for (int r = 0; r < n; ++r) {
    Rat coeff = m[r][n];
    coeff.canonicalize();
    if (coeff.get_den() != 1) return false;
  }
  return true;
}

bool check_binom_vanishing(int a, int t, int d, int ell) {
  if (t < 0 || t > a) throw std::invalid_argument("check_binom_vanishing: 0 <= t <= a");
  if (std::gcd(ell, d) != 1)
    throw std::invalid_argument("check_binom_vanishing: gcd(ell, d) must be 1");
  if (a % ell != 0) return true;  // outside the lemma's hypotheses
  CycloRing ring(ell);
  CycloElt lhs = ring.reduce(gauss_binom(a, t, d));
  if (t % ell != 0) return lhs.is_zero();
  CycloElt rhs = ring.reduce(rho_twist(gauss_binom(a / ell, t / ell, d), ell));
  return lhs == rhs;
}

Int cyclo_norm_zeta2_minus_q(int ell, const Int& q) {
  if (ell < 1) throw std::invalid_argument("cyclo_norm: ell >= 1");
  IntPoly g({-q, Int(0), Int(1)});  // t^2 - q
  return resultant(cyclotomic_poly(2 * ell), g);
}

bool eq_mod_v2_minus_q(const LaurentPoly& a, const LaurentPoly& b, const Int& q) {
  auto [ra, ia] = (a - b).fold_sqrt(q);
  return ra == 0 && ia == 0;
}

bool eq_in_cyclo_sqrtq(const LaurentPoly& a, const LaurentPoly& b,
                       const CycloRing& ring, const Int& q) {
  LaurentPoly d = a - b;
  if (d.is_zero()) return true;
  return ring.in_ideal_v2_minus_q(ring.reduce(d), q);
}

std::vector<std::pair<int, std::string>> laurent_to_pairs(const LaurentPoly& p) {
  std::vector<std::pair<int, std::string>> out;
  for (auto& [e, c] : p.terms()) out.emplace_back(e, c.get_str());
  return out;
}

LaurentPoly laurent_from_pairs(const std::vector<std::pair<int, std::string>>& pairs) {
  LaurentPoly p;
  for (auto& [e, s] : pairs) p.set_coeff(e, Int(s));
  return p;
}

}  // namespace hf
