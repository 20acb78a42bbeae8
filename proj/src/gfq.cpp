#include "hallfrob/gfq.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hf {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool prime_power(int q, int* p, int* e) {
  if (q < 2) return false;
  int base = q;
  for (int d = 2; d * d <= base; ++d) {
    if (base % d == 0) { base = d; break; }
  }
  if (!is_prime(base)) return false;
  int ee = 0, m = q;
  while (m % base == 0) { m /= base; ++ee; }
  if (m != 1) return false;
  *p = base;
  *e = ee;
  return true;
}

namespace {

// Dense polynomials over F_p as int vectors (coeff of t^i at [i]).
using Poly = std::vector<int>;

void ptrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& mod, int p) {
  Poly r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  // reduce by monic mod
  int dm = static_cast<int>(mod.size()) - 1;
  for (int i = static_cast<int>(r.size()) - 1; i >= dm; --i) {
    int c = r[i];
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j)
      r[i - dm + j] = ((r[i - dm + j] - c * mod[j]) % p + p) % p;
  }
  r.resize(dm);
  return r;
}

// Remainder of a by monic b over F_p.
Poly prem(Poly a, const Poly& b, int p) {
  ptrim(a);
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    int c = a.back();
    int da = static_cast<int>(a.size()) - 1;
    if (c != 0)
      for (int j = 0; j <= db; ++j)
        a[da - db + j] = ((a[da - db + j] - c * b[j]) % p + p) % p;
    a.pop_back();
    ptrim(a);
  }
  return a;
}

bool irreducible(const Poly& f, int p) {
  int d = static_cast<int>(f.size()) - 1;
  if (d == 1) return true;
  // No roots.
  for (int x = 0; x < p; ++x) {
    int val = 0;
    for (int i = d; i >= 0; --i) val = (val * x + f[i]) % p;
    if (val == 0) return false;
  }
  // Trial division by monic polynomials of degree 2..d/2.
  for (int dd = 2; 2 * dd <= d; ++dd) {
    long count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      Poly g(dd + 1, 0);
      long c = code;
      for (int i = 0; i < dd; ++i) { g[i] = static_cast<int>(c % p); c /= p; }
      g[dd] = 1;
      if (prem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::map<std::pair<int, int>, std::unique_ptr<FqField>>& registry() {
  static std::map<std::pair<int, int>, std::unique_ptr<FqField>> r;
  return r;
}

}  // namespace

const FqField* FqField::get(int p, int e, int cap) {
  if (!is_prime(p)) throw std::invalid_argument("FqField: p must be prime");
  if (e < 1) throw std::invalid_argument("FqField: e must be >= 1");
  long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > cap)
      throw std::invalid_argument("FqField: p^e exceeds the desk-scale cap (" +
                                  std::to_string(cap) + ")");
  }
  auto key = std::make_pair(p, e);
  auto& reg = registry();
  auto it = reg.find(key);
  if (it == reg.end())
    it = reg.emplace(key, std::unique_ptr<FqField>(new FqField(p, e, cap))).first;
  return it->second.get();
}

const FqField* FqField::from_q(int q, int cap) {
  int p, e;
  if (!prime_power(q, &p, &e))
    throw std::invalid_argument("not a prime power: " + std::to_string(q));
  return get(p, e, cap);
}

FqField::FqField(int p, int e, int /*cap*/) : p_(p), e_(e) {
  q_ = 1;
  for (int i = 0; i < e; ++i) q_ *= p;
  // Deterministic modulus: least lower-coefficient code giving an irreducible.
  modulus_.assign(e + 1, 0);
  modulus_[e] = 1;
  if (e > 1) {
    bool found = false;
    for (int code = 0; code < q_ && !found; ++code) {
      Poly f(e + 1, 0);
      int c = code;
      for (int i = 0; i < e; ++i) { f[i] = c % p; c /= p; }
      f[e] = 1;
      if (irreducible(f, p)) {
        for (int i = 0; i <= e; ++i) modulus_[i] = f[i];
        found = true;
      }
    }
    if (!found) throw std::logic_error("no irreducible modulus found");
  }

  auto decode = [&](int x) {
    Poly a(e_, 0);
    for (int i = 0; i < e_; ++i) { a[i] = x % p_; x /= p_; }
    return a;
  };
  auto encode = [&](const Poly& a) {
    int x = 0;
    for (int i = e_ - 1; i >= 0; --i) x = x * p_ + (i < static_cast<int>(a.size()) ? a[i] : 0);
    return x;
  };

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    Poly pa = decode(a);
    Poly na(e_);
    for (int i = 0; i < e_; ++i) na[i] = (p_ - pa[i]) % p_;
    neg_[a] = encode(na);
    for (int b = 0; b < q_; ++b) {
      Poly pb = decode(b), s(e_);
      for (int i = 0; i < e_; ++i) s[i] = (pa[i] + pb[i]) % p_;
      add_[a * q_ + b] = encode(s);
      Poly m = pmulmod(pa, pb, modulus_, p_);
      m.resize(e_, 0);
      mul_[a * q_ + b] = encode(m);
    }
  }
  inv_.assign(q_, 0);
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) { inv_[a] = b; break; }
  frob_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    int r = 1;
    for (int i = 0; i < p_; ++i) r = mul_[r * q_ + a];
    frob_[a] = r;
  }
  primitive_ = 0;
  for (int a = 2; a < q_; ++a)
    if (mult_order(a) == q_ - 1) { primitive_ = a; break; }
  if (q_ == 2) primitive_ = 1;
}

int FqField::inv(int a) const {
  if (a == 0) throw std::domain_error("FqField: inverse of zero");
  return inv_[a];
}

int FqField::pow(int a, long k) const {
  if (k < 0) { a = inv(a); k = -k; }
  int r = 1;
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

int FqField::frob_pow(int a, long q0) const {
  long m = q0;
  while (m > 1) {
    if (m % p_ != 0)
      throw std::invalid_argument("frob_pow: q0 is not a power of the characteristic");
    a = frob(a);
    m /= p_;
  }
  if (m != 1) throw std::invalid_argument("frob_pow: bad q0");
  return a;
}

int FqField::from_int(long n) const {
  long r = n % p_;
  if (r < 0) r += p_;
  return static_cast<int>(r);
}

int FqField::mult_order(int a) const {
  if (a == 0) return 0;
  int r = a, ord = 1;
  while (r != 1) {
    r = mul(r, a);
    ++ord;
  }
  return ord;
}

const std::vector<int>& FqField::embedding_into(const FqField& target) const {
  if (target.p_ != p_ || target.e_ % e_ != 0)
    throw std::invalid_argument("embedding_into: source degree must divide target degree");
  for (auto& [t, tab] : embed_cache_)
    if (t == &target) return tab;
  std::vector<int> table(q_, 0);
  if (e_ == 1) {
    for (int a = 0; a < q_; ++a) table[a] = a;  // scalars agree by encoding
  } else {
    // Least root of our modulus in the target field.
    int root = -1;
    for (int z = 0; z < target.q_ && root < 0; ++z) {
      int val = 0;
      for (int i = e_; i >= 0; --i)
        val = target.add(target.mul(val, z), modulus_[i] % p_);
      if (val == 0) root = z;
    }
    if (root < 0) throw std::logic_error("no root of modulus in target field");
    for (int a = 0; a < q_; ++a) {
      int x = a, img = 0, zp = 1;
      for (int i = 0; i < e_; ++i) {
        img = target.add(img, target.mul(x % p_, zp));
        zp = target.mul(zp, root);
        x /= p_;
      }
      table[a] = img;
    }
  }
  embed_cache_.emplace_back(&target, std::move(table));
  return embed_cache_.back().second;
}

int embed(const FqField& src, int x, const FqField& dst) {
  if (&src == &dst) return x;
  return src.embedding_into(dst)[x];
}

int unembed(const FqField& src, int x, const FqField& dst) {
  if (&src == &dst) return x;
  const auto& tab = src.embedding_into(dst);
  for (int a = 0; a < src.q(); ++a)
    if (tab[a] == x) return a;
  throw std::domain_error("unembed: element not in subfield image");
}

std::string FqField::str() const {
  std::ostringstream os;
  os << "F" << q_;
  if (e_ > 1) {
    os << " = F" << p_ << "[t]/(";
    bool first = true;
    for (int i = e_; i >= 0; --i) {
      if (modulus_[i] == 0) continue;
      if (!first) os << "+";
      if (i == 0 || modulus_[i] != 1) os << modulus_[i];
      if (i > 0) os << "t";
      if (i > 1) os << "^" << i;
      first = false;
    }
    os << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

FqMatrix FqMatrix::identity(const FqField* f, int n) {
  FqMatrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  if (cols_ != o.rows_ || f_ != o.f_) throw std::invalid_argument("matrix product shape");
  FqMatrix r(f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      int aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.set(i, j, f_->add(r.at(i, j), f_->mul(aik, o.at(k, j))));
    }
  return r;
}

FqMatrix FqMatrix::operator+(const FqMatrix& o) const {
  if (cols_ != o.cols_ || rows_ != o.rows_ || f_ != o.f_)
    throw std::invalid_argument("matrix sum shape");
  FqMatrix r(f_, rows_, cols_);
  for (int i = 0; i < rows_ * cols_; ++i) r.a_[i] = f_->add(a_[i], o.a_[i]);
  return r;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix r(f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

FqMatrix FqMatrix::map_entries(const FqField* dst) const {
  FqMatrix r(dst, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(i, j, embed(*f_, at(i, j), *dst));
  return r;
}

FqMatrix FqMatrix::rref(int* rank, std::vector<int>* pivots) const {
  FqMatrix m = *this;
  int r = 0;
  std::vector<int> piv;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int sel = -1;
    for (int i = r; i < rows_; ++i)
      if (m.at(i, c) != 0) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < cols_; ++j) {
        uint8_t t = m.a_[sel * cols_ + j];
        m.a_[sel * cols_ + j] = m.a_[r * cols_ + j];
        m.a_[r * cols_ + j] = t;
      }
    int ipiv = f_->inv(m.at(r, c));
    for (int j = c; j < cols_; ++j) m.set(r, j, f_->mul(m.at(r, j), ipiv));
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      int fac = m.at(i, c);
      if (fac == 0) continue;
      for (int j = c; j < cols_; ++j)
        m.set(i, j, f_->sub(m.at(i, j), f_->mul(fac, m.at(r, j))));
    }
    piv.push_back(c);
    ++r;
  }
  if (rank) *rank = r;
  if (pivots) *pivots = piv;
  return m;
}

int FqMatrix::rank() const {
  int r;
  rref(&r);
  return r;
}

FqMatrix FqMatrix::kernel() const {
  int r;
  std::vector<int> piv;
  FqMatrix m = rref(&r, &piv);
  std::vector<int> free_cols;
  {
    size_t pi = 0;
    for (int c = 0; c < cols_; ++c) {
      if (pi < piv.size() && piv[pi] == c) ++pi;
      else free_cols.push_back(c);
    }
  }
  FqMatrix k(f_, static_cast<int>(free_cols.size()), cols_);
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    int fc = free_cols[fi];
    k.set(static_cast<int>(fi), fc, 1);
    for (int i = 0; i < r; ++i)
      k.set(static_cast<int>(fi), piv[i], f_->neg(m.at(i, fc)));
  }
  return k;
}

FqMatrix FqMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
  FqMatrix aug(f_, rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
    aug.set(i, cols_ + i, 1);
  }
  int r;
  FqMatrix red = aug.rref(&r);
  if (r < rows_) throw std::domain_error("inverse: singular matrix");
  FqMatrix inv(f_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.set(i, j, red.at(i, cols_ + j));
  return inv;
}

FqMatrix FqMatrix::stacked(const FqMatrix& o) const {
  if (o.rows_ == 0) return *this;
  if (rows_ == 0) return o;
  if (cols_ != o.cols_ || f_ != o.f_) throw std::invalid_argument("stack shape");
  FqMatrix r(f_, rows_ + o.rows_, cols_);
  std::copy(a_.begin(), a_.end(), r.a_.begin());
  std::copy(o.a_.begin(), o.a_.end(), r.a_.begin() + a_.size());
  return r;
}

bool FqMatrix::row_space_contains(const std::vector<uint8_t>& vec) const {
  if (static_cast<int>(vec.size()) != cols_) throw std::invalid_argument("vector length");
  FqMatrix v(f_, 1, cols_);
  for (int j = 0; j < cols_; ++j) v.set(0, j, vec[j]);
  return stacked(v).rank() == rank();
}

std::string FqMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << int(at(i, j));
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

FqMatrix row_space_intersection(const FqMatrix& a, const FqMatrix& b) {
  // Zassenhaus: rref of [[A|A],[B|0]]; rows with zero left half carry the
  // intersection in the right half.
  const FqField* f = a.field();
  int n = a.cols();
  FqMatrix big(f, a.rows() + b.rows(), 2 * n);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < n; ++j) {
      big.set(i, j, a.at(i, j));
      big.set(i, n + j, a.at(i, j));
    }
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < n; ++j) big.set(a.rows() + i, j, b.at(i, j));
  int r;
  FqMatrix red = big.rref(&r);
  std::vector<std::vector<uint8_t>> rows;
  for (int i = 0; i < r; ++i) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j)
      if (red.at(i, j) != 0) left_zero = false;
    if (!left_zero) continue;
    std::vector<uint8_t> row(n);
    bool nonzero = false;
    for (int j = 0; j < n; ++j) {
      row[j] = static_cast<uint8_t>(red.at(i, n + j));
      nonzero |= row[j] != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  FqMatrix out(f, static_cast<int>(rows.size()), n);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < n; ++j) out.set(static_cast<int>(i), j, rows[i][j]);
  int rr;
  return out.rref(&rr);
}

FqMatrix row_space_sum(const FqMatrix& a, const FqMatrix& b) {
  int r;
  FqMatrix red = a.stacked(b).rref(&r);
  FqMatrix out(a.field(), r, a.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, red.at(i, j));
  return out;
}

}  // namespace hf
