#include "hallfrob/qschur.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hf {

ThetaMat ThetaMat::diag(const std::vector<int>& d) {
  ThetaMat m(static_cast<int>(d.size()), std::vector<int>(d.size() * d.size(), 0));
  for (size_t i = 0; i < d.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i), d[i]);
  return m;
}

int ThetaMat::sum() const { return std::accumulate(a.begin(), a.end(), 0); }

std::vector<int> ThetaMat::row_type() const {
  std::vector<int> t(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i] += at(i, j);
  return t;
}

std::vector<int> ThetaMat::col_type() const {
  std::vector<int> t(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[j] += at(i, j);
  return t;
}

bool ThetaMat::divisible_by(int ell) const {
  for (int v : a)
    if (v % ell != 0) return false;
  return true;
}

ThetaMat ThetaMat::divided(int ell) const {
  ThetaMat m = *this;
  for (int& v : m.a) v /= ell;
  return m;
}

ThetaMat ThetaMat::scaled(int ell) const {
  ThetaMat m = *this;
  for (int& v : m.a) v *= ell;
  return m;
}

ThetaMat ThetaMat::transposed() const {
  ThetaMat m(n, std::vector<int>(n * n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(j, i, at(i, j));
  return m;
}

std::string ThetaMat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n; ++i) {
    os << (i ? ";" : "");
    for (int j = 0; j < n; ++j) os << (j ? "," : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

std::vector<std::vector<int>> compositions(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (n >= 1) rec(0, m);
  return out;
}

std::vector<ThetaMat> enum_theta(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("enum_theta: n >= 1, r >= 0");
  auto flat = compositions(r, n * n);
  std::vector<ThetaMat> out;
  out.reserve(flat.size());
  for (auto& f : flat) out.emplace_back(n, f);
  return out;
}

std::pair<Flag, Flag> standard_pair(const ThetaMat& C, const FqField* f) {
  int r = C.sum();
  int n = C.n;
  // Basis cells ordered lexicographically by (i, j); the first flag filters
  // by i, the second by j.
  std::vector<std::pair<int, int>> cell_of_coord;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int t = 0; t < C.at(i, j); ++t) cell_of_coord.emplace_back(i, j);
  auto build = [&](bool by_row) {
    Flag fl;
    fl.f = f;
    fl.ambient = r;
    for (int s = 0; s < n; ++s) {
      std::vector<int> idx;
      for (int k = 0; k < r; ++k) {
        int key = by_row ? cell_of_coord[k].first : cell_of_coord[k].second;
        if (key <= s) idx.push_back(k);
      }
      FqMatrix m(f, static_cast<int>(idx.size()), r);
      for (size_t row = 0; row < idx.size(); ++row) m.set(static_cast<int>(row), idx[row], 1);
      fl.steps.push_back(m.rref());
    }
    return fl;
  };
  return {build(true), build(false)};
}

Int structure_constant_at(const ThetaMat& A, const ThetaMat& B, const Flag& f0,
                          const Flag& f1) {
  std::vector<int> mid_type = A.col_type();
  if (mid_type != B.row_type()) return 0;
  Int count = 0;
  for (auto& fl : enum_flags(f0.f, mid_type)) {
    auto ra = relative_position(f0, fl);
    bool okA = true;
    for (int i = 0; i < A.n && okA; ++i)
      for (int j = 0; j < A.n && okA; ++j)
        if (ra[i][j] != A.at(i, j)) okA = false;
    if (!okA) continue;
    auto rb = relative_position(fl, f1);
    bool okB = true;
    for (int i = 0; i < B.n && okB; ++i)
      for (int j = 0; j < B.n && okB; ++j)
        if (rb[i][j] != B.at(i, j)) okB = false;
    if (okB) ++count;
  }
  return count;
}

Int structure_constant(const ThetaMat& A, const ThetaMat& B, const ThetaMat& C,
                       const FqField* f) {
  if (A.col_type() != B.row_type() || C.row_type() != A.row_type() ||
      C.col_type() != B.col_type())
    return 0;
  auto [f0, f1] = standard_pair(C, f);
  return structure_constant_at(A, B, f0, f1);
}

SchurElt SchurElt::basis(int n, int r, const FqField* f, const ThetaMat& A) {
  SchurElt e;
  e.n = n;
  e.r = r;
  e.f = f;
  e.coeff[A] = 1;
  return e;
}

SchurElt SchurElt::unit(int n, int r, const FqField* f) {
  SchurElt e;
  e.n = n;
  e.r = r;
  e.f = f;
  for (auto& d : compositions(r, n)) e.coeff[ThetaMat::diag(d)] = 1;
  return e;
}

void SchurElt::add_term(const ThetaMat& A, const Int& c) {
  auto it = coeff.find(A);
  if (it == coeff.end()) {
    if (c != 0) coeff[A] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) coeff.erase(it);
}

bool SchurElt::operator==(const SchurElt& o) const {
  return n == o.n && r == o.r && f == o.f && coeff == o.coeff;
}

std::string SchurElt::str() const {
  if (coeff.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : coeff) {
    if (!first) os << " + ";
    if (c != 1) os << c.get_str() << "*";
    os << "1_" << m.str();
    first = false;
  }
  return os.str();
}

SchurElt schur_add(const SchurElt& x, const SchurElt& y) {
  if (x.n != y.n || x.r != y.r || x.f != y.f)
    throw std::invalid_argument("schur_add: mismatched parameters");
  SchurElt out = x;
  for (auto& [m, c] : y.coeff) out.add_term(m, c);
  return out;
}

SchurElt schur_multiply(const SchurElt& x, const SchurElt& y) {
  if (x.n != y.n || x.r != y.r || x.f != y.f)
    throw std::invalid_argument("schur_multiply: mismatched parameters");
  SchurElt out;
  out.n = x.n;
  out.r = x.r;
  out.f = x.f;
  // 1_A . 1_B = sum_C c_{A,B}^C 1_C, with C constrained by orbit bookkeeping.
  auto thetas = enum_theta(x.n, x.r);
  for (auto& [A, ca] : x.coeff)
    for (auto& [B, cb] : y.coeff) {
      if (A.col_type() != B.row_type()) continue;
      for (auto& C : thetas) {
        if (C.row_type() != A.row_type() || C.col_type() != B.col_type()) continue;
        Int c = structure_constant(A, B, C, x.f);
        if (c != 0) out.add_term(C, ca * cb * c);
      }
    }
  return out;
}

SchurElt frobenius_restrict(const SchurElt& x, int ell) {
  if (ell < 1 || x.r % ell != 0)
    throw std::invalid_argument("frobenius_restrict: size must be a multiple of ell");
  SchurElt out;
  out.n = x.n;
  out.r = x.r / ell;
  out.f = FqField::get(x.f->p(), x.f->e() * ell);
  for (auto& [D, c] : x.coeff)
    if (D.divisible_by(ell)) out.add_term(D.divided(ell), c);
  return out;
}

namespace {

/// Restriction of scalars F_{q^ell}^r -> F_q^{ell r} with the power basis of
/// the primitive element; provides vector/flag transport and the T-action.
struct ScalarRestriction {
  const FqField* big;    // F_{q^ell}
  const FqField* small;  // F_q
  int ell;
  std::vector<int> basis;                  // power basis g^0..g^{ell-1} in big
  std::vector<std::vector<uint8_t>> coords;  // element of big -> small coords

  ScalarRestriction(const FqField* big_, const FqField* small_)
      : big(big_), small(small_) {
    ell = big->e() / small->e();
    int g = big->primitive();
    basis.resize(ell);
    for (int u = 0; u < ell; ++u) basis[u] = big->pow(g, u);
    coords.assign(big->q(), {});
    // Enumerate all coordinate tuples; the map is a bijection.
    std::vector<uint8_t> tup(ell, 0);
    long total = 1;
    for (int u = 0; u < ell; ++u) total *= small->q();
    for (long code = 0; code < total; ++code) {
      long c = code;
      int val = 0;
      for (int u = 0; u < ell; ++u) {
        tup[u] = static_cast<uint8_t>(c % small->q());
        c /= small->q();
        val = big->add(val, big->mul(embed(*small, tup[u], *big), basis[u]));
      }
      coords[val] = tup;
    }
  }

  std::vector<uint8_t> restrict_vector(const FqMatrix& vrow, int row) const {
    int r = vrow.cols();
    std::vector<uint8_t> w(r * ell, 0);
    for (int j = 0; j < r; ++j) {
      const auto& cs = coords[vrow.at(row, j)];
      for (int u = 0; u < ell; ++u) w[j * ell + u] = cs[u];
    }
    return w;
  }

  /// Expand a big-field subspace basis into the small field (dim times ell).
  FqMatrix restrict_subspace(const FqMatrix& basis_rows) const {
    int r = basis_rows.cols();
    FqMatrix out(small, basis_rows.rows() * ell, r * ell);
    int outrow = 0;
    for (int i = 0; i < basis_rows.rows(); ++i)
      for (int u = 0; u < ell; ++u) {
        // beta_u * row_i, restricted.
        FqMatrix scaledrow(big, 1, r);
        for (int j = 0; j < r; ++j)
          scaledrow.set(0, j, big->mul(basis[u], basis_rows.at(i, j)));
        auto w = restrict_vector(scaledrow, 0);
        for (int j = 0; j < r * ell; ++j) out.set(outrow, j, w[j]);
        ++outrow;
      }
    return out.rref();
  }

  Flag restrict_flag(const Flag& fl) const {
    Flag out;
    out.f = small;
    out.ambient = fl.ambient * ell;
    for (auto& st : fl.steps) out.steps.push_back(restrict_subspace(st));
    return out;
  }

  /// Right-action matrix of multiplication by the primitive element g on
  /// F_q^{ell r} (row-vector convention).
  FqMatrix t_generator_matrix(int r) const {
    FqMatrix m(small, r * ell, r * ell);
    int g = big->primitive();
    for (int j = 0; j < r; ++j)
      for (int u = 0; u < ell; ++u) {
        int img = big->mul(g, basis[u]);
        const auto& cs = coords[img];
        for (int u2 = 0; u2 < ell; ++u2) m.set(j * ell + u, j * ell + u2, cs[u2]);
      }
    return m;
  }
};

bool flag_stable_under(const Flag& fl, const FqMatrix& m) {
  for (auto& st : fl.steps) {
    if (st.rows() == 0) continue;
    FqMatrix img = st * m;
    if (st.stacked(img).rank() != st.rows()) return false;
  }
  return true;
}

struct PairKey {
  std::vector<int> a, b;
  bool operator<(const PairKey& o) const {
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
};

}  // namespace

FrobCheckReport check_frobenius_hom(int n, int r, int ell, int q, bool collect_rows) {
  if (ell < 2) throw std::invalid_argument("check_frobenius_hom: ell >= 2");
  FrobCheckReport rep;
  rep.n = n;
  rep.r = r;
  rep.ell = ell;
  rep.q = q;
  rep.s = cyclotomic_poly(ell).eval(q);
  const FqField* fq = FqField::from_q(q);
  const FqField* fql = FqField::get(fq->p(), fq->e() * ell);
  ScalarRestriction res(fql, fq);
  FqMatrix tgen = res.t_generator_matrix(r);

  auto thetas_big = enum_theta(n, ell * r);
  auto thetas_small = enum_theta(n, r);
  rep.pass = true;

  for (auto& Cp : thetas_small) {
    auto [g0, g1] = standard_pair(Cp, fql);
    Flag f0 = res.restrict_flag(g0);
    Flag f1 = res.restrict_flag(g1);
    {
      auto rel = relative_position(f0, f1);
      ThetaMat check(n, std::vector<int>(n * n, 0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) check.set(i, j, rel[i][j]);
      if (!(check == Cp.scaled(ell)))
        throw std::logic_error("restricted standard pair has wrong relative position");
    }
    // V-side structure constants for this base pair.
    std::map<PairKey, Int> vcount;
    for (auto& tau : compositions(r, n))
      for (auto& fl : enum_flags(fql, tau)) {
        auto ra = relative_position(g0, fl);
        auto rb = relative_position(fl, g1);
        PairKey k;
        for (auto& row : ra) for (int v : row) k.a.push_back(v);
        for (auto& row : rb) for (int v : row) k.b.push_back(v);
        vcount[k] += 1;
      }
    // W-side counts and T-fixed counts.
    std::map<PairKey, Int> wcount, tcount;
    for (auto& tau : compositions(ell * r, n))
      for (auto& fl : enum_flags(fq, tau)) {
        auto ra = relative_position(f0, fl);
        auto rb = relative_position(fl, f1);
        PairKey k;
        for (auto& row : ra) for (int v : row) k.a.push_back(v);
        for (auto& row : rb) for (int v : row) k.b.push_back(v);
        wcount[k] += 1;
        if (flag_stable_under(fl, tgen)) tcount[k] += 1;
      }
    // All type-compatible (A, B).
    std::vector<int> rowA = Cp.scaled(ell).row_type();
    std::vector<int> colB = Cp.scaled(ell).col_type();
    for (auto& A : thetas_big) {
      if (A.row_type() != rowA) continue;
      for (auto& B : thetas_big) {
        if (B.col_type() != colB || A.col_type() != B.row_type()) continue;
        PairKey k;
        k.a = A.a;
        k.b = B.a;
        Int cw = wcount.count(k) ? wcount[k] : Int(0);
        Int ct = tcount.count(k) ? tcount[k] : Int(0);
        Int cv = 0;
        if (A.divisible_by(ell) && B.divisible_by(ell)) {
          PairKey kv;
          kv.a = A.divided(ell).a;
          kv.b = B.divided(ell).a;
          cv = vcount.count(kv) ? vcount[kv] : Int(0);
        }
        FrobCheckRow row{A, B, Cp, cw, ct, cv, false, false};
        row.pass_congruence = ((cw - cv) % rep.s == 0);
        row.pass_tfixed = (ct == cv) && ((cw - ct) % rep.s == 0);
        ++rep.triples_checked;
        if (!row.pass_congruence || !row.pass_tfixed) {
          rep.pass = false;
          rep.violations.push_back(row);
        }
        if (collect_rows) rep.rows.push_back(std::move(row));
      }
    }
  }
  return rep;
}

InterpolationResult interpolate_structure_poly(const ThetaMat& A,
                                               const ThetaMat& B,
                                               const ThetaMat& C,
                                               const std::vector<int>& sample_qs,
                                               const std::vector<int>& heldout_qs) {
  InterpolationResult out;
  out.sample_qs = sample_qs;
  out.heldout_qs = heldout_qs;
  size_t m = sample_qs.size();
  std::vector<Rat> xs(m), ys(m);
  for (size_t i = 0; i < m; ++i) {
    xs[i] = Rat(sample_qs[i]);
    ys[i] = Rat(structure_constant(A, B, C, FqField::from_q(sample_qs[i])));
  }
  // Newton's divided differences, then expand.
  std::vector<Rat> dd = ys;
  for (size_t k = 1; k < m; ++k)
    for (size_t i = m - 1; i >= k; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
      if (i == k) break;
    }
  std::vector<Rat> poly{dd.empty() ? Rat(0) : dd[m - 1]};
  for (int i = static_cast<int>(m) - 2; i >= 0; --i) {
    // poly = poly * (x - xs[i]) + dd[i]
    std::vector<Rat> next(poly.size() + 1, Rat(0));
    for (size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * xs[i];
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  out.integral = true;
  std::vector<Int> coeffs;
  for (auto& c : poly) {
    Rat cc = c;
    cc.canonicalize();
    if (cc.get_den() != 1) out.integral = false;
    coeffs.push_back(cc.get_num());
  }
  out.poly = IntPoly(coeffs);
  out.validated = out.integral;
  for (int hq : heldout_qs) {
    Int predicted = out.poly.eval(hq);
    Int counted = structure_constant(A, B, C, FqField::from_q(hq));
    out.heldout_results.emplace_back(predicted, counted);
    if (predicted != counted) out.validated = false;
  }
  return out;
}

}  // namespace hf
