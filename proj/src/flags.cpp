#include "hallfrob/flags.hpp"

#include <numeric>
#include <stdexcept>

namespace hf {

bool Subspace::contains(const Subspace& o) const {
  return row_space_sum(basis, o.basis).rows() == dim();
}

std::vector<FqMatrix> enum_subspace_bases(const FqField* f, int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("enum_subspace_bases: 0 <= k <= n");
  std::vector<FqMatrix> out;
  if (k == 0) {
    out.emplace_back(f, 0, n);
    return out;
  }
  // Pivot column combinations in lexicographic order.
  std::vector<int> piv(k);
  std::iota(piv.begin(), piv.end(), 0);
  while (true) {
    // Free positions: (r, c) with c > piv[r], c not a pivot column.
    std::vector<std::pair<int, int>> free_pos;
    {
      std::vector<bool> is_piv(n, false);
      for (int c : piv) is_piv[c] = true;
      for (int r = 0; r < k; ++r)
        for (int c = piv[r] + 1; c < n; ++c)
          if (!is_piv[c]) free_pos.emplace_back(r, c);
    }
    long total = 1;
    for (size_t i = 0; i < free_pos.size(); ++i) total *= f->q();
    for (long code = 0; code < total; ++code) {
      FqMatrix m(f, k, n);
      for (int r = 0; r < k; ++r) m.set(r, piv[r], 1);
      long c = code;
      for (auto& [r, col] : free_pos) {
        m.set(r, col, static_cast<int>(c % f->q()));
        c /= f->q();
      }
      out.push_back(std::move(m));
    }
    // next combination
    int i = k - 1;
    while (i >= 0 && piv[i] == n - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

std::vector<Subspace> enum_subspaces(const FqField* f, int n, int k) {
  std::vector<Subspace> out;
  for (auto& b : enum_subspace_bases(f, n, k))
    out.push_back(Subspace{f, n, std::move(b)});
  return out;
}

std::vector<int> Flag::type() const {
  std::vector<int> t(steps.size());
  int prev = 0;
  for (size_t i = 0; i < steps.size(); ++i) {
    t[i] = steps[i].rows() - prev;
    prev = steps[i].rows();
  }
  return t;
}

namespace {

// Flags in an abstract space of dimension d = sum(type).
std::vector<Flag> enum_flags_rec(const FqField* f, const std::vector<int>& type) {
  int n = static_cast<int>(type.size());
  int d = std::accumulate(type.begin(), type.end(), 0);
  std::vector<Flag> out;
  if (n == 1) {
    Flag fl;
    fl.f = f;
    fl.ambient = d;
    fl.steps.push_back(FqMatrix::identity(f, d).rref());
    out.push_back(std::move(fl));
    return out;
  }
  int dsub = d - type.back();
  std::vector<int> sub_type(type.begin(), type.end() - 1);
  auto subs = enum_subspace_bases(f, d, dsub);
  auto inner = enum_flags_rec(f, sub_type);
  for (auto& s : subs) {
    for (auto& in : inner) {
      Flag fl;
      fl.f = f;
      fl.ambient = d;
      fl.steps.reserve(n);
      for (auto& st : in.steps) fl.steps.push_back((st * s).rref());
      fl.steps.push_back(FqMatrix::identity(f, d).rref());
      out.push_back(std::move(fl));
    }
  }
  return out;
}

}  // namespace

std::vector<Flag> enum_flags(const FqField* f, const std::vector<int>& type) {
  for (int a : type)
    if (a < 0) throw std::invalid_argument("enum_flags: negative part");
  return enum_flags_rec(f, type);
}

std::vector<std::vector<int>> relative_position(const Flag& a, const Flag& b) {
  if (a.f != b.f || a.ambient != b.ambient || a.n_steps() != b.n_steps())
    throw std::invalid_argument("relative_position: mismatched ambient data");
  int n = a.n_steps();
  // dims[i][j] = dim(F_i cap F'_j), i, j = 0..n (0 => zero space).
  std::vector<std::vector<int>> dims(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const FqMatrix& A = a.steps[i - 1];
      const FqMatrix& B = b.steps[j - 1];
      dims[i][j] = A.rows() + B.rows() - A.stacked(B).rank();
    }
  std::vector<std::vector<int>> rel(n, std::vector<int>(n, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      rel[i - 1][j - 1] =
          dims[i][j] - dims[i - 1][j] - dims[i][j - 1] + dims[i - 1][j - 1];
  return rel;
}

Flag transform_flag(const Flag& fl, const FqMatrix& g) {
  Flag r;
  r.f = fl.f;
  r.ambient = fl.ambient;
  for (auto& st : fl.steps) r.steps.push_back((st * g).rref());
  return r;
}

}  // namespace hf
