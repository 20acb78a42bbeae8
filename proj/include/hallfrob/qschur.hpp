#pragma once

#include "hallfrob/exactalg.hpp"
#include "hallfrob/flags.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hf {

/// n x n matrix of nonnegative integers; total sum r indexes the GL-orbit of
/// a pair of n-step flags in an r-dimensional space.
struct ThetaMat {
  int n = 0;
  std::vector<int> a;  // row-major

  ThetaMat() = default;
  ThetaMat(int n_, std::vector<int> entries) : n(n_), a(std::move(entries)) {}
  static ThetaMat diag(const std::vector<int>& d);

  int at(int i, int j) const { return a[i * n + j]; }
  void set(int i, int j, int v) { a[i * n + j] = v; }
  int sum() const;
  std::vector<int> row_type() const;
  std::vector<int> col_type() const;
  bool divisible_by(int ell) const;
  ThetaMat divided(int ell) const;
  ThetaMat scaled(int ell) const;
  ThetaMat transposed() const;

  bool operator==(const ThetaMat& o) const { return n == o.n && a == o.a; }
  bool operator<(const ThetaMat& o) const { return a < o.a; }
  std::string str() const;
};

/// All n x n nonnegative matrices with total sum r, lexicographic order.
std::vector<ThetaMat> enum_theta(int n, int r);

/// All (a_1..a_n) in N^n with sum m, lexicographic order.
std::vector<std::vector<int>> compositions(int m, int n);

/// The standard coordinate flag pair with relative position C: basis vectors
/// are indexed by the cells of C, the first flag filters by row index, the
/// second by column index.
std::pair<Flag, Flag> standard_pair(const ThetaMat& C, const FqField* f);

/// c_{A,B}^C = #{F : (F0,F) in O_A, (F,F1) in O_B} for a fixed (F0,F1) in
/// O_C; zero when the orbit types are incompatible.
Int structure_constant(const ThetaMat& A, const ThetaMat& B, const ThetaMat& C,
                       const FqField* f);
/// Same count against an explicitly given base pair.
Int structure_constant_at(const ThetaMat& A, const ThetaMat& B, const Flag& f0,
                          const Flag& f1);

/// Element of the q-Schur algebra S(n, r) over the field f: a finite Z-linear
/// combination of basis elements 1_A, A in Theta_r.
struct SchurElt {
  int n = 0, r = 0;
  const FqField* f = nullptr;
  std::map<ThetaMat, Int> coeff;

  static SchurElt basis(int n, int r, const FqField* f, const ThetaMat& A);
  static SchurElt unit(int n, int r, const FqField* f);
  void add_term(const ThetaMat& A, const Int& c);
  bool operator==(const SchurElt& o) const;
  std::string str() const;
};

SchurElt schur_add(const SchurElt& x, const SchurElt& y);
/// Convolution product, extended bilinearly from 1_A . 1_B.
SchurElt schur_multiply(const SchurElt& x, const SchurElt& y);

/// iota^*: basis-wise 1_{ell D'} -> 1_{D'}, else 0; lands in S(n, r/ell... )
/// over F_{q^ell}.  The input must live at size r = ell * r'.
SchurElt frobenius_restrict(const SchurElt& x, int ell);

struct FrobCheckRow {
  ThetaMat A, B, Cp;     // A, B in Theta_{ell r}; Cp in Theta_r
  Int count_w;           // c_{A,B}^{ell Cp} over F_q
  Int count_t;           // T-fixed points of S_{A,B}^{ell Cp}
  Int count_v;           // c_{A',B'}^{Cp} over F_{q^ell} (0 if not divisible)
  bool pass_congruence;  // count_w == count_v mod Phi_ell(q)
  bool pass_tfixed;      // count_t == count_v and count_w == count_t mod s
};

struct FrobCheckReport {
  int n = 0, r = 0, ell = 0, q = 0;
  Int s;  // Phi_ell(q)
  long triples_checked = 0;
  bool pass = false;
  std::vector<FrobCheckRow> rows;        // every checked triple
  std::vector<FrobCheckRow> violations;  // subset with a failed check
};

/// Verifies the quantum Frobenius congruences for the q-Schur algebra:
/// for all A, B in Theta_{ell r} and C' in Theta_r (compatible types),
///   c_{A,B}^{ell C'} == c_{A',B'}^{C'} mod Phi_ell(q)   if A = ell A', B = ell B',
///   c_{A,B}^{ell C'} == 0 mod Phi_ell(q)                otherwise,
/// together with the pointwise T-fixed-point congruence
///   |S_{A,B}^{ell C'}| == |(S_{A,B}^{ell C'})^T| mod Phi_ell(q).
FrobCheckReport check_frobenius_hom(int n, int r, int ell, int q,
                                    bool collect_rows = true);

struct InterpolationResult {
  IntPoly poly;           // structure polynomial in q
  bool integral = false;  // all Lagrange coefficients integers
  bool validated = false; // held-out evaluations match direct counts
  std::vector<int> sample_qs;
  std::vector<int> heldout_qs;
  std::vector<std::pair<Int, Int>> heldout_results;  // (predicted, counted)
};

/// Lagrange interpolation of q -> c_{A,B}^C over the sample prime powers,
/// with exact rational arithmetic; validated against the held-out list.
InterpolationResult interpolate_structure_poly(const ThetaMat& A,
                                               const ThetaMat& B,
                                               const ThetaMat& C,
                                               const std::vector<int>& sample_qs,
                                               const std::vector<int>& heldout_qs);

}  // namespace hf
