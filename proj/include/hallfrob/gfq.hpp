#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hf {

/// Explicit finite field F_{p^e} at desk scale (q <= cap, default 64).
/// Elements are indices 0..q-1 encoding coordinate vectors over F_p in base p
/// (index = sum c_i p^i, c_i the coefficient of t^i).  The modulus is the
/// lexicographically least monic irreducible of degree e, "least" meaning the
/// smallest index of its lower-coefficient vector; this is trivial to
/// recompute and reproducible across runs.  Compatibility between towers
/// comes from explicitly computed embedding maps, not a global convention.
class FqField {
public:
  static const FqField* get(int p, int e, int cap = 64);
  /// Parse a prime power q = p^e.
  static const FqField* from_q(int q, int cap = 64);

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int a, long k) const;
  /// a^p (the arithmetic Frobenius).
  int frob(int a) const { return frob_[a]; }
  /// a^{q0} where q0 = p^k is a power of the characteristic.
  int frob_pow(int a, long q0) const;
  int from_int(long n) const;  // image of the rational integer n
  /// Smallest element generating the multiplicative group.
  int primitive() const { return primitive_; }
  /// Multiplicative order (0 has order 0 by convention).
  int mult_order(int a) const;

  /// Embedding table into a super-field (same p, e | target.e); image of the
  /// source generator is the least root of the source modulus in the target.
  const std::vector<int>& embedding_into(const FqField& target) const;

  std::string str() const;

private:
  FqField(int p, int e, int cap);
  int p_, e_, q_;
  std::vector<int> modulus_;  // c_0..c_e with c_e = 1
  std::vector<int> add_, mul_, neg_, inv_, frob_;
  int primitive_;
  mutable std::vector<std::pair<const FqField*, std::vector<int>>> embed_cache_;
};

/// Embed an element of F_{p^a} into F_{p^b} (a | b).
int embed(const FqField& src, int x, const FqField& dst);

/// Inverse of the embedding; throws if x is not in the image.
int unembed(const FqField& src, int x, const FqField& dst);

/// Matrix over an explicit finite field; row-major entries.
class FqMatrix {
public:
  FqMatrix() = default;
  FqMatrix(const FqField* f, int rows, int cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static FqMatrix identity(const FqField* f, int n);

  const FqField* field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int r, int c) const { return a_[r * cols_ + c]; }
  void set(int r, int c, int v) { a_[r * cols_ + c] = v; }
  const std::vector<uint8_t>& data() const { return a_; }

  bool operator==(const FqMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  FqMatrix operator*(const FqMatrix& o) const;
  FqMatrix operator+(const FqMatrix& o) const;
  FqMatrix transpose() const;
  FqMatrix map_entries(const FqField* dst) const;  // entrywise embedding

  /// Reduced row echelon form; returns rank and pivot columns.
  FqMatrix rref(int* rank = nullptr, std::vector<int>* pivots = nullptr) const;
  int rank() const;
  /// Basis of the right kernel, as rows.
  FqMatrix kernel() const;
  /// Inverse of a square invertible matrix; throws if singular.
  FqMatrix inverse() const;

  /// Rows of o appended below.
  FqMatrix stacked(const FqMatrix& o) const;
  /// Row-space membership of a vector (length cols).
  bool row_space_contains(const std::vector<uint8_t>& vec) const;

  std::string str() const;

private:
  const FqField* f_ = nullptr;
  int rows_ = 0, cols_ = 0;
  std::vector<uint8_t> a_;
};

/// Basis (in RREF) of the intersection of two row spaces (Zassenhaus).
FqMatrix row_space_intersection(const FqMatrix& a, const FqMatrix& b);
/// RREF basis of the sum of two row spaces.
FqMatrix row_space_sum(const FqMatrix& a, const FqMatrix& b);

bool is_prime(int n);
/// Decompose a prime power q = p^e; returns false if q is not one.
bool prime_power(int q, int* p, int* e);

}  // namespace hf
