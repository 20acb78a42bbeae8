#pragma once

#include "hallfrob/gfq.hpp"

#include <functional>
#include <vector>

namespace hf {

/// k-dimensional subspace of F_q^n, held as its canonical RREF basis matrix
/// (rows = basis vectors).  Two subspaces are equal iff the matrices are.
struct Subspace {
  const FqField* f = nullptr;
  int ambient = 0;
  FqMatrix basis;  // RREF, dim() x ambient

  int dim() const { return basis.rows(); }
  bool operator==(const Subspace& o) const {
    return ambient == o.ambient && basis == o.basis;
  }
  bool contains(const Subspace& o) const;
};

/// All k-dimensional RREF basis matrices of F_q^n, by pivot pattern (pivot
/// column sets in lexicographic order, then free entries counting up).
std::vector<FqMatrix> enum_subspace_bases(const FqField* f, int n, int k);
std::vector<Subspace> enum_subspaces(const FqField* f, int n, int k);

/// n-step partial flag 0 = F_0 <= F_1 <= ... <= F_n = V, stored as the
/// cumulative subspaces F_1..F_n with canonical bases.
struct Flag {
  const FqField* f = nullptr;
  int ambient = 0;
  std::vector<FqMatrix> steps;  // size n, steps.back() = identity basis of V

  int n_steps() const { return static_cast<int>(steps.size()); }
  std::vector<int> type() const;
  bool operator==(const Flag& o) const {
    return ambient == o.ambient && steps == o.steps;
  }
};

/// Every flag with the given dimension type (a_1, ..., a_n), sum = ambient,
/// enumerated top-down by successive subspaces with lifting through the RREF
/// basis as section.
std::vector<Flag> enum_flags(const FqField* f, const std::vector<int>& type);

/// Relative position of a flag pair: the Theta_r matrix
///   a_{ij} = dim( F_i cap F'_j / ((F_{i-1} cap F'_j) + (F_i cap F'_{j-1})) ),
/// computed by exact rank arithmetic.
std::vector<std::vector<int>> relative_position(const Flag& a, const Flag& b);

/// Apply an invertible change of coordinates to every member (g acts on row
/// vectors on the right); bases re-canonicalized.
Flag transform_flag(const Flag& fl, const FqMatrix& g);

}  // namespace hf
