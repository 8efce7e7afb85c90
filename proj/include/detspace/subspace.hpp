#pragma once

#include <string>
#include <vector>

#include "detspace/matrix.hpp"

namespace detspace {

// A subspace of matrices given by an ordered basis M_1..M_d. The basis is
// required to be linearly independent; dependent input is an error, not
// silently reduced. Square in general; rectangular shapes are accepted for
// rank-census work only.
class MatSubspace {
 public:
  MatSubspace(FieldPtr f, unsigned rows, unsigned cols,
              std::vector<Matrix> basis, std::string tag = "");

  static MatSubspace make(const FieldPtr& f, unsigned n,
                          std::vector<Matrix> basis, std::string tag = "");

  const FieldPtr& field() const { return f_; }
  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  unsigned n() const;  // matrix size, square only
  unsigned dim() const { return static_cast<unsigned>(basis_.size()); }
  const std::vector<Matrix>& basis() const { return basis_; }
  const std::string& tag() const { return tag_; }

  // number of elements q^d; throws when it overflows 64 bits
  u64 point_count() const;
  Matrix element(const std::vector<Elt>& coords) const;
  // coordinates of the element with enumeration index i (digits base q)
  std::vector<Elt> coords_at(u64 index) const;
  Matrix element_at(u64 index) const;

  bool contains(const Matrix& a, std::vector<Elt>* coords = nullptr) const;
  bool same_span(const MatSubspace& o) const;

 private:
  FieldPtr f_;
  unsigned rows_, cols_;
  std::vector<Matrix> basis_;
  std::string tag_;
};

// Printed 2-dimensional diagonal pair in M_3(F_2).
MatSubspace ex1();
// Printed 2-dimensional diagonal pair in M_4(F_3).
MatSubspace ex2();
// The 3-dimensional {A, B, C} span in M_3(F_q) built from a cyclic shift B
// with parameter b, C = B^2, and A = diag(0, l, -l) where l = w^2 - w for w
// the smallest-encoding primitive cube root of unity. Requires q = 1 mod 3
// and b a non-cube.
MatSubspace ex3(u64 q, Elt b);
// Block-diagonal dim-d subspace of M_{2d+1}(F_q): i-th basis matrix is
// M_i + N_i with M_i from field_subspace(q,d) and N_i the i-th basis matrix
// of field_subspace(q,d+1).
MatSubspace thm3_7(u64 q, unsigned d);
// Matrices of T_{a,b}(z) = a(s^2-s)(z) + bz on the power basis of a cubic
// extension, a scalar, b trace-zero; 3-dimensional subspace of M_3(F_q).
MatSubspace thm4_1(u64 q);
// Characteristic 2 only: matrices of T_{a,c}(z) = a s^2(z) + (a+c)z on the
// power basis of a quartic extension, a scalar, c trace-zero; 4-dimensional
// subspace of M_4(F_q) containing the identity.
MatSubspace thm4_4(u64 q);
// Regular representation of the degree-t extension on its power basis:
// t-dimensional subspace of M_t(F_q), every nonzero element invertible.
// Basis k is the matrix of multiplication by the k-th power basis element.
MatSubspace field_subspace(const FieldPtr& base, unsigned t);
// View a subspace over an extension L/F_q (one tower level) as a subspace
// over F_q: every basis matrix M and power a^j (j < [L:F_q]) contributes the
// blown-up matrix of a^j M. Dimension multiplies by the degree.
MatSubspace field_reduction(const MatSubspace& sub, const FieldPtr& base);
// basis {C M_i D}; C and D must be invertible
MatSubspace equivalence_transform(const Matrix& c, const MatSubspace& sub,
                                  const Matrix& d);
// basis {A^{-1} M_i}; A must lie in sub and be invertible
MatSubspace translate_to_identity(const Matrix& a, const MatSubspace& sub);

// Predicate a grown subspace must keep at every element.
enum class SpanProperty {
  all_singular,           // det = 0 everywhere
  all_nonzero_invertible  // det != 0 away from the origin
};

struct ExtendOptions {
  u64 budget = 1000;         // candidate attempts
  u64 seed = 1;              // stream seed when no pool is given
  u64 cap = u64(1) << 24;    // enumeration cap on q^d points
  std::vector<Matrix> pool;  // explicit candidates; empty = seeded stream
};

// Greedy growth of sub by candidates that keep the property on the whole
// span; checks the input satisfies it first. Returns the largest subspace
// reached within the budget, always containing sub.
MatSubspace extend_by_property(const MatSubspace& sub, SpanProperty prop,
                               const ExtendOptions& opt);
// extend_by_property with the all-singular predicate
MatSubspace extend_singular(const MatSubspace& sub, const ExtendOptions& opt);

}  // namespace detspace
