#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detspace/field.hpp"

namespace detspace {

// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix(FieldPtr f, unsigned rows, unsigned cols);  // zero-filled

  static Matrix identity(const FieldPtr& f, unsigned n);
  static Matrix diagonal(const FieldPtr& f, const std::vector<Elt>& diag);
  static Matrix from_rows(const FieldPtr& f,
                          const std::vector<std::vector<Elt>>& rows);

  const FieldPtr& field() const { return f_; }
  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Elt at(unsigned i, unsigned j) const { return e_[i * cols_ + j]; }
  void set(unsigned i, unsigned j, Elt v);

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix scaled(Elt c) const;
  Matrix transpose() const;
  std::vector<Elt> mul_vec(const std::vector<Elt>& v) const;
  Elt trace() const;  // square only
  bool is_zero() const;
  // row-major entries as a single vector of length rows*cols
  const std::vector<Elt>& flat() const { return e_; }

 private:
  FieldPtr f_;
  unsigned rows_, cols_;
  std::vector<Elt> e_;
};

// In-place reduced row echelon form on a list of row vectors; returns the
// rank and leaves pivot rows first. Rows may have any common length.
unsigned rref_rows(std::vector<std::vector<Elt>>& rows, const FieldPtr& f);

unsigned rank(const Matrix& a);
Elt det(const Matrix& a);
bool is_invertible(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);
// basis of {x : a x = 0}, vectors of length cols
std::vector<std::vector<Elt>> kernel_basis(const Matrix& a);
Matrix mat_pow(const Matrix& a, unsigned e);
bool is_nilpotent(const Matrix& a);  // a^n = 0 with n the matrix size

std::string render(const Matrix& a);  // "[[0,1],[1,0]]"

}  // namespace detspace
