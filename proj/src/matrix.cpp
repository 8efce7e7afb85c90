#include "detspace/matrix.hpp"

#include <algorithm>

namespace detspace {

Matrix::Matrix(FieldPtr f, unsigned rows, unsigned cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), e_(u64(rows) * cols, 0) {
  require(f_ != nullptr, "matrix needs a field");
  require(rows > 0 && cols > 0, "matrix dimensions must be positive");
}

Matrix Matrix::identity(const FieldPtr& f, unsigned n) {
  Matrix m(f, n, n);
  for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::diagonal(const FieldPtr& f, const std::vector<Elt>& diag) {
  unsigned n = static_cast<unsigned>(diag.size());
  Matrix m(f, n, n);
  for (unsigned i = 0; i < n; ++i) m.set(i, i, diag[i]);
  return m;
}

Matrix Matrix::from_rows(const FieldPtr& f,
                         const std::vector<std::vector<Elt>>& rows) {
  require(!rows.empty() && !rows[0].empty(), "matrix rows must be nonempty");
  Matrix m(f, static_cast<unsigned>(rows.size()),
           static_cast<unsigned>(rows[0].size()));
  for (unsigned i = 0; i < m.rows(); ++i) {
    require(rows[i].size() == rows[0].size(), "ragged matrix rows");
    for (unsigned j = 0; j < m.cols(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void Matrix::set(unsigned i, unsigned j, Elt v) {
  require(i < rows_ && j < cols_, "matrix index out of range");
  require(v < f_->size(), "entry out of range for " + f_->describe());
  e_[i * cols_ + j] = v;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_ && f_->same_as(*o.f_),
          "matrix shape or field mismatch");
  Matrix r(f_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->add(e_[i], o.e_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_ && f_->same_as(*o.f_),
          "matrix shape or field mismatch");
  Matrix r(f_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->sub(e_[i], o.e_[i]);
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(cols_ == o.rows_ && f_->same_as(*o.f_),
          "matrix product shape or field mismatch");
  Matrix r(f_, rows_, o.cols_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned k = 0; k < cols_; ++k) {
      Elt a = at(i, k);
      if (a == 0) continue;
      for (unsigned j = 0; j < o.cols_; ++j)
        r.e_[i * o.cols_ + j] =
            f_->add(r.e_[i * o.cols_ + j], f_->mul(a, o.at(k, j)));
    }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && f_->same_as(*o.f_) &&
         e_ == o.e_;
}

Matrix Matrix::scaled(Elt c) const {
  Matrix r(f_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->mul(e_[i], c);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(f_, cols_, rows_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

std::vector<Elt> Matrix::mul_vec(const std::vector<Elt>& v) const {
  require(v.size() == cols_, "vector length mismatch");
  std::vector<Elt> r(rows_, 0);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < cols_; ++j)
      r[i] = f_->add(r[i], f_->mul(at(i, j), v[j]));
  return r;
}

Elt Matrix::trace() const {
  require(is_square(), "trace of a rectangular matrix");
  Elt t = 0;
  for (unsigned i = 0; i < rows_; ++i) t = f_->add(t, at(i, i));
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](Elt x) { return x == 0; });
}

unsigned rref_rows(std::vector<std::vector<Elt>>& rows, const FieldPtr& f) {
  if (rows.empty()) return 0;
  size_t width = rows[0].size();
  for (const auto& r : rows) require(r.size() == width, "ragged row list");
  unsigned rank = 0;
  for (size_t col = 0; col < width && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Elt il = f->inv(rows[rank][col]);
    for (size_t j = col; j < width; ++j)
      rows[rank][j] = f->mul(rows[rank][j], il);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      Elt c = rows[i][col];
      for (size_t j = col; j < width; ++j)
        rows[i][j] = f->sub(rows[i][j], f->mul(c, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

unsigned rank(const Matrix& a) {
  std::vector<std::vector<Elt>> rows(a.rows());
  for (unsigned i = 0; i < a.rows(); ++i) {
    rows[i].resize(a.cols());
    for (unsigned j = 0; j < a.cols(); ++j) rows[i][j] = a.at(i, j);
  }
  return rref_rows(rows, a.field());
}

Elt det(const Matrix& a) {
  require(a.is_square(), "determinant of a rectangular matrix");
  const FieldPtr& F = a.field();
  unsigned n = a.rows();
  std::vector<std::vector<Elt>> m(n, std::vector<Elt>(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) m[i][j] = a.at(i, j);
  Elt d = 1;
  for (unsigned col = 0; col < n; ++col) {
    unsigned piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      d = F->neg(d);
    }
    d = F->mul(d, m[col][col]);
    Elt il = F->inv(m[col][col]);
    for (unsigned i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      Elt c = F->mul(m[i][col], il);
      for (unsigned j = col; j < n; ++j)
        m[i][j] = F->sub(m[i][j], F->mul(c, m[col][j]));
    }
  }
  return d;
}

bool is_invertible(const Matrix& a) {
  return a.is_square() && det(a) != 0;
}

std::optional<Matrix> inverse(const Matrix& a) {
  require(a.is_square(), "inverse of a rectangular matrix");
  const FieldPtr& F = a.field();
  unsigned n = a.rows();
  // rows augmented with the identity
  std::vector<std::vector<Elt>> m(n, std::vector<Elt>(2 * n, 0));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) m[i][j] = a.at(i, j);
    m[i][n + i] = 1;
  }
  rref_rows(m, F);
  // the augmented block keeps the total rank at n, so singularity shows up
  // as a pivot escaping into the right half: the left block is I iff a is
  // invertible
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (m[i][j] != (i == j ? 1u : 0u)) return std::nullopt;
  Matrix r(F, n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) r.set(i, j, m[i][n + j]);
  return r;
}

std::vector<std::vector<Elt>> kernel_basis(const Matrix& a) {
  const FieldPtr& F = a.field();
  std::vector<std::vector<Elt>> rows(a.rows(), std::vector<Elt>(a.cols()));
  for (unsigned i = 0; i < a.rows(); ++i)
    for (unsigned j = 0; j < a.cols(); ++j) rows[i][j] = a.at(i, j);
  unsigned rk = rref_rows(rows, F);
  // pivot column of each of the first rk rows
  std::vector<int> pivot_of_col(a.cols(), -1);
  for (unsigned i = 0; i < rk; ++i) {
    unsigned j = 0;
    while (rows[i][j] == 0) ++j;
    pivot_of_col[j] = static_cast<int>(i);
  }
  std::vector<std::vector<Elt>> basis;
  for (unsigned free = 0; free < a.cols(); ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<Elt> v(a.cols(), 0);
    v[free] = 1;
    for (unsigned j = 0; j < a.cols(); ++j) {
      int pi = pivot_of_col[j];
      if (pi >= 0) v[j] = F->neg(rows[pi][free]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix mat_pow(const Matrix& a, unsigned e) {
  require(a.is_square(), "power of a rectangular matrix");
  Matrix r = Matrix::identity(a.field(), a.rows());
  Matrix b = a;
  while (e > 0) {
    if (e & 1) r = r * b;
    if (e >>= 1) b = b * b;
  }
  return r;
}

bool is_nilpotent(const Matrix& a) {
  require(a.is_square(), "nilpotency of a rectangular matrix");
  return mat_pow(a, a.rows()).is_zero();
}

std::string render(const Matrix& a) {
  std::string s = "[";
  for (unsigned i = 0; i < a.rows(); ++i) {
    if (i > 0) s += ",";
    s += "[";
    for (unsigned j = 0; j < a.cols(); ++j) {
      if (j > 0) s += ",";
      s += std::to_string(a.at(i, j));
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace detspace
