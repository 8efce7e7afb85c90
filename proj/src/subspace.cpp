#include "detspace/subspace.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace detspace {

namespace {

std::vector<std::vector<Elt>> flatten_basis(const std::vector<Matrix>& basis) {
  std::vector<std::vector<Elt>> rows;
  rows.reserve(basis.size());
  for (const Matrix& m : basis) rows.push_back(m.flat());
  return rows;
}

// matrix of multiplication by beta on the power basis of ext over its base
Matrix mult_matrix(const FieldPtr& ext, Elt beta) {
  unsigned s = ext->degree();
  Matrix m(ext->base() ? ext->base() : ext, s, s);
  if (ext->is_prime_field()) {
    m.set(0, 0, beta);
    return m;
  }
  u64 alpha = ext->base()->size();  // encoding of the generator
  for (unsigned c = 0; c < s; ++c) {
    Elt img = ext->mul(beta, ext->pow(alpha, c));
    std::vector<Elt> d = ext->coeffs(img);
    for (unsigned r = 0; r < s; ++r) m.set(r, c, d[r]);
  }
  return m;
}

// matrix of an additive map on the power basis
Matrix map_matrix(const FieldPtr& ext, const std::function<Elt(Elt)>& t) {
  unsigned s = ext->degree();
  Matrix m(ext->base(), s, s);
  u64 alpha = ext->base()->size();
  for (unsigned c = 0; c < s; ++c) {
    std::vector<Elt> d = ext->coeffs(t(ext->pow(alpha, c)));
    for (unsigned r = 0; r < s; ++r) m.set(r, c, d[r]);
  }
  return m;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (unsigned i = 0; i < a.rows(); ++i)
    for (unsigned j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
  for (unsigned i = 0; i < b.rows(); ++i)
    for (unsigned j = 0; j < b.cols(); ++j)
      m.set(a.rows() + i, a.cols() + j, b.at(i, j));
  return m;
}

}  // namespace

MatSubspace::MatSubspace(FieldPtr f, unsigned rows, unsigned cols,
                         std::vector<Matrix> basis, std::string tag)
    : f_(std::move(f)), rows_(rows), cols_(cols), basis_(std::move(basis)),
      tag_(std::move(tag)) {
  require(!basis_.empty(), "a subspace needs at least one basis matrix");
  for (const Matrix& m : basis_)
    require(m.rows() == rows_ && m.cols() == cols_ &&
                m.field()->same_as(*f_),
            "basis matrix shape or field mismatch");
  std::vector<std::vector<Elt>> rows_v = flatten_basis(basis_);
  require(rref_rows(rows_v, f_) == basis_.size(),
          "basis matrices are linearly dependent");
}

MatSubspace MatSubspace::make(const FieldPtr& f, unsigned n,
                              std::vector<Matrix> basis, std::string tag) {
  return MatSubspace(f, n, n, std::move(basis), std::move(tag));
}

unsigned MatSubspace::n() const {
  require(is_square(), "square subspace required");
  return rows_;
}

u64 MatSubspace::point_count() const {
  u64 q = f_->size(), total = 1;
  for (unsigned i = 0; i < dim(); ++i) {
    require(total <= std::numeric_limits<u64>::max() / q,
            "element count overflows 64 bits");
    total *= q;
  }
  return total;
}

Matrix MatSubspace::element(const std::vector<Elt>& coords) const {
  require(coords.size() == dim(), "one coordinate per basis matrix required");
  Matrix acc(f_, rows_, cols_);
  for (unsigned i = 0; i < dim(); ++i)
    if (coords[i] != 0) acc = acc + basis_[i].scaled(coords[i]);
  return acc;
}

std::vector<Elt> MatSubspace::coords_at(u64 index) const {
  u64 q = f_->size();
  std::vector<Elt> c(dim());
  for (unsigned i = 0; i < dim(); ++i) {
    c[i] = index % q;
    index /= q;
  }
  require(index == 0, "element index out of range");
  return c;
}

Matrix MatSubspace::element_at(u64 index) const {
  return element(coords_at(index));
}

bool MatSubspace::contains(const Matrix& a, std::vector<Elt>* coords) const {
  require(a.rows() == rows_ && a.cols() == cols_ && a.field()->same_as(*f_),
          "matrix shape or field mismatch");
  // solve sum x_i M_i = a cell-by-cell
  size_t cells = a.flat().size();
  std::vector<std::vector<Elt>> sys(cells, std::vector<Elt>(dim() + 1));
  for (size_t k = 0; k < cells; ++k) {
    for (unsigned i = 0; i < dim(); ++i) sys[k][i] = basis_[i].flat()[k];
    sys[k][dim()] = a.flat()[k];
  }
  unsigned rk = rref_rows(sys, f_);
  std::vector<Elt> sol(dim(), 0);
  for (unsigned i = 0; i < rk; ++i) {
    unsigned j = 0;
    while (sys[i][j] == 0) ++j;
    if (j == dim()) return false;  // pivot in the augmented column
    sol[j] = sys[i][dim()];
  }
  if (coords) *coords = std::move(sol);
  return true;
}

bool MatSubspace::same_span(const MatSubspace& o) const {
  if (dim() != o.dim() || rows_ != o.rows_ || cols_ != o.cols_ ||
      !f_->same_as(*o.f_))
    return false;
  std::vector<std::vector<Elt>> a = flatten_basis(basis_);
  std::vector<std::vector<Elt>> b = flatten_basis(o.basis_);
  rref_rows(a, f_);
  rref_rows(b, f_);
  return a == b;
}

MatSubspace ex1() {
  FieldPtr f = Field::prime_field(2);
  return MatSubspace::make(
      f, 3,
      {Matrix::diagonal(f, {1, 1, 0}), Matrix::diagonal(f, {0, 1, 1})},
      "ex1");
}

MatSubspace ex2() {
  FieldPtr f = Field::prime_field(3);
  return MatSubspace::make(
      f, 4,
      {Matrix::diagonal(f, {1, 1, 1, 0}), Matrix::diagonal(f, {2, 1, 0, 1})},
      "ex2");
}

MatSubspace ex3(u64 q, Elt b) {
  FieldPtr f = Field::of_order(q);
  require(q % 3 == 1,
          "q = 1 mod 3 required: the construction needs cube roots of unity");
  require(b != 0 && b < q, "b must be a nonzero field element");
  require(f->pow(b, (q - 1) / 3) != 1, "b must be a non-cube");
  Elt omega = 0;
  for (Elt e = 2; e < q; ++e)
    if (f->pow(e, 3) == 1 && e != 1) {
      omega = e;
      break;
    }
  Elt lambda = f->sub(f->mul(omega, omega), omega);
  Matrix a = Matrix::diagonal(f, {0, lambda, f->neg(lambda)});
  Matrix bm = Matrix::from_rows(f, {{0, 1, 0}, {0, 0, 1}, {b, 0, 0}});
  Matrix c = bm * bm;
  return MatSubspace::make(f, 3, {a, bm, c}, "ex3");
}

MatSubspace thm3_7(u64 q, unsigned d) {
  require(d >= 1, "dimension must be positive");
  FieldPtr f = Field::of_order(q);
  MatSubspace u = field_subspace(f, d);
  MatSubspace v = field_subspace(f, d + 1);
  std::vector<Matrix> basis;
  for (unsigned i = 0; i < d; ++i)
    basis.push_back(block_diag(u.basis()[i], v.basis()[i]));
  return MatSubspace::make(f, 2 * d + 1, std::move(basis), "thm3_7");
}

MatSubspace thm4_1(u64 q) {
  FieldPtr f = Field::of_order(q);
  FieldPtr e = Field::extension_of(f, 3);
  std::vector<Matrix> basis;
  basis.push_back(map_matrix(e, [&](Elt z) {
    return e->sub(e->frobenius(z, 2), e->frobenius(z, 1));
  }));
  for (Elt t : e->trace_zero_basis()) basis.push_back(mult_matrix(e, t));
  return MatSubspace::make(f, 3, std::move(basis), "thm4_1");
}

MatSubspace thm4_4(u64 q) {
  FieldPtr f = Field::of_order(q);
  require(f->characteristic() == 2, "characteristic 2 required");
  FieldPtr e = Field::extension_of(f, 4);
  std::vector<Matrix> basis;
  basis.push_back(map_matrix(
      e, [&](Elt z) { return e->add(e->frobenius(z, 2), z); }));
  for (Elt t : e->trace_zero_basis()) basis.push_back(mult_matrix(e, t));
  MatSubspace sub = MatSubspace::make(f, 4, std::move(basis), "thm4_4");
  require(sub.contains(Matrix::identity(f, 4)),
          "identity missing from the span (unreachable: tr(1)=0 here)");
  return sub;
}

MatSubspace field_subspace(const FieldPtr& base, unsigned t) {
  require(t >= 1, "extension degree must be positive");
  FieldPtr e = Field::extension_of(base, t);
  std::vector<Matrix> basis;
  if (t == 1) {
    basis.push_back(Matrix::identity(base, 1));
    return MatSubspace::make(base, 1, std::move(basis), "field");
  }
  u64 alpha = base->size();
  for (unsigned j = 0; j < t; ++j)
    basis.push_back(mult_matrix(e, e->pow(alpha, j)));
  return MatSubspace::make(base, t, std::move(basis), "field");
}

MatSubspace field_reduction(const MatSubspace& sub, const FieldPtr& base) {
  const FieldPtr& l = sub.field();
  require(!l->is_prime_field() && l->base()->same_as(*base),
          "subspace field must be a one-step extension of the target field");
  unsigned s = l->degree();
  u64 alpha = base->size();
  auto blowup = [&](const Matrix& m) {
    Matrix big(base, m.rows() * s, m.cols() * s);
    for (unsigned r = 0; r < m.rows(); ++r)
      for (unsigned c = 0; c < m.cols(); ++c) {
        Elt entry = m.at(r, c);
        if (entry == 0) continue;
        for (unsigned w = 0; w < s; ++w) {
          std::vector<Elt> col = l->coeffs(l->mul(entry, l->pow(alpha, w)));
          for (unsigned u = 0; u < s; ++u)
            big.set(r * s + u, c * s + w, col[u]);
        }
      }
    return big;
  };
  std::vector<Matrix> basis;
  for (const Matrix& m : sub.basis())
    for (unsigned j = 0; j < s; ++j)
      basis.push_back(blowup(m.scaled(l->pow(alpha, j))));
  return MatSubspace(base, sub.rows() * s, sub.cols() * s, std::move(basis),
                     sub.tag().empty() ? "reduce" : sub.tag() + ":reduce");
}

MatSubspace equivalence_transform(const Matrix& c, const MatSubspace& sub,
                                  const Matrix& d) {
  require(is_invertible(c) && is_invertible(d),
          "equivalence needs invertible outer factors");
  std::vector<Matrix> basis;
  for (const Matrix& m : sub.basis()) basis.push_back(c * m * d);
  return MatSubspace(sub.field(), sub.rows(), sub.cols(), std::move(basis),
                     sub.tag());
}

MatSubspace translate_to_identity(const Matrix& a, const MatSubspace& sub) {
  require(sub.contains(a), "translation matrix must lie in the subspace");
  auto ai = inverse(a);
  require(ai.has_value(), "translation matrix must be invertible");
  std::vector<Matrix> basis;
  for (const Matrix& m : sub.basis()) basis.push_back(*ai * m);
  return MatSubspace(sub.field(), sub.rows(), sub.cols(), std::move(basis),
                     sub.tag());
}

namespace {

bool span_keeps_property(const MatSubspace& sub, const Matrix& x,
                         SpanProperty prop) {
  // elements e + sx over all e in sub, s != 0
  u64 q = sub.field()->size();
  u64 total = sub.point_count();
  for (u64 idx = 0; idx < total; ++idx) {
    Matrix e = sub.element_at(idx);
    for (Elt s = 1; s < q; ++s) {
      Elt dv = det(e + x.scaled(s));
      if (prop == SpanProperty::all_singular ? dv != 0 : dv == 0) return false;
    }
  }
  return true;
}

}  // namespace

MatSubspace extend_by_property(const MatSubspace& sub, SpanProperty prop,
                               const ExtendOptions& opt) {
  require(sub.is_square(), "square subspace required");
  u64 q = sub.field()->size();
  require(sub.point_count() <= opt.cap, "enumeration cap exceeded");
  u64 total = sub.point_count();
  for (u64 idx = 0; idx < total; ++idx) {
    Elt dv = det(sub.element_at(idx));
    bool bad = prop == SpanProperty::all_singular
                   ? dv != 0
                   : (dv == 0 && idx != 0);
    require(!bad, "input subspace does not satisfy the required property");
  }
  MatSubspace cur = sub;
  SeededRng rng(opt.seed);
  unsigned n = sub.n();
  for (u64 step = 0; step < opt.budget; ++step) {
    // growing by one dimension multiplies the span size by q
    if (cur.point_count() > opt.cap / q) break;
    Matrix x(sub.field(), n, n);
    if (!opt.pool.empty()) {
      if (step >= opt.pool.size()) break;
      x = opt.pool[step];
    } else {
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
          x.set(i, j, rng.below(q));
    }
    if (x.is_zero() || cur.contains(x)) continue;
    if (!span_keeps_property(cur, x, prop)) continue;
    std::vector<Matrix> basis = cur.basis();
    basis.push_back(x);
    cur = MatSubspace(cur.field(), cur.rows(), cur.cols(), std::move(basis),
                      cur.tag());
  }
  return cur;
}

MatSubspace extend_singular(const MatSubspace& sub, const ExtendOptions& opt) {
  return extend_by_property(sub, SpanProperty::all_singular, opt);
}

}  // namespace detspace
