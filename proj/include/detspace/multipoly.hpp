#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detspace/field.hpp"

namespace detspace {

// exponent vector, one entry per variable
using Expo = std::vector<unsigned>;

// Descending graded lexicographic order: higher total degree first, ties by
// lexicographically larger exponent vector. map::begin() is the leading term.
struct GrlexGreater {
  bool operator()(const Expo& a, const Expo& b) const {
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da > db;
    return a > b;
  }
};

// Multivariate polynomial in a fixed number of variables x1..xn over a Field.
// Terms are kept in descending graded-lex order with nonzero coefficients.
class MultiPoly {
 public:
  using TermMap = std::map<Expo, Elt, GrlexGreater>;

  MultiPoly(FieldPtr f, unsigned nvars);

  static MultiPoly constant(const FieldPtr& f, unsigned nvars, Elt c);
  // the variable x_{i+1} (0-based index)
  static MultiPoly var(const FieldPtr& f, unsigned nvars, unsigned i);
  static MultiPoly monomial(const FieldPtr& f, unsigned nvars, Expo e, Elt c);

  const FieldPtr& field() const { return f_; }
  unsigned nvars() const { return nvars_; }
  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  // total degree; -1 for the zero polynomial
  int total_deg() const;
  Elt coeff(const Expo& e) const;
  bool is_homogeneous() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly scaled(Elt c) const;
  MultiPoly pow(unsigned e) const;
  Elt eval(const std::vector<Elt>& point) const;
  // evaluate at a point with coordinates in an extension of the coefficient
  // field (or the field itself)
  Elt eval_in(const FieldPtr& ext, const std::vector<Elt>& point) const;

  void add_term(const Expo& e, Elt c);  // accumulate, dropping zeros

 private:
  FieldPtr f_;
  unsigned nvars_;
  TermMap t_;
};

// f with each variable replaced by images[i]; the images share a field (an
// extension of f's field, or equal to it) and a variable count, which the
// result inherits.
MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& images);

// keep variables i and j (as y1, y2), send every other variable to zero
MultiPoly restrict_pair(const MultiPoly& f, unsigned i, unsigned j);

// coefficient-wise embedding into an extension of f's field
MultiPoly map_coeffs(const MultiPoly& f, const FieldPtr& ext);

// apply the base-field Frobenius power to every coefficient
MultiPoly frobenius_coeffs(const MultiPoly& f, unsigned i);

// g with g*g == f, if one exists
std::optional<MultiPoly> multi_sqrt(const MultiPoly& f);

// "x1^2*x2 + 2*x2^3" style rendering, terms in descending graded-lex order,
// coefficients as integer encodings
std::string render(const MultiPoly& f);

}  // namespace detspace
