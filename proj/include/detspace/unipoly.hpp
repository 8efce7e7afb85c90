#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detspace/field.hpp"

namespace detspace {

// Univariate polynomial over a Field. Coefficients lowest degree first, no
// trailing zeros; the zero polynomial has an empty coefficient vector.
class UniPoly {
 public:
  explicit UniPoly(FieldPtr f) : f_(std::move(f)) {}
  UniPoly(FieldPtr f, std::vector<Elt> coeffs);

  static UniPoly constant(const FieldPtr& f, Elt c);
  static UniPoly x(const FieldPtr& f);
  static UniPoly monomial(const FieldPtr& f, unsigned deg, Elt c);

  const FieldPtr& field() const { return f_; }
  const std::vector<Elt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // degree; -1 for the zero polynomial
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  Elt coeff(unsigned i) const { return i < c_.size() ? c_[i] : 0; }
  Elt lead() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly operator*(const UniPoly& o) const;
  bool operator==(const UniPoly& o) const;
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly scaled(Elt c) const;
  UniPoly monic() const;  // scale by inverse of lead; zero stays zero
  UniPoly shifted(unsigned k) const;  // multiply by x^k
  Elt eval(Elt x) const;
  UniPoly derivative() const;

 private:
  void normalize();
  FieldPtr f_;
  std::vector<Elt> c_;
};

// quotient and remainder; b nonzero
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly poly_mod(const UniPoly& a, const UniPoly& b);
// monic gcd; gcd(0,0) = 0
UniPoly poly_gcd(UniPoly a, UniPoly b);
// a^e mod m
UniPoly powmod(const UniPoly& a, u64 e, const UniPoly& m);
// a^(q^i) mod m without forming q^i (repeated q-power maps)
UniPoly powmod_qpow(const UniPoly& a, u64 q, unsigned i, const UniPoly& m);

// true iff f is irreducible over its coefficient field; deg f >= 1 required.
// f of degree m is irreducible iff x^(q^m) == x mod f and
// gcd(x^(q^(m/l)) - x, f) = 1 for every prime l dividing m.
bool uni_irreducible(const UniPoly& f);

// coefficient-wise embedding into an extension of f's field (or f's own field)
UniPoly embed_poly(const UniPoly& f, const FieldPtr& ext);

struct RootConfig {
  u64 enum_cap = 4096;  // exhaustive evaluation up to this field size
  u64 seed = 1;         // equal-degree splitting seed
};

// All roots of f lying in ext (an extension of f's field, or that field
// itself), with multiplicity, sorted by encoding. Exhaustive scan when
// |ext| <= cfg.enum_cap, otherwise gcd with x^|ext| - x followed by seeded
// equal-degree splitting.
std::vector<Elt> uni_roots_in(const UniPoly& f, const FieldPtr& ext,
                              const RootConfig& cfg = {});

// g with g*g == f, if one exists over f's field
std::optional<UniPoly> uni_sqrt(const UniPoly& f);

// "y^3 + 2*y + 1" style rendering, coefficients as integer encodings
std::string render(const UniPoly& f, const std::string& var = "y");

}  // namespace detspace
