#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "detspace/util.hpp"

namespace detspace {

// Element encoding. For F_p the value itself; for an extension of degree s
// over a base of size q, the integer sum digit_i * q^i where the digits are
// base-field encodings of the coefficients on the power basis 1, a, ..., a^{s-1}.
// Encodings are dense: every integer in [0, size) is an element.
using Elt = u64;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// A finite field: either a prime field F_p or an extension of another field by
// a monic irreducible modulus. F_{p^k} is the degree-k extension of F_p; a
// tower F_{(p^k)^s} keeps its base explicit, so Frobenius, norm and trace are
// taken relative to the base field, which is what all subspace constructions
// need. Immutable after construction; safe to share across threads.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr prime_field(u64 p);

  // modulus: coefficients over `base`, lowest degree first, monic, degree >= 2,
  // irreducible over base (verified).
  static FieldPtr extension(FieldPtr base, std::vector<Elt> modulus);

  // F_{p^k}; when the modulus is absent the deterministic default is used: the
  // monic irreducible whose lower coefficients form the smallest integer in
  // base-p counting order.
  static FieldPtr make(u64 p, unsigned k,
                       const std::optional<std::vector<Elt>>& modulus = {});

  // degree-s extension of `base` with the default modulus (same scan as make).
  static FieldPtr extension_of(const FieldPtr& base, unsigned s);

  // F_q for a prime power q, with the default modulus
  static FieldPtr of_order(u64 q);

  u64 size() const { return size_; }
  u64 characteristic() const { return char_; }
  bool is_prime_field() const { return base_ == nullptr; }
  // degree over the base field (1 for a prime field)
  unsigned degree() const { return deg_; }
  const FieldPtr& base() const { return base_; }
  // modulus over the base, lowest first, monic; empty for a prime field
  const std::vector<Elt>& modulus() const { return modulus_; }
  std::string describe() const;

  bool same_as(const Field& other) const;

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  // n * 1, i.e. the image of an integer in the field
  Elt from_int(u64 n) const { return n % char_; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;  // throws Error on zero
  Elt pow(Elt a, u64 e) const;

  // digits of a over the base field, length degree()
  std::vector<Elt> coeffs(Elt a) const;
  Elt from_coeffs(const std::vector<Elt>& c) const;

  // Base-field elements embed as numerically identical encodings.
  Elt embed(Elt base_elt) const;
  bool in_base(Elt a) const { return a < base_size_; }
  Elt to_base(Elt a) const;

  // a^(|base|^i); identity on a prime field and for i a multiple of degree()
  Elt frobenius(Elt a, unsigned i = 1) const;
  Elt norm(Elt a) const;   // product of Frobenius conjugates, lands in base
  Elt trace(Elt a) const;  // sum of Frobenius conjugates, lands in base

  // basis (encodings) of the trace-zero hyperplane over the base field;
  // size degree()-1 for an extension, empty for a prime field
  std::vector<Elt> trace_zero_basis() const;

  bool is_square(Elt a) const;
  std::optional<Elt> sqrt(Elt a) const;

 private:
  Field() = default;
  void check_elt(Elt a) const {
    require(a < size_, "element encoding out of range for " + describe());
  }
  Elt mul_nocache(Elt a, Elt b) const;
  void build_tables();

  FieldPtr base_;              // null for prime field
  std::vector<Elt> modulus_;   // over base, lowest first, monic
  u64 size_ = 0;
  u64 base_size_ = 0;          // |base|; equals size_ for a prime field
  u64 char_ = 0;
  unsigned deg_ = 1;

  // lookup tables, built when size_ <= kTableCap and the field is not prime
  static constexpr u64 kTableCap = 512;
  std::vector<std::uint32_t> add_tab_, mul_tab_, inv_tab_;
};

}  // namespace detspace
