#include "detspace/field.hpp"

#include <algorithm>
#include <limits>

#include "detspace/unipoly.hpp"

namespace detspace {

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s += static_cast<char>('0' + static_cast<unsigned>(v % 10));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

namespace {

// lower coefficients of the degree-s candidate with counting index t
std::vector<Elt> digits_of(u64 t, u64 radix, unsigned s) {
  std::vector<Elt> d(s);
  for (unsigned i = 0; i < s; ++i) {
    d[i] = t % radix;
    t /= radix;
  }
  return d;
}

// Deterministic modulus choice: scan candidates x^s + c_{s-1} x^{s-1} + ... +
// c_0 where the lower coefficients, read as an integer in base |base|, run
// through 0, 1, 2, ...; the first irreducible wins.
std::vector<Elt> default_modulus(const FieldPtr& base, unsigned s) {
  u64 q = base->size();
  u64 limit = 1;
  for (unsigned i = 0; i < s; ++i) limit *= q;
  for (u64 t = 0; t < limit; ++t) {
    std::vector<Elt> c = digits_of(t, q, s);
    c.push_back(1);
    if (uni_irreducible(UniPoly(base, c))) return c;
  }
  throw Error("no irreducible modulus found (unreachable)");
}

std::string render_modulus(const FieldPtr& base, const std::vector<Elt>& m) {
  UniPoly f(base, m);
  return render(f, "x");
}

}  // namespace

FieldPtr Field::prime_field(u64 p) {
  require(p >= 2 && p <= 0xFFFFFFFFull, "characteristic out of range");
  require(is_prime_u64(p), "characteristic " + std::to_string(p) +
                               " is not prime");
  auto f = std::shared_ptr<Field>(new Field());
  f->size_ = p;
  f->base_size_ = p;
  f->char_ = p;
  f->deg_ = 1;
  return f;
}

FieldPtr Field::extension(FieldPtr base, std::vector<Elt> modulus) {
  require(base != nullptr, "extension needs a base field");
  require(modulus.size() >= 3, "modulus degree must be at least 2");
  require(modulus.back() == 1, "modulus must be monic");
  u64 q = base->size();
  for (Elt c : modulus)
    require(c < q, "modulus coefficient out of range for " + base->describe());
  unsigned s = static_cast<unsigned>(modulus.size()) - 1;
  u64 size = 1;
  for (unsigned i = 0; i < s; ++i) {
    require(size <= std::numeric_limits<u64>::max() / q,
            "field size overflows 64 bits");
    size *= q;
  }
  require(uni_irreducible(UniPoly(base, modulus)),
          "modulus is reducible over " + base->describe());
  auto f = std::shared_ptr<Field>(new Field());
  f->base_ = std::move(base);
  f->modulus_ = std::move(modulus);
  f->size_ = size;
  f->base_size_ = q;
  f->char_ = f->base_->characteristic();
  f->deg_ = s;
  f->build_tables();
  return f;
}

FieldPtr Field::make(u64 p, unsigned k,
                     const std::optional<std::vector<Elt>>& modulus) {
  require(k >= 1, "extension degree must be positive");
  if (k == 1) {
    require(!modulus.has_value(), "prime field takes no modulus");
    return prime_field(p);
  }
  FieldPtr base = prime_field(p);
  if (modulus.has_value()) return extension(base, *modulus);
  return extension(base, default_modulus(base, k));
}

FieldPtr Field::extension_of(const FieldPtr& base, unsigned s) {
  require(base != nullptr && s >= 1, "extension_of needs a base and degree");
  if (s == 1) return base;
  return extension(base, default_modulus(base, s));
}

FieldPtr Field::of_order(u64 q) {
  require(q >= 2, "field order must be at least 2");
  std::vector<u64> ps = prime_factors(q);
  require(ps.size() == 1, std::to_string(q) + " is not a prime power");
  u64 p = ps[0];
  unsigned k = 0;
  for (u64 t = q; t > 1; t /= p) {
    require(t % p == 0, std::to_string(q) + " is not a prime power");
    ++k;
  }
  return make(p, k);
}

std::string Field::describe() const {
  if (is_prime_field()) return "F_" + std::to_string(size_);
  return "F_" + std::to_string(size_) + " = " + base_->describe() + "[x]/(" +
         render_modulus(base_, modulus_) + ")";
}

bool Field::same_as(const Field& other) const {
  if (size_ != other.size_ || deg_ != other.deg_) return false;
  if (is_prime_field()) return other.is_prime_field();
  if (other.is_prime_field()) return false;
  return modulus_ == other.modulus_ && base_->same_as(*other.base_);
}

Elt Field::add(Elt a, Elt b) const {
  check_elt(a);
  check_elt(b);
  if (is_prime_field()) return (a + b) % size_;
  if (!add_tab_.empty()) return add_tab_[a * size_ + b];
  u64 r = 0, mult = 1;
  for (unsigned i = 0; i < deg_; ++i) {
    r += base_->add(a % base_size_, b % base_size_) * mult;
    a /= base_size_;
    b /= base_size_;
    mult *= base_size_;
  }
  return r;
}

Elt Field::neg(Elt a) const {
  check_elt(a);
  if (is_prime_field()) return a == 0 ? 0 : size_ - a;
  u64 r = 0, mult = 1;
  for (unsigned i = 0; i < deg_; ++i) {
    r += base_->neg(a % base_size_) * mult;
    a /= base_size_;
    mult *= base_size_;
  }
  return r;
}

Elt Field::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Elt Field::mul_nocache(Elt a, Elt b) const {
  if (is_prime_field()) return static_cast<u64>((u128(a) * b) % size_);
  std::vector<Elt> da = coeffs(a), db = coeffs(b);
  std::vector<Elt> conv(2 * deg_ - 1, 0);
  for (unsigned i = 0; i < deg_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < deg_; ++j)
      conv[i + j] = base_->add(conv[i + j], base_->mul(da[i], db[j]));
  }
  for (unsigned i = 2 * deg_ - 2; i >= deg_; --i) {
    Elt c = conv[i];
    if (c == 0) continue;
    for (unsigned j = 0; j < deg_; ++j)
      conv[i - deg_ + j] =
          base_->sub(conv[i - deg_ + j], base_->mul(c, modulus_[j]));
    conv[i] = 0;
  }
  conv.resize(deg_);
  return from_coeffs(conv);
}

Elt Field::mul(Elt a, Elt b) const {
  check_elt(a);
  check_elt(b);
  if (!mul_tab_.empty()) return mul_tab_[a * size_ + b];
  return mul_nocache(a, b);
}

Elt Field::inv(Elt a) const {
  check_elt(a);
  require(a != 0, "inverse of zero in " + describe());
  if (!inv_tab_.empty()) return inv_tab_[a];
  return pow(a, size_ - 2);
}

Elt Field::pow(Elt a, u64 e) const {
  check_elt(a);
  Elt r = 1, b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

void Field::build_tables() {
  if (size_ > kTableCap) return;
  add_tab_.resize(size_ * size_);
  mul_tab_.resize(size_ * size_);
  for (Elt a = 0; a < size_; ++a)
    for (Elt b = 0; b < size_; ++b) {
      std::vector<Elt> da = coeffs(a), db = coeffs(b);
      u64 s = 0, mult = 1;
      for (unsigned i = 0; i < deg_; ++i) {
        s += base_->add(da[i], db[i]) * mult;
        mult *= base_size_;
      }
      add_tab_[a * size_ + b] = static_cast<std::uint32_t>(s);
      mul_tab_[a * size_ + b] = static_cast<std::uint32_t>(mul_nocache(a, b));
    }
  inv_tab_.resize(size_);
  inv_tab_[0] = 0;
  for (Elt a = 1; a < size_; ++a)
    inv_tab_[a] = static_cast<std::uint32_t>(pow(a, size_ - 2));
}

std::vector<Elt> Field::coeffs(Elt a) const {
  check_elt(a);
  std::vector<Elt> d(deg_);
  for (unsigned i = 0; i < deg_; ++i) {
    d[i] = a % base_size_;
    a /= base_size_;
  }
  return d;
}

Elt Field::from_coeffs(const std::vector<Elt>& c) const {
  require(c.size() <= deg_, "coefficient vector longer than the degree");
  u64 r = 0, mult = 1;
  for (unsigned i = 0; i < c.size(); ++i) {
    require(c[i] < base_size_, "coefficient out of range for the base field");
    r += c[i] * mult;
    mult *= base_size_;
  }
  return r;
}

Elt Field::embed(Elt base_elt) const {
  require(base_elt < base_size_, "not an element of the base field");
  return base_elt;
}

Elt Field::to_base(Elt a) const {
  check_elt(a);
  require(in_base(a), "element lies outside the base field");
  return a;
}

Elt Field::frobenius(Elt a, unsigned i) const {
  check_elt(a);
  if (is_prime_field()) return a;
  i %= deg_;
  if (i == 0) return a;
  u64 e = 1;
  for (unsigned j = 0; j < i; ++j) e *= base_size_;
  return pow(a, e);
}

Elt Field::norm(Elt a) const {
  check_elt(a);
  if (is_prime_field()) return a;
  Elt r = 1;
  for (unsigned i = 0; i < deg_; ++i) r = mul(r, frobenius(a, i));
  return to_base(r);
}

Elt Field::trace(Elt a) const {
  check_elt(a);
  if (is_prime_field()) return a;
  Elt r = 0;
  for (unsigned i = 0; i < deg_; ++i) r = add(r, frobenius(a, i));
  return to_base(r);
}

std::vector<Elt> Field::trace_zero_basis() const {
  if (is_prime_field()) return {};
  // traces of the power basis 1, a, a^2, ...
  std::vector<Elt> t(deg_);
  u64 enc = 1;
  for (unsigned j = 0; j < deg_; ++j) {
    t[j] = trace(enc);
    if (j + 1 < deg_) enc *= base_size_;
  }
  unsigned j0 = 0;
  while (j0 < deg_ && t[j0] == 0) ++j0;
  require(j0 < deg_, "trace form vanished (unreachable for separable towers)");
  std::vector<Elt> basis;
  for (unsigned j = 0; j < deg_; ++j) {
    if (j == j0) continue;
    // a^j - (t_j / t_{j0}) a^{j0} has trace zero
    std::vector<Elt> d(deg_, 0);
    d[j] = 1;
    d[j0] = base_->neg(base_->mul(t[j], base_->inv(t[j0])));
    basis.push_back(from_coeffs(d));
  }
  return basis;
}

bool Field::is_square(Elt a) const {
  check_elt(a);
  if (a == 0 || char_ == 2) return true;
  return pow(a, (size_ - 1) / 2) == 1;
}

std::optional<Elt> Field::sqrt(Elt a) const {
  check_elt(a);
  if (a == 0) return 0;
  if (char_ == 2) {
    // squaring is a bijection; invert it with the remaining Frobenius powers
    Elt r = pow(a, size_ / 2);
    require(mul(r, r) == a, "square root failed in characteristic 2");
    return r;
  }
  Elt ls = pow(a, (size_ - 1) / 2);
  if (ls != 1) {
    require(ls == neg(1), "Legendre power out of range");
    return std::nullopt;
  }
  if (size_ % 4 == 3) {
    Elt r = pow(a, (size_ + 1) / 4);
    require(mul(r, r) == a, "square root failed (3 mod 4 branch)");
    return r;
  }
  // Tonelli-Shanks. Non-residue: smallest encoding whose Legendre power is -1.
  u64 Q = size_ - 1;
  unsigned S = 0;
  while ((Q & 1) == 0) {
    Q >>= 1;
    ++S;
  }
  Elt z = 2;
  while (pow(z, (size_ - 1) / 2) != neg(1)) ++z;
  Elt c = pow(z, Q);
  Elt r = pow(a, (Q + 1) / 2);
  Elt t = pow(a, Q);
  unsigned m = S;
  while (t != 1) {
    Elt tt = t;
    unsigned i = 0;
    while (tt != 1) {
      tt = mul(tt, tt);
      ++i;
    }
    Elt b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
    r = mul(r, b);
    c = mul(b, b);
    t = mul(t, c);
    m = i;
  }
  require(mul(r, r) == a, "square root failed (Tonelli-Shanks)");
  return r;
}

}  // namespace detspace
