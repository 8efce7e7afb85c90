#include "detspace/unipoly.hpp"

#include <algorithm>

#include "detspace/multipoly.hpp"

namespace detspace {

UniPoly::UniPoly(FieldPtr f, std::vector<Elt> coeffs)
    : f_(std::move(f)), c_(std::move(coeffs)) {
  for (Elt c : c_)
    require(c < f_->size(), "coefficient out of range for " + f_->describe());
  normalize();
}

void UniPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const FieldPtr& f, Elt c) {
  return UniPoly(f, std::vector<Elt>{c});
}

UniPoly UniPoly::x(const FieldPtr& f) {
  return UniPoly(f, std::vector<Elt>{0, 1});
}

UniPoly UniPoly::monomial(const FieldPtr& f, unsigned deg, Elt c) {
  std::vector<Elt> v(deg + 1, 0);
  v[deg] = c;
  return UniPoly(f, std::move(v));
}

Elt UniPoly::lead() const {
  require(!c_.empty(), "leading coefficient of the zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  require(f_->same_as(*o.f_), "polynomials over different fields");
  std::vector<Elt> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = f_->add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
  return UniPoly(f_, std::move(r));
}

UniPoly UniPoly::operator-() const {
  std::vector<Elt> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = f_->neg(c_[i]);
  return UniPoly(f_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  require(f_->same_as(*o.f_), "polynomials over different fields");
  if (is_zero() || o.is_zero()) return UniPoly(f_);
  std::vector<Elt> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
  }
  return UniPoly(f_, std::move(r));
}

bool UniPoly::operator==(const UniPoly& o) const {
  return f_->same_as(*o.f_) && c_ == o.c_;
}

UniPoly UniPoly::scaled(Elt c) const {
  std::vector<Elt> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = f_->mul(c_[i], c);
  return UniPoly(f_, std::move(r));
}

UniPoly UniPoly::monic() const {
  if (is_zero() || c_.back() == 1) return *this;
  return scaled(f_->inv(c_.back()));
}

UniPoly UniPoly::shifted(unsigned k) const {
  if (is_zero()) return *this;
  std::vector<Elt> r(c_.size() + k, 0);
  std::copy(c_.begin(), c_.end(), r.begin() + k);
  return UniPoly(f_, std::move(r));
}

Elt UniPoly::eval(Elt x) const {
  Elt acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly(f_);
  std::vector<Elt> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = f_->mul(c_[i], f_->from_int(i));
  return UniPoly(f_, std::move(r));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  require(!b.is_zero(), "division by the zero polynomial");
  const FieldPtr& F = a.field();
  require(F->same_as(*b.field()), "polynomials over different fields");
  if (a.deg() < b.deg()) return {UniPoly(F), a};
  std::vector<Elt> r = a.coeffs();
  std::vector<Elt> q(a.deg() - b.deg() + 1, 0);
  Elt il = F->inv(b.lead());
  const std::vector<Elt>& bc = b.coeffs();
  for (int i = a.deg(); i >= b.deg(); --i) {
    Elt c = r[i];
    if (c == 0) continue;
    Elt t = F->mul(c, il);
    q[i - b.deg()] = t;
    for (int j = 0; j <= b.deg(); ++j)
      r[i - b.deg() + j] = F->sub(r[i - b.deg() + j], F->mul(t, bc[j]));
  }
  r.resize(b.deg());
  return {UniPoly(F, std::move(q)), UniPoly(F, std::move(r))};
}

UniPoly poly_mod(const UniPoly& a, const UniPoly& b) {
  return divmod(a, b).second;
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly powmod(const UniPoly& a, u64 e, const UniPoly& m) {
  UniPoly r = poly_mod(UniPoly::constant(a.field(), 1), m);
  UniPoly b = poly_mod(a, m);
  while (e > 0) {
    if (e & 1) r = poly_mod(r * b, m);
    if (e >>= 1) b = poly_mod(b * b, m);
  }
  return r;
}

UniPoly powmod_qpow(const UniPoly& a, u64 q, unsigned i, const UniPoly& m) {
  UniPoly r = poly_mod(a, m);
  for (unsigned j = 0; j < i; ++j) r = powmod(r, q, m);
  return r;
}

bool uni_irreducible(const UniPoly& f) {
  require(f.deg() >= 1, "irreducibility is asked of degree >= 1 only");
  unsigned m = static_cast<unsigned>(f.deg());
  if (m == 1) return true;
  const FieldPtr& F = f.field();
  u64 q = F->size();
  UniPoly fm = f.monic();
  // h[j] = x^(q^j) mod f, built by iterating the q-power map
  std::vector<UniPoly> h;
  h.reserve(m + 1);
  h.push_back(poly_mod(UniPoly::x(F), fm));
  for (unsigned j = 1; j <= m; ++j) h.push_back(powmod(h.back(), q, fm));
  if (h[m] != h[0]) return false;
  for (u64 l : prime_factors(m)) {
    UniPoly g = poly_gcd(h[m / l] - h[0], fm);
    if (g.deg() != 0) return false;
  }
  return true;
}

UniPoly embed_poly(const UniPoly& f, const FieldPtr& ext) {
  FieldPtr p = ext;
  while (p != nullptr && !p->same_as(*f.field())) p = p->base();
  require(p != nullptr, "field " + f.field()->describe() +
                            " does not embed into " + ext->describe() +
                            " along the tower");
  return UniPoly(ext, f.coeffs());  // identity encodings
}

namespace {

// g is monic with distinct roots, all in its field; return them unsorted
void split_linear(const UniPoly& g, SeededRng& rng, std::vector<Elt>& out) {
  const FieldPtr& E = g.field();
  if (g.deg() == 0) return;
  if (g.deg() == 1) {
    out.push_back(E->neg(g.coeff(0)));
    return;
  }
  u64 size = E->size();
  while (true) {
    Elt a = rng.below(size);
    UniPoly d(E);
    if (E->characteristic() == 2) {
      // gcd with the trace polynomial of a*x
      unsigned k = 0;
      while ((size >> k) != 1) ++k;
      UniPoly u(E, std::vector<Elt>{0, a});
      UniPoly acc = poly_mod(u, g);
      UniPoly cur = acc;
      for (unsigned j = 1; j < k; ++j) {
        cur = powmod(cur, 2, g);
        acc = acc + cur;
      }
      d = poly_gcd(acc, g);
    } else {
      UniPoly s = powmod(UniPoly(E, std::vector<Elt>{a, 1}), (size - 1) / 2, g);
      d = poly_gcd(s - UniPoly::constant(E, 1), g);
    }
    if (d.deg() > 0 && d.deg() < g.deg()) {
      split_linear(d, rng, out);
      split_linear(divmod(g, d).first, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Elt> uni_roots_in(const UniPoly& f, const FieldPtr& ext,
                              const RootConfig& cfg) {
  require(!f.is_zero(), "every point is a root of the zero polynomial");
  UniPoly fe = embed_poly(f, ext);
  std::vector<Elt> distinct;
  if (ext->size() <= cfg.enum_cap) {
    for (Elt a = 0; a < ext->size(); ++a)
      if (fe.eval(a) == 0) distinct.push_back(a);
  } else if (fe.deg() >= 1) {
    UniPoly fm = fe.monic();
    UniPoly x = UniPoly::x(ext);
    UniPoly h = powmod(x, ext->size(), fm);
    UniPoly g = poly_gcd(h - x, fm);  // product of (x - a) over distinct roots
    SeededRng rng(cfg.seed);
    split_linear(g, rng, distinct);
    std::sort(distinct.begin(), distinct.end());
  }
  std::vector<Elt> out;
  for (Elt r : distinct) {
    UniPoly lin(ext, std::vector<Elt>{ext->neg(r), 1});
    UniPoly rem = fe;
    while (true) {
      auto [q, m] = divmod(rem, lin);
      if (!m.is_zero()) break;
      out.push_back(r);
      rem = std::move(q);
      if (rem.is_zero()) break;
    }
  }
  return out;
}

std::optional<UniPoly> uni_sqrt(const UniPoly& f) {
  MultiPoly m(f.field(), 1);
  const auto& c = f.coeffs();
  for (size_t i = 0; i < c.size(); ++i)
    m.add_term(Expo{static_cast<unsigned>(i)}, c[i]);
  auto g = multi_sqrt(m);
  if (!g) return std::nullopt;
  std::vector<Elt> r(g->is_zero() ? 0 : g->total_deg() + 1, 0);
  for (const auto& [e, coef] : g->terms()) r[e[0]] = coef;
  return UniPoly(f.field(), std::move(r));
}

std::string render(const UniPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = f.deg(); i >= 0; --i) {
    Elt c = f.coeff(i);
    if (c == 0) continue;
    if (!first) out += " + ";
    first = false;
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace detspace
