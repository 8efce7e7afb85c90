#include "detspace/multipoly.hpp"

#include <algorithm>

namespace detspace {

namespace {

// identity-encoding embedding is valid when ext sits above f in a tower
void require_embeddable(const FieldPtr& from, const FieldPtr& to) {
  for (FieldPtr p = to; p != nullptr; p = p->base())
    if (p->same_as(*from)) return;
  throw Error("field " + from->describe() + " does not embed into " +
              to->describe() + " along the tower");
}

unsigned expo_deg(const Expo& e) {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

}  // namespace

MultiPoly::MultiPoly(FieldPtr f, unsigned nvars)
    : f_(std::move(f)), nvars_(nvars) {
  require(f_ != nullptr, "polynomial needs a field");
}

MultiPoly MultiPoly::constant(const FieldPtr& f, unsigned nvars, Elt c) {
  MultiPoly p(f, nvars);
  p.add_term(Expo(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::var(const FieldPtr& f, unsigned nvars, unsigned i) {
  require(i < nvars, "variable index out of range");
  Expo e(nvars, 0);
  e[i] = 1;
  return monomial(f, nvars, e, 1);
}

MultiPoly MultiPoly::monomial(const FieldPtr& f, unsigned nvars, Expo e,
                              Elt c) {
  require(e.size() == nvars, "exponent vector length mismatch");
  MultiPoly p(f, nvars);
  p.add_term(e, c);
  return p;
}

int MultiPoly::total_deg() const {
  if (t_.empty()) return -1;
  return static_cast<int>(expo_deg(t_.begin()->first));
}

Elt MultiPoly::coeff(const Expo& e) const {
  require(e.size() == nvars_, "exponent vector length mismatch");
  auto it = t_.find(e);
  return it == t_.end() ? 0 : it->second;
}

bool MultiPoly::is_homogeneous() const {
  if (t_.empty()) return true;
  unsigned d = expo_deg(t_.begin()->first);
  for (const auto& [e, c] : t_)
    if (expo_deg(e) != d) return false;
  return true;
}

void MultiPoly::add_term(const Expo& e, Elt c) {
  require(e.size() == nvars_, "exponent vector length mismatch");
  if (c == 0) return;
  auto [it, inserted] = t_.try_emplace(e, c);
  if (!inserted) {
    it->second = f_->add(it->second, c);
    if (it->second == 0) t_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  require(nvars_ == o.nvars_ && f_->same_as(*o.f_),
          "polynomials live in different rings");
  MultiPoly r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(f_, nvars_);
  for (const auto& [e, c] : t_) r.t_.emplace(e, f_->neg(c));
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  return *this + (-o);
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require(nvars_ == o.nvars_ && f_->same_as(*o.f_),
          "polynomials live in different rings");
  MultiPoly r(f_, nvars_);
  for (const auto& [ea, ca] : t_)
    for (const auto& [eb, cb] : o.t_) {
      Expo e(nvars_);
      for (unsigned i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, f_->mul(ca, cb));
    }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return nvars_ == o.nvars_ && f_->same_as(*o.f_) && t_ == o.t_;
}

MultiPoly MultiPoly::scaled(Elt c) const {
  MultiPoly r(f_, nvars_);
  for (const auto& [e, a] : t_) r.add_term(e, f_->mul(a, c));
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(f_, nvars_, 1);
  MultiPoly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    if (e >>= 1) b = b * b;
  }
  return r;
}

Elt MultiPoly::eval(const std::vector<Elt>& point) const {
  return eval_in(f_, point);
}

Elt MultiPoly::eval_in(const FieldPtr& ext, const std::vector<Elt>& point) const {
  require(point.size() == nvars_, "evaluation point has wrong arity");
  require_embeddable(f_, ext);
  // per-variable power tables up to the highest exponent used
  std::vector<unsigned> maxe(nvars_, 0);
  for (const auto& [e, c] : t_)
    for (unsigned i = 0; i < nvars_; ++i) maxe[i] = std::max(maxe[i], e[i]);
  std::vector<std::vector<Elt>> pw(nvars_);
  for (unsigned i = 0; i < nvars_; ++i) {
    pw[i].resize(maxe[i] + 1);
    pw[i][0] = 1;
    for (unsigned j = 1; j <= maxe[i]; ++j)
      pw[i][j] = ext->mul(pw[i][j - 1], point[i]);
  }
  Elt acc = 0;
  for (const auto& [e, c] : t_) {
    Elt term = c;  // identity encoding under the tower embedding
    for (unsigned i = 0; i < nvars_; ++i)
      if (e[i] > 0) term = ext->mul(term, pw[i][e[i]]);
    acc = ext->add(acc, term);
  }
  return acc;
}

MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& images) {
  require(images.size() == f.nvars(), "one image per variable required");
  FieldPtr rf = f.field();
  unsigned rn = f.nvars();
  if (!images.empty()) {
    rf = images[0].field();
    rn = images[0].nvars();
    for (const auto& g : images)
      require(g.nvars() == rn && g.field()->same_as(*rf),
              "images live in different rings");
  }
  require_embeddable(f.field(), rf);
  // per-variable image power caches
  std::vector<std::vector<MultiPoly>> pw(f.nvars());
  for (unsigned i = 0; i < f.nvars(); ++i)
    pw[i].push_back(MultiPoly::constant(rf, rn, 1));
  MultiPoly acc(rf, rn);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly term = MultiPoly::constant(rf, rn, c);
    for (unsigned i = 0; i < f.nvars(); ++i) {
      while (pw[i].size() <= e[i]) pw[i].push_back(pw[i].back() * images[i]);
      if (e[i] > 0) term = term * pw[i][e[i]];
    }
    acc = acc + term;
  }
  return acc;
}

MultiPoly restrict_pair(const MultiPoly& f, unsigned i, unsigned j) {
  require(i < f.nvars() && j < f.nvars() && i != j,
          "restrict_pair needs two distinct variables");
  std::vector<MultiPoly> images;
  images.reserve(f.nvars());
  for (unsigned k = 0; k < f.nvars(); ++k) {
    if (k == i)
      images.push_back(MultiPoly::var(f.field(), 2, 0));
    else if (k == j)
      images.push_back(MultiPoly::var(f.field(), 2, 1));
    else
      images.push_back(MultiPoly(f.field(), 2));
  }
  return substitute(f, images);
}

MultiPoly map_coeffs(const MultiPoly& f, const FieldPtr& ext) {
  require_embeddable(f.field(), ext);
  MultiPoly r(ext, f.nvars());
  for (const auto& [e, c] : f.terms()) r.add_term(e, c);
  return r;
}

MultiPoly frobenius_coeffs(const MultiPoly& f, unsigned i) {
  MultiPoly r(f.field(), f.nvars());
  for (const auto& [e, c] : f.terms())
    r.add_term(e, f.field()->frobenius(c, i));
  return r;
}

std::optional<MultiPoly> multi_sqrt(const MultiPoly& f) {
  const FieldPtr& F = f.field();
  if (f.is_zero()) return f;
  if (F->characteristic() == 2) {
    // squaring doubles exponents and squares coefficients, both invertible
    MultiPoly g(F, f.nvars());
    for (const auto& [e, c] : f.terms()) {
      Expo h(f.nvars());
      for (unsigned i = 0; i < f.nvars(); ++i) {
        if (e[i] % 2 != 0) return std::nullopt;
        h[i] = e[i] / 2;
      }
      g.add_term(h, *F->sqrt(c));
    }
    if (g * g != f) return std::nullopt;
    return g;
  }
  // odd characteristic: peel matching leading terms in graded-lex order
  const auto& lead = *f.terms().begin();
  Expo eg(f.nvars());
  for (unsigned i = 0; i < f.nvars(); ++i) {
    if (lead.first[i] % 2 != 0) return std::nullopt;
    eg[i] = lead.first[i] / 2;
  }
  auto lc = F->sqrt(lead.second);
  if (!lc) return std::nullopt;
  MultiPoly g = MultiPoly::monomial(F, f.nvars(), eg, *lc);
  Elt two_lc_inv = F->inv(F->mul(2 % F->characteristic(), *lc));
  GrlexGreater gt;
  Expo prev = lead.first;  // upper bound for the next correction term
  while (true) {
    MultiPoly R = f - g * g;
    if (R.is_zero()) return g;
    const auto& rl = *R.terms().begin();
    Expo et(f.nvars());
    for (unsigned i = 0; i < f.nvars(); ++i) {
      if (rl.first[i] < eg[i]) return std::nullopt;
      et[i] = rl.first[i] - eg[i];
    }
    // corrections must strictly decrease, else f has no square root
    if (!gt(prev, et)) return std::nullopt;
    prev = et;
    g.add_term(et, F->mul(rl.second, two_lc_inv));
  }
}

std::string render(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) out += " + ";
    first = false;
    std::vector<std::string> parts;
    bool constant_term = true;
    for (unsigned x : e)
      if (x > 0) constant_term = false;
    if (c != 1 || constant_term) parts.push_back(std::to_string(c));
    for (unsigned i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string v = "x" + std::to_string(i + 1);
      if (e[i] > 1) v += "^" + std::to_string(e[i]);
      parts.push_back(v);
    }
    for (size_t k = 0; k < parts.size(); ++k) {
      if (k > 0) out += "*";
      out += parts[k];
    }
  }
  return out;
}

}  // namespace detspace
