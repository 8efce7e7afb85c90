#include "detspace/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "detspace/detkit.hpp"
#include "detspace/matrix.hpp"
#include "detspace/multipoly.hpp"
#include "detspace/subspace.hpp"
#include "detspace/unipoly.hpp"
#include "detspace/util.hpp"

namespace detspace {
namespace {

// ---------------------------------------------------------------------------
// report plumbing

void num(VerdictReport& rep, const std::string& key, const std::string& val) {
  rep.numbers.emplace_back(key, val);
}
void num(VerdictReport& rep, const std::string& key, u64 val) {
  num(rep, key, std::to_string(val));
}
void numb(VerdictReport& rep, const std::string& key, bool val) {
  num(rep, key, std::string(val ? "true" : "false"));
}

void fail(VerdictReport& rep, const std::string& clause) {
  rep.passed = false;
  if (!rep.violated.empty()) rep.violated += "; ";
  rep.violated += clause;
}

void check(VerdictReport& rep, bool ok, const std::string& clause) {
  if (!ok) fail(rep, clause);
}

// unmet hypothesis: the conclusion is not promised here, so nothing is scored
void vacuous(VerdictReport& rep, const std::string& why) {
  rep.caveats.push_back("hypothesis not met: " + why +
                        "; conclusion not scored on this instance");
}

// unmet largeness hypothesis: the conclusion is still scored empirically
void largeness(VerdictReport& rep, u64 q, u64 base, unsigned e,
               const std::string& symbol) {
  if (u128(q) > pow_u128(base, e)) return;
  std::ostringstream os;
  os << "hypothesis q > " << symbol << "^" << e << " not met (q=" << q << ", "
     << symbol << "=" << base << "); checking the conclusion empirically";
  rep.caveats.push_back(os.str());
}

std::string describe_instance(const MatSubspace& sub) {
  std::ostringstream os;
  if (!sub.tag().empty()) os << sub.tag() << " ";
  os << "[q=" << sub.field()->size();
  if (sub.is_square())
    os << ", n=" << sub.n();
  else
    os << ", " << sub.rows() << "x" << sub.cols();
  os << ", d=" << sub.dim() << "]";
  return os.str();
}

const MatSubspace& need(const MatSubspace* sub) {
  require(sub != nullptr, "this catalogue entry needs a subspace instance");
  return *sub;
}

// ---------------------------------------------------------------------------
// shared machinery

u128 gl_order(u64 q, unsigned n) {
  u128 qn = pow_u128(q, n);
  u128 order = 1, qi = 1;
  for (unsigned i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= q;
    if (order > (u128(1) << 100)) return u128(1) << 100;  // saturate
  }
  return order;
}

u64 checked_points(const MatSubspace& sub, const Config& cfg) {
  u64 pts = sub.point_count();
  require(pts <= cfg.affine_cap, "subspace enumeration exceeds the affine cap");
  return pts;
}

u64 count_singular(const MatSubspace& sub, const Config& cfg) {
  u64 pts = checked_points(sub, cfg);
  u64 c = 0;
  for (u64 i = 0; i < pts; ++i)
    if (det(sub.element_at(i)) == 0) ++c;
  return c;
}

bool is_scalar(const Matrix& a) {
  return a == Matrix::identity(a.field(), a.rows()).scaled(a.at(0, 0));
}

// visit every invertible n x n matrix; false when |GL(n,q)| exceeds budget
bool scan_gl(const FieldPtr& f, unsigned n, u64 budget,
             const std::function<void(const Matrix&)>& fn) {
  u64 q = f->size();
  if (gl_order(q, n) > budget) return false;
  // |GL| <= budget keeps q^{n^2} within a small multiple of the budget
  u128 total = pow_u128(q, n * n);
  require(total <= (u128(1) << 26), "matrix scan unexpectedly large");
  Matrix m(f, n, n);
  for (u64 idx = 0; idx < u64(total); ++idx) {
    u64 t = idx;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) {
        m.set(i, j, t % q);
        t /= q;
      }
    if (is_invertible(m)) fn(m);
  }
  return true;
}

unsigned rank_of(std::vector<std::vector<Elt>> rows, const FieldPtr& f) {
  if (rows.empty()) return 0;
  return rref_rows(rows, f);
}

// coordinates b = lambda * a for some scalar lambda (a nonzero)
bool coord_dependent(const std::vector<Elt>& a, const std::vector<Elt>& b,
                     const FieldPtr& f) {
  unsigned p = 0;
  while (p < a.size() && a[p] == 0) ++p;
  if (p == a.size()) return true;  // a = 0
  Elt lam = f->mul(b[p], f->inv(a[p]));
  for (unsigned j = 0; j < a.size(); ++j)
    if (b[j] != f->mul(lam, a[j])) return false;
  return true;
}

std::string render_witness(const NormFormWitness& w) {
  std::ostringstream os;
  os << "lambda=" << w.lambda << ", omega=(";
  for (unsigned i = 0; i < w.omega.size(); ++i)
    os << (i ? "," : "") << w.omega[i];
  os << ") in " << w.ext->describe();
  return os.str();
}

// evaluates P on every point of F_q^d and feeds each value to fn
void scan_values(const MultiPoly& p, unsigned d, const Config& cfg,
                 const std::function<void(Elt)>& fn) {
  const FieldPtr& f = p.field();
  u64 q = f->size();
  u128 total = pow_u128(q, d);
  require(total <= cfg.affine_cap, "value scan exceeds the affine cap");
  std::vector<Elt> point(d, 0);
  for (u64 idx = 0; idx < u64(total); ++idx) {
    u64 t = idx;
    for (unsigned i = 0; i < d; ++i) {
      point[i] = t % q;
      t /= q;
    }
    fn(p.eval(point));
  }
}

u128 gcd_u128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// random multivariate polynomial in `vars` variables, per-variable exponent
// at most 2; homogeneous variants pick a single total degree
MultiPoly random_poly(const FieldPtr& f, unsigned vars, SeededRng& rng,
                      bool homogeneous) {
  MultiPoly out(f, vars);
  unsigned terms = 1 + unsigned(rng.below(3));
  unsigned hdeg = 1 + unsigned(rng.below(2));
  for (unsigned t = 0; t < terms; ++t) {
    Expo e(vars, 0);
    if (homogeneous) {
      for (unsigned used = 0; used < hdeg; ++used) ++e[rng.below(vars)];
    } else {
      for (unsigned i = 0; i < vars; ++i) e[i] = unsigned(rng.below(3));
    }
    Elt c = Elt(rng.below(f->size()));
    if (c == 0) c = 1;
    out.add_term(e, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// catalogue entries

// a nonzero determinantal polynomial vanishing on the whole space forces q < n
void v_field_size(VerdictReport& rep, const MatSubspace* s, const Config& cfg) {
  const MatSubspace& sub = need(s);
  MultiPoly p = det_poly(sub);
  u64 q = sub.field()->size();
  num(rep, "q", q);
  num(rep, "n", u64(sub.n()));
  num(rep, "d", u64(sub.dim()));
  if (p.is_zero()) {
    vacuous(rep, "the determinantal polynomial is identically zero");
    return;
  }
  ZeroCensus cs = zero_census(p, CensusMode::affine, cfg);
  u64 pts = checked_points(sub, cfg);
  num(rep, "zeros", cs.N_affine);
  num(rep, "points", pts);
  if (cs.N_affine != pts) {
    vacuous(rep, "not every element is singular");
    return;
  }
  check(rep, q < sub.n(),
        "q < n must hold when a nonzero determinantal polynomial vanishes on "
        "the whole space");
}

// factors of a homogeneous product are themselves homogeneous
void v_homogeneous(VerdictReport& rep, const MatSubspace* s, const Config& cfg) {
  const MatSubspace& sub = need(s);
  MultiPoly p = det_poly(sub);
  if (!p.is_zero())
    check(rep, p.is_homogeneous(),
          "a nonzero determinantal polynomial must be homogeneous");
  numb(rep, "det_poly_homogeneous", !p.is_zero() && p.is_homogeneous());

  const FieldPtr& f = sub.field();
  SeededRng rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
  unsigned products = 0, homogeneous_products = 0, mixed_products = 0;
  for (unsigned trial = 0; trial < 160; ++trial) {
    bool gh = trial % 2 == 0, hh = trial % 4 < 2;
    MultiPoly g = random_poly(f, 2, rng, gh);
    MultiPoly h = random_poly(f, 2, rng, hh);
    MultiPoly prod = g * h;
    if (g.is_zero() || h.is_zero() || prod.is_zero()) continue;
    ++products;
    if (prod.is_homogeneous()) {
      ++homogeneous_products;
      if (!g.is_homogeneous() || !h.is_homogeneous()) {
        fail(rep, "a homogeneous product must have homogeneous factors");
        rep.witnesses.push_back("g=" + render(g) + ", h=" + render(h));
        return;
      }
    } else {
      ++mixed_products;
      if (g.is_homogeneous() && h.is_homogeneous()) {
        fail(rep, "a product of homogeneous factors must be homogeneous");
        rep.witnesses.push_back("g=" + render(g) + ", h=" + render(h));
        return;
      }
    }
  }
  num(rep, "products_checked", u64(products));
  num(rep, "homogeneous_products", u64(homogeneous_products));
  num(rep, "inhomogeneous_products", u64(mixed_products));
}

// a degree-n form with 2d >= 1+n and no nontrivial zero is irreducible
void v_subspace_of_invertibles(VerdictReport& rep, const MatSubspace* s,
                               const Config& cfg) {
  const MatSubspace& sub = need(s);
  MultiPoly p = det_poly(sub);
  u64 q = sub.field()->size();
  unsigned n = sub.n(), d = sub.dim();
  num(rep, "q", q);
  num(rep, "n", u64(n));
  num(rep, "d", u64(d));
  if (p.is_zero()) {
    vacuous(rep, "the determinantal polynomial is identically zero");
    return;
  }
  ZeroCensus cs = zero_census(p, CensusMode::affine, cfg);
  num(rep, "zeros", cs.N_affine);
  numb(rep, "criterion_fires", 2 * d >= 1 + n && cs.N_affine == 1);
  if (2 * d < 1 + n) {
    vacuous(rep, "2d >= 1+n does not hold");
    return;
  }
  if (cs.N_affine != 1) {
    vacuous(rep, "the polynomial has a nontrivial zero");
    return;
  }
  // a zero-free degree-n form in more than n variables is impossible
  check(rep, d <= n,
        "no nontrivial zero together with d > n contradicts the degree bound "
        "on zero-free forms");
  rep.witnesses.push_back(
      "irreducible over the base field: single zero and 2d >= 1+n");
}

// zero counts of an absolutely irreducible form stay near q^{d-1}
void v_lang_weil(VerdictReport& rep, const MatSubspace* s, const Config& cfg) {
  const MatSubspace& sub = need(s);
  MultiPoly p = det_poly(sub);
  u64 q = sub.field()->size();
  unsigned n = sub.n(), d = sub.dim();
  num(rep, "q", q);
  num(rep, "n", u64(n));
  num(rep, "d", u64(d));
  if (p.is_zero()) {
    vacuous(rep, "the determinantal polynomial is identically zero");
    return;
  }
  if (multi_sqrt(p)) {
    vacuous(rep, "the polynomial is a square, hence not absolutely irreducible");
    return;
  }
  if (is_prime_u64(n) && norm_form_witness(p, n, cfg)) {
    vacuous(rep,
            "a norm-form certificate shows the polynomial is not absolutely "
            "irreducible");
    return;
  }
  ZeroCensus cs = zero_census(p, CensusMode::affine, cfg);
  num(rep, "zeros", cs.N_affine);
  rep.caveats.push_back(
      "absolute irreducibility is assumed, not certified; the count bound is "
      "checked empirically");
  if (u128(q) > pow_u128(n, 6) && n >= 4) {
    u128 lo = pow_u128(q, d - 1), mid = u128(4) * cs.N_affine;
    check(rep, lo <= mid && mid <= 7 * lo,
          "q^{d-1} <= 4N <= 7 q^{d-1} must hold for large q");
    num(rep, "window", "q^{d-1} <= 4N <= 7q^{d-1}");
  } else {
    largeness(rep, q, n, 6, "n");
    check(rep, cafure_matera_consistent(q, n, d, cs.N_affine),
          "the zero count must satisfy the explicit |N - q^{d-1}| bound");
    num(rep, "window", "|N - q^{d-1}| bound");
  }
}

// invertible-only with 2d > n: irreducible but not absolutely irreducible
void v_irreducible_but_not_absolutely(VerdictReport& rep, const MatSubspace* s,
                                      const Config& cfg) {
  const MatSubspace& sub = need(s);
  MultiPoly p = det_poly(sub);
  u64 q = sub.field()->size();
  unsigned n = sub.n(), d = sub.dim();
  num(rep, "q", q);
  num(rep, "n", u64(n));
  num(rep, "d", u64(d));
  ZeroCensus cs = zero_census(p, CensusMode::affine, cfg);
  num(rep, "zeros", cs.N_affine);
  if (cs.N_affine != 1) {
    vacuous(rep, "not every nonzero element is invertible");
    return;
  }
  if (2 * d <= n) {
    vacuous(rep, "2d > n does not hold");
    return;
  }
  largeness(rep, q, n, 6, "n");
  if (!is_prime_u64(n)) {
    rep.caveats.push_back(
        "composite degree: the norm-form witness machinery covers prime "
        "degree only; conclusion unverified here");
    return;
  }
  auto wit = norm_form_witness(p, n, cfg);
  numb(rep, "witness_found", wit.has_value());
  check(rep, wit.has_value(),
        "an invertible-only subspace with 2d > n must factor as a norm form "
        "over the degree-n extension");
  if (wit) rep.witnesses.push_back(render_witness(*wit));
}

// irreducible but not absolutely irreducible: singular elements a subspace
void v_subspace_of_determinant_zero(VerdictReport& rep, const MatSubspace* s,
                                    const Config& cfg) {
  const MatSubspace& sub = need(s);
  MultiPoly p = det_poly(sub);
  unsigned n = sub.n();
  if (p.is_zero() || !is_prime_u64(n)) {
    vacuous(rep, "no norm-form certificate is available at this degree");
    return;
  }
  auto wit = norm_form_witness(p, n, cfg);
  numb(rep, "witness_found", wit.has_value());
  if (!wit) {
    vacuous(rep,
            "the determinantal polynomial is not certified irreducible-but-"
            "not-absolutely-irreducible");
    return;
  }
  SingularPart sp = singular_part(sub, cfg);
  num(rep, "singular_count", sp.count);
  numb(rep, "singular_is_subspace", sp.is_subspace);
  num(rep, "singular_dim", u64(sp.dim));
  check(rep, sp.is_subspace,
        "the determinant-zero elements must form a subspace");
}

// with I in the span, singular translates preserve characteristic polynomials
void v_same_characteristic_polynomial(VerdictReport& rep, const MatSubspace* s,
                                      const Config& cfg) {
  const MatSubspace& sub = need(s);
  const FieldPtr& f = sub.field();
  unsigned n = sub.n(), d = sub.dim();
  MultiPoly p = det_poly(sub);
  std::vector<Elt> icoords;
  if (!sub.contains(Matrix::identity(f, n), &icoords)) {
    vacuous(rep, "the subspace does not contain the identity");
    return;
  }
  if (p.is_zero() || !is_prime_u64(n) || !norm_form_witness(p, n, cfg)) {
    vacuous(rep,
            "the determinantal polynomial is not certified irreducible-but-"
            "not-absolutely-irreducible");
    return;
  }
  SingularPart sp = singular_part(sub, cfg);
  if (!sp.is_subspace) {
    fail(rep,
         "the determinant-zero elements must form a subspace before "
         "translation invariance can hold");
    return;
  }
  // complement of the singular part inside coordinate space, identity first
  std::vector<std::vector<Elt>> work = sp.basis_coords;
  std::vector<std::vector<Elt>> comp{icoords};
  work.push_back(icoords);
  unsigned rk = rank_of(work, f);
  for (unsigned k = 0; k < d && comp.size() + sp.dim < d; ++k) {
    std::vector<Elt> e(d, 0);
    e[k] = 1;
    auto trial = work;
    trial.push_back(e);
    if (rank_of(trial, f) == rk + 1) {
      work.push_back(e);
      comp.push_back(e);
      ++rk;
    }
  }
  require(comp.size() + sp.dim == d, "complement construction failed");

  u64 q = f->size();
  u64 na = pow_u64(q, unsigned(comp.size()));
  u64 nb = pow_u64(q, sp.dim);
  u64 pairs = 0;
  for (u64 ia = 0; ia < na; ++ia) {
    std::vector<Elt> ca(d, 0);
    u64 t = ia;
    for (const auto& v : comp) {
      Elt coef = Elt(t % q);
      t /= q;
      for (unsigned j = 0; j < d; ++j) ca[j] = f->add(ca[j], f->mul(coef, v[j]));
    }
    Matrix a = sub.element(ca);
    UniPoly cpa = char_poly(a);
    for (u64 ib = 0; ib < nb; ++ib) {
      std::vector<Elt> cb(d, 0);
      u64 tb = ib;
      for (const auto& v : sp.basis_coords) {
        Elt coef = Elt(tb % q);
        tb /= q;
        for (unsigned j = 0; j < d; ++j)
          cb[j] = f->add(cb[j], f->mul(coef, v[j]));
      }
      Matrix b = sub.element(cb);
      ++pairs;
      if (!(char_poly(a + b) == cpa)) {
        fail(rep,
             "adding a singular element must not change the characteristic "
             "polynomial");
        rep.witnesses.push_back("A=" + render(a) + ", B=" + render(b));
        num(rep, "pairs_checked", pairs);
        return;
      }
    }
  }
  num(rep, "complement_dim", u64(comp.size()));
  num(rep, "singular_dim", u64(sp.dim));
  num(rep, "pairs_checked", pairs);
}

// singular elements become nilpotent after dividing by an invertible element
void v_nilpotent(VerdictReport& rep, const MatSubspace* s, const Config& cfg) {
  const MatSubspace& sub = need(s);
  const FieldPtr& f = sub.field();
  unsigned n = sub.n();
  MultiPoly p = det_poly(sub);
  if (p.is_zero() || !is_prime_u64(n) || !norm_form_witness(p, n, cfg)) {
    vacuous(rep,
            "the determinantal polynomial is not certified irreducible-but-"
            "not-absolutely-irreducible");
    return;
  }
  SingularPart sp = singular_part(sub, cfg);
  if (!sp.is_subspace) {
    fail(rep, "the determinant-zero elements must form a subspace");
    return;
  }
  u64 pts = checked_points(sub, cfg);
  std::vector<Matrix> singular, invertible;
  for (u64 i = 0; i < pts; ++i) {
    Matrix m = sub.element_at(i);
    if (det(m) == 0)
      singular.push_back(m);
    else if (invertible.size() * std::max<u64>(sp.count, 1) < cfg.group_budget)
      invertible.push_back(m);
  }
  bool has_identity = sub.contains(Matrix::identity(f, n));
  if (has_identity) {
    for (const Matrix& b : singular)
      if (!is_nilpotent(b)) {
        fail(rep, "every singular element must be nilpotent when the span "
                  "contains the identity");
        rep.witnesses.push_back(render(b));
        return;
      }
  }
  u64 pairs = 0;
  for (const Matrix& a : invertible) {
    Matrix ai = *inverse(a);
    for (const Matrix& b : singular) {
      ++pairs;
      if (!is_nilpotent(ai * b)) {
        fail(rep,
             "A^{-1}B must be nilpotent for invertible A and singular B in "
             "the span");
        rep.witnesses.push_back("A=" + render(a) + ", B=" + render(b));
        return;
      }
    }
  }
  num(rep, "singular_count", sp.count);
  numb(rep, "contains_identity", has_identity);
  num(rep, "invertibles_sampled", u64(invertible.size()));
  num(rep, "pairs_checked", pairs);
}

// invertible-only, prime size, 2d > r: quotients have irreducible
// characteristic polynomials, each shared by at most r elements
void v_irreducible_polynomial(VerdictReport& rep, const MatSubspace* s,
                              const Config& cfg) {
  const MatSubspace& sub = need(s);
  const FieldPtr& f = sub.field();
  u64 q = f->size();
  unsigned n = sub.n(), d = sub.dim();
  num(rep, "q", q);
  num(rep, "r", u64(n));
  num(rep, "d", u64(d));
  if (!is_prime_u64(n)) {
    vacuous(rep, "the matrix size is not prime");
    return;
  }
  if (2 * d <= n) {
    vacuous(rep, "2d > r does not hold");
    return;
  }
  if (count_singular(sub, cfg) != 1) {
    vacuous(rep, "not every nonzero element is invertible");
    return;
  }
  MultiPoly p = det_poly(sub);
  if (!norm_form_witness(p, n, cfg)) {
    vacuous(rep,
            "the determinantal polynomial is not certified irreducible-but-"
            "not-absolutely-irreducible");
    return;
  }
  largeness(rep, q, n, 6, "r");

  u64 pts = checked_points(sub, cfg);
  std::vector<std::vector<Elt>> nz;
  for (u64 i = 1; i < pts; ++i) nz.push_back(sub.coords_at(i));
  bool full_scan = u128(nz.size()) * nz.size() <= cfg.group_budget;
  if (!full_scan)
    rep.caveats.push_back(
        "pair scan budget-limited: the left factor is fixed to the first "
        "nonzero element");
  u64 pairs = 0;
  for (const auto& ca : nz) {
    Matrix a = sub.element(ca);
    Matrix ai = *inverse(a);
    for (const auto& cb : nz) {
      if (coord_dependent(ca, cb, f)) continue;
      UniPoly cp = char_poly(ai * sub.element(cb));
      ++pairs;
      if (cp.deg() != int(n) || !uni_irreducible(cp)) {
        fail(rep,
             "A^{-1}B must have an irreducible characteristic polynomial of "
             "degree r for every independent pair");
        rep.witnesses.push_back("charpoly=" + render(cp));
        num(rep, "pairs_checked", pairs);
        return;
      }
    }
    if (!full_scan) break;
  }
  num(rep, "pairs_checked", pairs);

  // sharing bound for the first invertible left factor
  Matrix a0 = sub.element(nz.front());
  Matrix ai0 = *inverse(a0);
  std::map<std::string, u64> share;
  for (u64 i = 0; i < pts; ++i) {
    UniPoly cp = char_poly(ai0 * sub.element_at(i));
    if (uni_irreducible(cp)) ++share[render(cp)];
  }
  u64 max_share = 0, min_share = pts;
  for (const auto& kv : share) {
    max_share = std::max(max_share, kv.second);
    min_share = std::min(min_share, kv.second);
  }
  num(rep, "distinct_irreducible_charpolys", u64(share.size()));
  num(rep, "max_share", max_share);
  num(rep, "min_share", share.empty() ? 0 : min_share);
  check(rep, max_share <= n,
        "at most r elements may share one irreducible characteristic "
        "polynomial");
  numb(rep, "all_shares_exactly_r",
       !share.empty() && min_share == n && max_share == n);
}

// block construction: invertible-only, all quotients reducible, and a
// budgeted probe for invertibility-preserving enlargements
void v_reducible_polynomials(VerdictReport& rep, const MatSubspace* s,
                             const Config& cfg) {
  const MatSubspace& sub = need(s);
  const FieldPtr& f = sub.field();
  u64 q = f->size();
  unsigned n = sub.n(), d = sub.dim();
  num(rep, "q", q);
  num(rep, "r", u64(n));
  num(rep, "d", u64(d));
  check(rep, count_singular(sub, cfg) == 1,
        "every nonzero element must be invertible");

  u64 pts = checked_points(sub, cfg);
  std::vector<std::vector<Elt>> nz;
  for (u64 i = 1; i < pts; ++i) nz.push_back(sub.coords_at(i));
  bool full_scan = u128(nz.size()) * nz.size() <= cfg.group_budget;
  if (!full_scan)
    rep.caveats.push_back(
        "pair scan budget-limited: the left factor is fixed to the first "
        "nonzero element");
  u64 pairs = 0;
  for (const auto& ca : nz) {
    Matrix ai = *inverse(sub.element(ca));
    for (const auto& cb : nz) {
      if (coord_dependent(ca, cb, f)) continue;
      UniPoly cp = char_poly(ai * sub.element(cb));
      ++pairs;
      if (uni_irreducible(cp)) {
        fail(rep,
             "the characteristic polynomial of A^{-1}B must be reducible for "
             "every independent pair");
        rep.witnesses.push_back("charpoly=" + render(cp));
        break;
      }
    }
    if (!full_scan || !rep.passed) break;
  }
  num(rep, "pairs_checked", pairs);

  // maximality probe: grow by seeded candidates that keep invertibility
  largeness(rep, q, n, 6, "r");
  ExtendOptions opt;
  opt.budget = 1200;
  opt.seed = cfg.seed;
  opt.cap = cfg.affine_cap;
  MatSubspace grown =
      extend_by_property(sub, SpanProperty::all_nonzero_invertible, opt);
  num(rep, "extension_candidates", opt.budget);
  num(rep, "extended_dim", u64(grown.dim()));
  if (grown.dim() > sub.dim()) {
    fail(rep,
         "an invertibility-preserving enlargement was found within the "
         "candidate budget; the subspace is not maximal");
    rep.witnesses.push_back("added=" + render(grown.basis()[sub.dim()]));
  } else {
    rep.caveats.push_back(
        "maximality probed by seeded candidates only; absence of an "
        "enlargement is evidence, not proof");
  }
}

// a singular subspace of codimension n must be zero
void v_codimension_n(VerdictReport& rep, const MatSubspace* s,
                     const Config& cfg) {
  const MatSubspace& sub = need(s);
  unsigned n = sub.n(), d = sub.dim();
  SingularPart sp = singular_part(sub, cfg);
  num(rep, "n", u64(n));
  num(rep, "d", u64(d));
  num(rep, "singular_count", sp.count);
  numb(rep, "singular_is_subspace", sp.is_subspace);
  num(rep, "singular_dim", u64(sp.dim));
  if (!sp.is_subspace) {
    vacuous(rep, "the determinant-zero elements do not form a subspace");
    return;
  }
  if (d - sp.dim != n) {
    vacuous(rep, "the singular subspace does not have codimension n");
    return;
  }
  check(rep, sp.dim == 0,
        "a singular subspace of codimension n must be the zero subspace");
}

// above an invertible-only prime-size core the singular locus loses linearity
// but keeps size of order q^{d-1}
void v_dimension_r_absolutely_irreducible(VerdictReport& rep,
                                          const MatSubspace* s,
                                          const Config& cfg) {
  const MatSubspace& sub = need(s);
  const FieldPtr& f = sub.field();
  u64 q = f->size();
  unsigned n = sub.n(), d = sub.dim();
  num(rep, "q", q);
  num(rep, "r", u64(n));
  num(rep, "d", u64(d));
  if (!is_prime_u64(n)) {
    vacuous(rep, "the matrix size is not prime");
    return;
  }
  if (d <= n) {
    vacuous(rep, "the dimension does not exceed r");
    return;
  }
  // convention: the invertible-only core is spanned by the first r basis
  // matrices
  std::vector<Matrix> head(sub.basis().begin(), sub.basis().begin() + n);
  MatSubspace core(f, n, n, std::move(head));
  rep.caveats.push_back(
      "the invertible-only core is taken to be the span of the first r basis "
      "matrices");
  if (count_singular(core, cfg) != 1) {
    vacuous(rep, "the first r basis matrices do not span an invertible-only "
                 "subspace");
    return;
  }
  largeness(rep, q, n, 6, "r");
  MultiPoly p = det_poly(sub);
  SingularPart sp = singular_part(sub, cfg);
  num(rep, "singular_count", sp.count);
  numb(rep, "singular_is_subspace", sp.is_subspace);
  check(rep, !sp.is_subspace,
        "the determinant-zero elements must not form a subspace once the "
        "dimension exceeds r");
  check(rep, !multi_sqrt(p).has_value(),
        "a square certificate would contradict absolute irreducibility");
  check(rep, !norm_form_witness(p, n, cfg).has_value(),
        "a norm-form certificate would contradict absolute irreducibility");
  ZeroCensus cs = zero_census(p, CensusMode::affine, cfg);
  num(rep, "zeros", cs.N_affine);
  check(rep, cafure_matera_consistent(q, n, d, cs.N_affine),
        "the singular count must be consistent with the q^{d-1}-order bound");
}

// the 3m-dimensional construction: singular part is an m-dimensional
// subspace of rank-2m elements; the printed 3x3 instance has determinantal
// polynomial b(x2^3 + b x3^3)
void v_three_dimensional_subspace(VerdictReport& rep, const MatSubspace* s,
                                  const Config& cfg) {
  const MatSubspace& sub = need(s);
  u64 q = sub.field()->size();
  unsigned n = sub.n(), d = sub.dim();
  num(rep, "q", q);
  num(rep, "n", u64(n));
  num(rep, "d", u64(d));
  if (n % 3 != 0 || d != n) {
    vacuous(rep, "the instance does not have the 3m-by-3m shape");
    return;
  }
  unsigned m = n / 3;
  num(rep, "m", u64(m));
  SingularPart sp = singular_part(sub, cfg);
  num(rep, "singular_count", sp.count);
  num(rep, "singular_dim", u64(sp.dim));
  check(rep, sp.is_subspace,
        "the determinant-zero elements must form a subspace");
  check(rep, sp.is_subspace && sp.dim == m,
        "the singular subspace must have dimension m");
  if (sp.is_subspace) {
    const FieldPtr& f = sub.field();
    u64 nsing = pow_u64(q, sp.dim);
    for (u64 i = 1; i < nsing; ++i) {
      std::vector<Elt> c(d, 0);
      u64 t = i;
      for (const auto& v : sp.basis_coords) {
        Elt coef = Elt(t % q);
        t /= q;
        for (unsigned j = 0; j < d; ++j) c[j] = f->add(c[j], f->mul(coef, v[j]));
      }
      Matrix b = sub.element(c);
      if (rank(b) != 2 * m) {
        fail(rep, "every nonzero singular element must have rank 2m");
        rep.witnesses.push_back(render(b));
        break;
      }
    }
    if (d == 3 && sp.dim == 1)
      check(rep, sp.basis_coords[0] == std::vector<Elt>({1, 0, 0}),
            "the singular line must be spanned by the first basis matrix");
  }
  if (sub.tag() == "ex3") {
    MultiPoly p = det_poly(sub);
    Expo e2{0, 3, 0}, e3{0, 0, 3};
    Elt b = p.coeff(e2);
    bool formula = p.terms().size() == 2 && b != 0 &&
                   p.coeff(e3) == sub.field()->mul(b, b);
    numb(rep, "printed_formula_matches", formula);
    check(rep, formula,
          "the printed instance must have determinantal polynomial "
          "b*x2^3 + b^2*x3^3");
  }
}

// the characteristic-2 4m-dimensional construction: identity inside, singular
// part m-dimensional with square-zero rank-2m elements
void v_example_in_four_dimensions(VerdictReport& rep, const MatSubspace* s,
                                  const Config& cfg) {
  const MatSubspace& sub = need(s);
  const FieldPtr& f = sub.field();
  u64 q = f->size();
  unsigned n = sub.n(), d = sub.dim();
  num(rep, "q", q);
  num(rep, "n", u64(n));
  num(rep, "d", u64(d));
  if (f->characteristic() != 2) {
    vacuous(rep, "the construction lives in characteristic 2");
    return;
  }
  if (n % 4 != 0 || d != n) {
    vacuous(rep, "the instance does not have the 4m-by-4m shape");
    return;
  }
  unsigned m = n / 4;
  num(rep, "m", u64(m));
  check(rep, sub.contains(Matrix::identity(f, n)),
        "the construction must contain the identity");
  SingularPart sp = singular_part(sub, cfg);
  num(rep, "singular_count", sp.count);
  num(rep, "singular_dim", u64(sp.dim));
  check(rep, sp.is_subspace,
        "the determinant-zero elements must form a subspace");
  check(rep, sp.is_subspace && sp.dim == m,
        "the singular subspace must have dimension m");
  if (sp.is_subspace) {
    u64 nsing = pow_u64(q, sp.dim);
    for (u64 i = 1; i < nsing; ++i) {
      std::vector<Elt> c(d, 0);
      u64 t = i;
      for (const auto& v : sp.basis_coords) {
        Elt coef = Elt(t % q);
        t /= q;
        for (unsigned j = 0; j < d; ++j) c[j] = f->add(c[j], f->mul(coef, v[j]));
      }
      Matrix b = sub.element(c);
      if (rank(b) != 2 * m || !(b * b).is_zero()) {
        fail(rep,
             "every nonzero singular element must have rank 2m and square to "
             "zero");
        rep.witnesses.push_back(render(b));
        break;
      }
    }
  }
}

// invertible-only with r < 2d < 2r: only scalars stabilize the span under
// left multiplication, so the induced projective action is free
void v_scalar_multiple_of_identity(VerdictReport& rep, const MatSubspace* s,
                                   const Config& cfg) {
  const MatSubspace& sub = need(s);
  const FieldPtr& f = sub.field();
  u64 q = f->size();
  unsigned n = sub.n(), d = sub.dim();
  num(rep, "q", q);
  num(rep, "r", u64(n));
  num(rep, "d", u64(d));
  if (!is_prime_u64(n) || !(n < 2 * d && 2 * d < 2 * n)) {
    vacuous(rep, "r < 2d < 2r with r prime does not hold");
    return;
  }
  if (count_singular(sub, cfg) != 1) {
    vacuous(rep, "not every nonzero element is invertible");
    return;
  }
  MultiPoly p = det_poly(sub);
  if (!norm_form_witness(p, n, cfg)) {
    vacuous(rep,
            "the determinantal polynomial is not certified irreducible-but-"
            "not-absolutely-irreducible");
    return;
  }
  largeness(rep, q, n, 6, "r");
  u64 stabilizer = 0, nonscalar = 0;
  std::string example;
  bool done = scan_gl(f, n, cfg.group_budget, [&](const Matrix& a) {
    for (const Matrix& m : sub.basis())
      if (!sub.contains(a * m)) return;
    ++stabilizer;
    if (!is_scalar(a)) {
      ++nonscalar;
      if (example.empty()) example = render(a);
    }
  });
  if (!done) {
    rep.caveats.push_back(
        "the GL scan exceeds the group budget; left stabilizer unchecked");
    return;
  }
  num(rep, "left_stabilizer_order", stabilizer);
  num(rep, "nonscalar_stabilizers", nonscalar);
  check(rep, nonscalar == 0,
        "every invertible A with A*span = span must be scalar");
  if (!example.empty()) rep.witnesses.push_back("A=" + example);
  check(rep, stabilizer == q - 1,
        "the left stabilizer must be exactly the q-1 scalars, making the "
        "projective action free");
}

// at dimension r the left stabilizer splits: scalars, or matrices with
// irreducible characteristic polynomial whose powers recover the span
void v_not_necessarily_scalar(VerdictReport& rep, const MatSubspace* s,
                              const Config& cfg) {
  const MatSubspace& sub = need(s);
  const FieldPtr& f = sub.field();
  u64 q = f->size();
  unsigned n = sub.n(), d = sub.dim();
  num(rep, "q", q);
  num(rep, "r", u64(n));
  num(rep, "d", u64(d));
  if (!is_prime_u64(n) || d != n) {
    vacuous(rep, "the dimension does not equal the prime matrix size");
    return;
  }
  if (count_singular(sub, cfg) != 1) {
    vacuous(rep, "not every nonzero element is invertible");
    return;
  }
  // reference invertible element for the cyclic-span comparison
  Matrix c = Matrix::identity(f, n);
  bool have_c = false;
  u64 pts = checked_points(sub, cfg);
  for (u64 i = 1; i < pts && !have_c; ++i) {
    Matrix m = sub.element_at(i);
    if (is_invertible(m)) {
      c = m;
      have_c = true;
    }
  }
  require(have_c, "no invertible element in an invertible-only subspace");

  u64 stabilizer = 0, nonscalar = 0;
  bool dichotomy = true;
  std::string bad;
  bool done = scan_gl(f, n, cfg.group_budget, [&](const Matrix& a) {
    for (const Matrix& m : sub.basis())
      if (!sub.contains(a * m)) return;
    ++stabilizer;
    if (is_scalar(a)) return;
    ++nonscalar;
    UniPoly cp = char_poly(a);
    bool ok = uni_irreducible(cp);
    if (ok) {
      std::vector<Matrix> powers;
      Matrix ak = c;
      for (unsigned k = 0; k < n; ++k) {
        powers.push_back(ak);
        ak = a * ak;
      }
      try {
        MatSubspace cyc(f, n, n, std::move(powers));
        ok = cyc.same_span(sub);
      } catch (const Error&) {
        ok = false;
      }
    }
    if (!ok && dichotomy) {
      dichotomy = false;
      bad = render(a);
    }
  });
  if (!done) {
    rep.caveats.push_back(
        "the GL scan exceeds the group budget; left stabilizer unchecked");
    return;
  }
  num(rep, "left_stabilizer_order", stabilizer);
  num(rep, "nonscalar_stabilizers", nonscalar);
  num(rep, "projective_stabilizer_order", stabilizer / (q - 1));
  check(rep, dichotomy,
        "every non-scalar stabilizer element must have an irreducible "
        "characteristic polynomial and recover the span from its powers");
  if (!bad.empty()) rep.witnesses.push_back("A=" + bad);
}

// centralizer dichotomy: scalars only, or the multiplicative group of a
// degree-r field
void v_centralizer_structure(VerdictReport& rep, const MatSubspace* s,
                             const Config& cfg) {
  const MatSubspace& sub = need(s);
  const FieldPtr& f = sub.field();
  u64 q = f->size();
  unsigned n = sub.n(), d = sub.dim();
  num(rep, "q", q);
  num(rep, "r", u64(n));
  num(rep, "d", u64(d));
  if (!is_prime_u64(n) || 2 * d <= n) {
    vacuous(rep, "2d > r with r prime does not hold");
    return;
  }
  if (!sub.contains(Matrix::identity(f, n))) {
    vacuous(rep, "the subspace does not contain the identity");
    return;
  }
  if (count_singular(sub, cfg) != 1) {
    vacuous(rep, "not every nonzero element is invertible");
    return;
  }
  largeness(rep, q, n, 6, "r");
  GroupAnalysis ga = centralizer(sub, cfg);
  num(rep, "centralizer_dim", u64(ga.centralizer_dim));
  num(rep, "centralizer_order", ga.centralizer_order);
  numb(rep, "field_flag", ga.field_flag);
  u64 qr = pow_u64(q, n);
  check(rep,
        ga.centralizer_order == q - 1 ||
            (ga.field_flag && ga.centralizer_order == qr - 1),
        "the centralizer must be the scalars or the multiplicative group of "
        "a degree-r field");
}

// pure arithmetic: q-1 is coprime to (q^r-1)/(q-1) whenever gcd(r, q-1) = 1
void v_relatively_prime(VerdictReport& rep, const MatSubspace*, const Config&) {
  u64 pairs = 0, coprime_pairs = 0;
  for (u64 r : {3ull, 5ull, 7ull, 11ull, 13ull}) {
    for (u64 q = 2; q <= 64; ++q) {
      if (prime_factors(q).size() != 1) continue;  // prime powers only
      ++pairs;
      u128 quot = (pow_u128(q, unsigned(r)) - 1) / (q - 1);
      // the underlying identity: gcd(q-1, 1+q+...+q^{r-1}) = gcd(q-1, r)
      if (gcd_u128(q - 1, quot) != gcd_u128(q - 1, r)) {
        fail(rep, "gcd(q-1, (q^r-1)/(q-1)) must equal gcd(q-1, r)");
        rep.witnesses.push_back("q=" + std::to_string(q) +
                                ", r=" + std::to_string(r));
        return;
      }
      if (gcd_u128(r, q - 1) == 1) {
        ++coprime_pairs;
        if (gcd_u128(q - 1, quot) != 1) {
          fail(rep,
               "q-1 must be coprime to (q^r-1)/(q-1) when gcd(r, q-1) = 1");
          rep.witnesses.push_back("q=" + std::to_string(q) +
                                  ", r=" + std::to_string(r));
          return;
        }
      }
    }
  }
  num(rep, "grid_pairs", pairs);
  num(rep, "coprime_pairs", coprime_pairs);
}

// conjugation quotient N(M)/C(M): order 1 or r at dimension r, at most r for
// r < 2d < 2r
void v_fixed_point_free_action(VerdictReport& rep, const MatSubspace* s,
                               const Config& cfg) {
  const MatSubspace& sub = need(s);
  const FieldPtr& f = sub.field();
  u64 q = f->size();
  unsigned n = sub.n(), d = sub.dim();
  num(rep, "q", q);
  num(rep, "r", u64(n));
  num(rep, "d", u64(d));
  if (!is_prime_u64(n) || n == 2) {
    vacuous(rep, "the matrix size is not an odd prime");
    return;
  }
  if (gcd_u128(n, q - 1) != 1) {
    vacuous(rep, "r divides q-1");
    return;
  }
  if (!sub.contains(Matrix::identity(f, n)) ||
      count_singular(sub, cfg) != 1) {
    vacuous(rep,
            "the subspace must contain the identity and be invertible-only");
    return;
  }
  bool dim_r = d == n, dim_mid = n < 2 * d && 2 * d < 2 * n;
  if (!dim_r && !dim_mid) {
    vacuous(rep, "the dimension is outside r and the (r/2, r) window");
    return;
  }
  largeness(rep, q, n, 6, "r");
  GroupAnalysis ga = normalizer_quotient(sub, cfg);
  if (ga.skipped) {
    rep.caveats.push_back(
        "the GL scan exceeds the group budget; quotient unchecked");
    return;
  }
  num(rep, "centralizer_order", ga.centralizer_order);
  num(rep, "normalizer_order", *ga.normalizer_order);
  u64 g = *ga.quotient_order;
  num(rep, "quotient_order", g);
  if (dim_r) {
    check(rep, g == 1 || g == n,
          "the conjugation quotient must have order 1 or r at dimension r");
  } else {
    check(rep, g <= n, "the conjugation quotient must have order at most r");
    check(rep, g % 2 == 1, "the conjugation quotient must have odd order");
    // refinement: r elements sharing a characteristic polynomial force the
    // quotient into {1, r}
    u64 pts = checked_points(sub, cfg);
    std::map<std::string, u64> share;
    for (u64 i = 0; i < pts; ++i) {
      Matrix m = sub.element_at(i);
      if (!is_scalar(m)) ++share[render(char_poly(m))];
    }
    bool has_full_share = false;
    for (const auto& kv : share) has_full_share |= kv.second == n;
    numb(rep, "r_elements_share_a_charpoly", has_full_share);
    if (has_full_share)
      check(rep, g == 1 || g == n,
            "with r elements sharing a characteristic polynomial the "
            "quotient order must be 1 or r");
    else
      check(rep, g < n,
            "without r elements sharing a characteristic polynomial the "
            "quotient order must be less than r");
  }
  rep.caveats.push_back(
      "unresolved in general: whether the quotient can be non-trivial of "
      "order less than r; the order is odd, and an abelian quotient is "
      "cyclic");
}

// square detection dichotomy: a base-field square root, or an anti-invariant
// root over the quadratic extension, or neither (decisively non-square)
void v_irreducible_if_not_a_square(VerdictReport& rep, const MatSubspace* s,
                                   const Config& cfg) {
  const MatSubspace& sub = need(s);
  const FieldPtr& f = sub.field();
  MultiPoly p = det_poly(sub);
  if (p.is_zero()) {
    vacuous(rep, "the determinantal polynomial is identically zero");
    return;
  }
  auto g1 = multi_sqrt(p);
  numb(rep, "base_square", g1.has_value());
  if (g1) {
    check(rep, (*g1) * (*g1) == p,
          "the base-field square root must square back to the polynomial");
    rep.witnesses.push_back("sqrt=" + render(*g1));
    return;
  }
  // no base root: look over the quadratic extension
  FieldPtr ext2 = Field::extension_of(f, 2);
  MultiPoly pe = map_coeffs(p, ext2);
  auto g2 = multi_sqrt(pe);
  numb(rep, "quadratic_extension_square", g2.has_value());
  if (g2) {
    check(rep, frobenius_coeffs(*g2, 1) == -(*g2),
          "a square root over the quadratic extension must be anti-invariant "
          "under the field automorphism");
    rep.witnesses.push_back("sqrt=" + render(*g2));
    check(rep, (*g2) * (*g2) == pe,
          "the extension square root must square back to the polynomial");
  } else {
    // decisively non-square; a non-square value is corroborating evidence
    bool nonsquare_value = false;
    if (f->size() % 2 == 1)
      scan_values(p, sub.dim(), cfg, [&](Elt v) {
        if (v != 0 && !f->is_square(v)) nonsquare_value = true;
      });
    numb(rep, "nonsquare_value_found", nonsquare_value);
  }
}

// odd q, even degree, every value a square: the polynomial is itself a
// square once q is large enough
void v_square_polynomial(VerdictReport& rep, const MatSubspace* s,
                         const Config& cfg) {
  const MatSubspace& sub = need(s);
  const FieldPtr& f = sub.field();
  u64 q = f->size();
  unsigned n = sub.n();
  num(rep, "q", q);
  num(rep, "n", u64(n));
  num(rep, "d", u64(sub.dim()));
  MultiPoly p = det_poly(sub);
  if (p.is_zero()) {
    vacuous(rep, "the determinantal polynomial is identically zero");
    return;
  }
  if (q % 2 == 0) {
    vacuous(rep, "even characteristic makes every value a square");
    return;
  }
  if (n % 2 != 0) {
    vacuous(rep, "the degree is odd");
    return;
  }
  bool all_squares = true;
  scan_values(p, sub.dim(), cfg, [&](Elt v) {
    if (!f->is_square(v)) all_squares = false;
  });
  numb(rep, "all_values_squares", all_squares);
  if (!all_squares) {
    vacuous(rep, "not every value is a square");
    return;
  }
  auto root = multi_sqrt(p);
  numb(rep, "square_root_found", root.has_value());
  if (u128(q) > pow_u128(n, 6)) {
    check(rep, root.has_value(),
          "an even-degree polynomial with all values square must be a square "
          "when q > n^6");
    if (root) rep.witnesses.push_back("sqrt=" + render(*root));
  } else {
    largeness(rep, q, n, 6, "n");
    if (root)
      rep.witnesses.push_back("sqrt=" + render(*root));
    else
      rep.caveats.push_back(
          "no polynomial square root exists, so the all-values-square "
          "behaviour is genuinely non-split at this size");
  }
}

// invertible-only with all determinants nonzero squares: even size, and the
// dimension is at most half the size for large q
void v_subspace_of_squares(VerdictReport& rep, const MatSubspace* s,
                           const Config& cfg) {
  const MatSubspace& sub = need(s);
  const FieldPtr& f = sub.field();
  u64 q = f->size();
  unsigned n = sub.n(), d = sub.dim();
  num(rep, "q", q);
  num(rep, "n", u64(n));
  num(rep, "d", u64(d));
  if (q % 2 == 0) {
    vacuous(rep, "even characteristic makes every value a square");
    return;
  }
  MultiPoly p = det_poly(sub);
  bool invertible_only = true, squares_only = true;
  u64 zeros = 0;
  scan_values(p, d, cfg, [&](Elt v) {
    if (v == 0)
      ++zeros;
    else if (!f->is_square(v))
      squares_only = false;
  });
  invertible_only = zeros == 1;
  numb(rep, "invertible_only", invertible_only);
  numb(rep, "determinants_all_squares", squares_only);
  if (!invertible_only || !squares_only) {
    vacuous(rep, "the subspace is not invertible-only with square "
                 "determinants");
    return;
  }
  check(rep, n % 2 == 0, "the matrix size must be even");
  if (n % 2 != 0) return;
  unsigned m = n / 2;
  num(rep, "m", u64(m));
  numb(rep, "dimension_at_most_m", d <= m);
  if (u128(q) >= pow_u128(n, 6)) {
    check(rep, d <= m,
          "the dimension must be at most n/2 once q reaches n^6");
  } else {
    std::ostringstream os;
    os << "hypothesis q >= n^6 not met (q=" << q << ", n=" << n
       << "); the dimension bound is recorded but not scored";
    rep.caveats.push_back(os.str());
  }
}

// all determinants square and the identity inside (possibly after
// translation): every characteristic polynomial is the square of a monic
void v_characteristic_polynomial_a_square(VerdictReport& rep,
                                          const MatSubspace* s,
                                          const Config& cfg) {
  const MatSubspace& sub = need(s);
  const FieldPtr& f = sub.field();
  u64 q = f->size();
  unsigned n = sub.n(), d = sub.dim();
  num(rep, "q", q);
  num(rep, "n", u64(n));
  num(rep, "d", u64(d));
  if (q % 2 == 0) {
    vacuous(rep, "even characteristic makes every value a square");
    return;
  }
  if (n % 2 != 0) {
    vacuous(rep, "the matrix size is odd");
    return;
  }
  unsigned m = n / 2;
  MultiPoly p = det_poly(sub);
  bool squares_only = true;
  scan_values(p, d, cfg, [&](Elt v) {
    if (!f->is_square(v)) squares_only = false;
  });
  numb(rep, "determinants_all_squares", squares_only);
  if (!squares_only) {
    vacuous(rep, "some determinant is a non-square");
    return;
  }
  MatSubspace work = sub;
  if (!sub.contains(Matrix::identity(f, n))) {
    u64 pts = checked_points(sub, cfg);
    bool translated = false;
    for (u64 i = 1; i < pts && !translated; ++i) {
      Matrix a = sub.element_at(i);
      if (is_invertible(a)) {
        work = translate_to_identity(a, sub);
        translated = true;
      }
    }
    if (!translated) {
      vacuous(rep, "no invertible element is available for translation");
      return;
    }
    rep.caveats.push_back(
        "identity obtained by translating with the inverse of the first "
        "invertible element");
  }
  if (u128(q) <= u128(64) * pow_u128(m, 6)) {
    std::ostringstream os;
    os << "hypothesis q > 64*m^6 not met (q=" << q << ", m=" << m
       << "); checking the conclusion empirically";
    rep.caveats.push_back(os.str());
  }
  u64 pts = checked_points(work, cfg);
  u64 checked = 0;
  for (u64 i = 0; i < pts; ++i) {
    Matrix a = work.element_at(i);
    UniPoly cp = char_poly(a);
    auto root = uni_sqrt(cp);
    ++checked;
    if (!root) {
      fail(rep,
           "every characteristic polynomial must be the square of a monic "
           "polynomial");
      rep.witnesses.push_back("charpoly=" + render(cp));
      break;
    }
  }
  num(rep, "elements_checked", checked);
}

// exact rank distributions against the determinantal lower bounds
void v_elements_of_given_rank(VerdictReport& rep, const MatSubspace* s,
                              const Config& cfg) {
  const MatSubspace& sub = need(s);
  RankCensus rc = rank_census(sub, cfg);
  num(rep, "q", rc.q);
  num(rep, "d", u64(rc.d));
  num(rep, "shape", std::to_string(rc.rows) + "x" + std::to_string(rc.cols));
  numb(rep, "skew", rc.skew);
  std::ostringstream counts;
  for (const auto& kv : rc.counts)
    counts << (kv.first ? " " : "") << kv.first << ":" << kv.second;
  num(rep, "rank_counts", counts.str());
  for (const RankBound& b : rc.bounds) {
    std::ostringstream line;
    line << b.bound << " <= " << b.observed << (b.holds ? "" : " VIOLATED")
         << (b.informational ? " (informational)" : "");
    num(rep, b.name, line.str());
    if (!b.informational)
      check(rep, b.holds, "the " + b.name + " lower bound must hold");
  }
}

// ---------------------------------------------------------------------------
// catalogue table

using CheckFn = void (*)(VerdictReport&, const MatSubspace*, const Config&);

struct Entry {
  const char* id;
  CheckFn fn;
};

const Entry kCatalogue[] = {
    {"field_size", v_field_size},
    {"homogeneous", v_homogeneous},
    {"subspace_of_invertibles", v_subspace_of_invertibles},
    {"lang_weil", v_lang_weil},
    {"irreducible_but_not_absolutely", v_irreducible_but_not_absolutely},
    {"subspace_of_determinant_zero", v_subspace_of_determinant_zero},
    {"same_characteristic_polynomial", v_same_characteristic_polynomial},
    {"nilpotent", v_nilpotent},
    {"irreducible_polynomial", v_irreducible_polynomial},
    {"reducible_polynomials", v_reducible_polynomials},
    {"codimension_n", v_codimension_n},
    {"dimension_r_absolutely_irreducible",
     v_dimension_r_absolutely_irreducible},
    {"three_dimensional_subspace", v_three_dimensional_subspace},
    {"example_in_four_dimensions", v_example_in_four_dimensions},
    {"scalar_multiple_of_identity", v_scalar_multiple_of_identity},
    {"not_necessarily_scalar_multiple_of_identity", v_not_necessarily_scalar},
    {"centralizer_structure", v_centralizer_structure},
    {"relatively_prime", v_relatively_prime},
    {"fixed_point_free_action", v_fixed_point_free_action},
    {"irreducible_if_not_a_square", v_irreducible_if_not_a_square},
    {"square_polynomial", v_square_polynomial},
    {"subspace_of_squares", v_subspace_of_squares},
    {"characteristic_polynomial_a_square",
     v_characteristic_polynomial_a_square},
    {"elements_of_given_rank", v_elements_of_given_rank},
};

// ---------------------------------------------------------------------------
// designated suite instances

MatSubspace full_space(const FieldPtr& f, unsigned n) {
  std::vector<Matrix> basis;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      Matrix e(f, n, n);
      e.set(i, j, 1);
      basis.push_back(e);
    }
  return MatSubspace::make(f, n, std::move(basis), "full");
}

MatSubspace diagonal_space(const FieldPtr& f, unsigned n) {
  std::vector<Matrix> basis;
  for (unsigned i = 0; i < n; ++i) {
    Matrix e(f, n, n);
    e.set(i, i, 1);
    basis.push_back(e);
  }
  return MatSubspace::make(f, n, std::move(basis), "diagonal");
}

MatSubspace skew_space(const FieldPtr& f, unsigned n) {
  std::vector<Matrix> basis;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      Matrix e(f, n, n);
      e.set(i, j, 1);
      e.set(j, i, f->neg(1));
      basis.push_back(e);
    }
  return MatSubspace::make(f, n, std::move(basis), "skew");
}

MatSubspace scalar_line(u64 q, unsigned n) {
  FieldPtr f = Field::of_order(q);
  return MatSubspace::make(f, n, {Matrix::identity(f, n)}, "scalar-line");
}

// det(x1 I + x2 M2) = x1^6 - x1^2 x2^4 + x2^6 over F_3: every value on F_3^2
// is a square, yet the polynomial has no square root
MatSubspace square_valued_pair() {
  FieldPtr f3 = Field::prime_field(3);
  Matrix c(f3, 6, 6);
  for (unsigned i = 1; i < 6; ++i) c.set(i, i - 1, 1);
  c.set(0, 5, 2);
  c.set(2, 5, 1);
  std::vector<Matrix> basis{Matrix::identity(f3, 6), c.scaled(2)};
  return MatSubspace::make(f3, 6, std::move(basis), "square-valued-pair");
}

// det = 2(x1+x2)^2 over F_3: the square root lives in F_9 and is
// anti-invariant under the automorphism
MatSubspace conjugate_root_pair() {
  FieldPtr f3 = Field::prime_field(3);
  Matrix a = Matrix::from_rows(f3, {{1, 0}, {0, 2}});
  Matrix b = Matrix::from_rows(f3, {{1, 1}, {0, 2}});
  return MatSubspace::make(f3, 2, {a, b}, "conjugate-root-pair");
}

// invertible skew element plus an independent skew partner
MatSubspace skew_pair4(u64 q) {
  FieldPtr f = Field::of_order(q);
  Matrix j(f, 4, 4);
  j.set(0, 1, 1);
  j.set(1, 0, f->neg(1));
  j.set(2, 3, 1);
  j.set(3, 2, f->neg(1));
  Matrix m(f, 4, 4);
  m.set(0, 1, 1);
  m.set(1, 0, f->neg(1));
  m.set(0, 2, 1);
  m.set(2, 0, f->neg(1));
  m.set(1, 3, 1);
  m.set(3, 1, f->neg(1));
  return MatSubspace::make(f, 4, {j, m}, "skew-pair");
}

MatSubspace skew_pair6(u64 q) {
  FieldPtr f = Field::of_order(q);
  Matrix j(f, 6, 6);
  for (unsigned k = 0; k < 3; ++k) {
    j.set(2 * k, 2 * k + 1, 1);
    j.set(2 * k + 1, 2 * k, f->neg(1));
  }
  Matrix m(f, 6, 6);
  m.set(0, 2, 1);
  m.set(2, 0, f->neg(1));
  m.set(1, 3, 1);
  m.set(3, 1, f->neg(1));
  m.set(2, 4, 1);
  m.set(4, 2, f->neg(1));
  m.set(3, 5, 1);
  m.set(5, 3, f->neg(1));
  m.set(0, 5, 1);
  m.set(5, 0, f->neg(1));
  return MatSubspace::make(f, 6, {j, m}, "skew-pair");
}

MatSubspace field_plus_unit() {
  FieldPtr f2 = Field::prime_field(2);
  MatSubspace fs = field_subspace(f2, 3);
  std::vector<Matrix> basis = fs.basis();
  Matrix e(f2, 3, 3);
  e.set(0, 0, 1);
  basis.push_back(e);
  return MatSubspace::make(f2, 3, std::move(basis), "field-plus-unit");
}

MatSubspace field_pair() {
  FieldPtr f2 = Field::prime_field(2);
  MatSubspace fs = field_subspace(f2, 3);
  return MatSubspace::make(f2, 3, {fs.basis()[0], fs.basis()[1]},
                           "field-pair");
}

MatSubspace rect_pair() {
  FieldPtr f3 = Field::prime_field(3);
  Matrix a = Matrix::from_rows(
      f3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  Matrix b = Matrix::from_rows(
      f3, {{0, 1, 0, 1}, {0, 0, 1, 0}, {1, 0, 0, 2}});
  return MatSubspace(f3, 3, 4, {a, b}, "rect-pair");
}

MatSubspace square_diagonal_line() {
  FieldPtr f5 = Field::prime_field(5);
  return MatSubspace::make(f5, 2, {Matrix::diagonal(f5, {1, 4})},
                           "square-diagonal-line");
}

}  // namespace

// ---------------------------------------------------------------------------
// public entry points

GroupAnalysis centralizer(const MatSubspace& sub, const Config& cfg) {
  require(sub.is_square(), "centralizer needs a subspace of square matrices");
  const FieldPtr& f = sub.field();
  unsigned n = sub.n();
  // stacked system: for each basis matrix M, (CM - MC)_{ab} = 0 for all a, b
  std::vector<std::vector<Elt>> rows;
  rows.reserve(size_t(sub.dim()) * n * n);
  for (const Matrix& m : sub.basis()) {
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b) {
        std::vector<Elt> row(size_t(n) * n, 0);
        for (unsigned v = 0; v < n; ++v)
          row[size_t(a) * n + v] = f->add(row[size_t(a) * n + v], m.at(v, b));
        for (unsigned u = 0; u < n; ++u)
          row[size_t(u) * n + b] = f->sub(row[size_t(u) * n + b], m.at(a, u));
        rows.push_back(std::move(row));
      }
  }
  Matrix sys(f, unsigned(rows.size()), n * n);
  for (unsigned i = 0; i < rows.size(); ++i)
    for (unsigned j = 0; j < n * n; ++j) sys.set(i, j, rows[i][j]);
  std::vector<std::vector<Elt>> ker = kernel_basis(sys);

  GroupAnalysis out;
  out.centralizer_dim = unsigned(ker.size());
  u64 q = f->size();
  u128 total = pow_u128(q, out.centralizer_dim);
  require(total <= cfg.affine_cap,
          "centralizer enumeration exceeds the affine cap");
  std::vector<Matrix> kb;
  for (const auto& v : ker) {
    Matrix k(f, n, n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) k.set(i, j, v[size_t(i) * n + j]);
    kb.push_back(std::move(k));
  }
  u64 invertibles = 0;
  for (u64 idx = 1; idx < u64(total); ++idx) {
    u64 t = idx;
    Matrix c(f, n, n);
    for (const Matrix& k : kb) {
      Elt coef = Elt(t % q);
      t /= q;
      if (coef) c = c + k.scaled(coef);
    }
    if (is_invertible(c)) ++invertibles;
  }
  out.centralizer_order = invertibles;
  bool commutative = true;
  for (size_t i = 0; i < kb.size() && commutative; ++i)
    for (size_t j = i + 1; j < kb.size() && commutative; ++j)
      commutative = kb[i] * kb[j] == kb[j] * kb[i];
  out.field_flag = commutative && total >= 1 && invertibles == u64(total) - 1;
  return out;
}

GroupAnalysis normalizer_quotient(const MatSubspace& sub, const Config& cfg) {
  GroupAnalysis out = centralizer(sub, cfg);
  const FieldPtr& f = sub.field();
  unsigned n = sub.n();
  u64 count = 0;
  bool done = scan_gl(f, n, cfg.group_budget, [&](const Matrix& a) {
    Matrix ai = *inverse(a);
    for (const Matrix& m : sub.basis())
      if (!sub.contains(a * m * ai)) return;
    ++count;
  });
  if (!done) {
    out.skipped = true;
    return out;
  }
  out.normalizer_order = count;
  require(out.centralizer_order != 0 && count % out.centralizer_order == 0,
          "the centralizer order must divide the normalizer order");
  out.quotient_order = count / out.centralizer_order;
  return out;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const Entry& e : kCatalogue) v.emplace_back(e.id);
    return v;
  }();
  return ids;
}

VerdictReport verify(const std::string& theorem_id, const MatSubspace* sub,
                     const Config& cfg) {
  for (const Entry& e : kCatalogue) {
    if (theorem_id != e.id) continue;
    VerdictReport rep;
    rep.theorem_id = theorem_id;
    rep.instance = sub ? describe_instance(*sub) : "(q, r) arithmetic grid";
    rep.passed = true;
    e.fn(rep, sub, cfg);
    return rep;
  }
  throw Error("unknown theorem id: " + theorem_id);
}

SuiteResult verify_suite(const Config& cfg) {
  SuiteResult out;
  auto run = [&](const char* id, const MatSubspace* sub) {
    out.reports.push_back(verify(id, sub, cfg));
    out.all_passed = out.all_passed && out.reports.back().passed;
  };
  FieldPtr f2 = Field::prime_field(2);
  FieldPtr f3 = Field::prime_field(3);
  FieldPtr f4 = Field::of_order(4);

  {
    MatSubspace a = ex1(), b = ex2();
    run("field_size", &a);
    run("field_size", &b);
  }
  {
    MatSubspace a = ex2(), b = field_subspace(f3, 2);
    run("homogeneous", &a);
    run("homogeneous", &b);
  }
  {
    MatSubspace a = field_subspace(f2, 3), b = field_subspace(f3, 3);
    run("subspace_of_invertibles", &a);
    run("subspace_of_invertibles", &b);
  }
  {
    MatSubspace a = full_space(Field::prime_field(7), 2);
    MatSubspace b = full_space(Field::prime_field(11), 2);
    run("lang_weil", &a);
    run("lang_weil", &b);
  }
  {
    MatSubspace a = field_subspace(f2, 3), b = field_subspace(f3, 3);
    run("irreducible_but_not_absolutely", &a);
    run("irreducible_but_not_absolutely", &b);
  }
  {
    MatSubspace insts[] = {ex3(7, 3), field_subspace(f2, 3),
                           field_subspace(f3, 3), field_subspace(f2, 5),
                           field_subspace(f4, 3)};
    for (const MatSubspace& m : insts) run("subspace_of_determinant_zero", &m);
  }
  {
    MatSubspace a = thm4_1(3);
    MatSubspace e3 = ex3(7, 3);
    MatSubspace b = translate_to_identity(e3.basis()[1], e3);
    run("same_characteristic_polynomial", &a);
    run("same_characteristic_polynomial", &b);
  }
  {
    MatSubspace insts[] = {ex3(7, 3), field_subspace(f3, 3), thm4_1(3)};
    for (const MatSubspace& m : insts) run("nilpotent", &m);
  }
  {
    MatSubspace insts[] = {field_subspace(f2, 3), field_subspace(f3, 3),
                           field_subspace(f2, 5), field_subspace(f4, 3)};
    for (const MatSubspace& m : insts) run("irreducible_polynomial", &m);
  }
  {
    MatSubspace insts[] = {thm3_7(2, 2), thm3_7(3, 2), thm3_7(2, 3)};
    for (const MatSubspace& m : insts) run("reducible_polynomials", &m);
  }
  {
    MatSubspace a = field_subspace(f2, 3), b = field_subspace(f3, 3);
    run("codimension_n", &a);
    run("codimension_n", &b);
  }
  {
    MatSubspace a = field_plus_unit();
    run("dimension_r_absolutely_irreducible", &a);
  }
  {
    MatSubspace insts[] = {thm4_1(2), thm4_1(3), thm4_1(5), ex3(7, 3),
                           field_reduction(thm4_1(4), f2)};
    for (const MatSubspace& m : insts) run("three_dimensional_subspace", &m);
  }
  {
    MatSubspace insts[] = {thm4_4(2), thm4_4(4),
                           field_reduction(thm4_4(4), f2)};
    for (const MatSubspace& m : insts) run("example_in_four_dimensions", &m);
  }
  {
    MatSubspace a = field_pair();
    run("scalar_multiple_of_identity", &a);
  }
  {
    MatSubspace a = field_subspace(f2, 3);
    run("not_necessarily_scalar_multiple_of_identity", &a);
  }
  {
    MatSubspace a = field_subspace(f2, 3), b = field_subspace(f3, 3);
    run("centralizer_structure", &a);
    run("centralizer_structure", &b);
  }
  run("relatively_prime", nullptr);
  {
    MatSubspace a = field_subspace(f2, 3), b = field_subspace(f3, 3);
    run("fixed_point_free_action", &a);
    run("fixed_point_free_action", &b);
  }
  {
    MatSubspace insts[] = {skew_space(f3, 4), conjugate_root_pair(),
                           field_subspace(f3, 2)};
    for (const MatSubspace& m : insts) run("irreducible_if_not_a_square", &m);
  }
  {
    MatSubspace a = scalar_line(67, 2), b = square_valued_pair();
    run("square_polynomial", &a);
    run("square_polynomial", &b);
  }
  {
    MatSubspace a = scalar_line(67, 2), b = square_diagonal_line();
    run("subspace_of_squares", &a);
    run("subspace_of_squares", &b);
  }
  {
    MatSubspace a = skew_pair4(3), b = skew_pair6(5);
    run("characteristic_polynomial_a_square", &a);
    run("characteristic_polynomial_a_square", &b);
  }
  {
    MatSubspace insts[] = {diagonal_space(f3, 3), field_subspace(f2, 3),
                           thm3_7(2, 2), rect_pair(), skew_space(f3, 4)};
    for (const MatSubspace& m : insts) run("elements_of_given_rank", &m);
  }
  return out;
}

}  // namespace detspace
