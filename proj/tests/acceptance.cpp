// Acceptance gate: ten end-to-end checks over the whole toolkit, each printed
// as one pass/fail line. Every numeric claim is either compared against an
// independent oracle implemented in this file (cofactor determinants,
// brute-force matrix enumeration, exhaustive trial division) or against a
// frozen exact value. Exits nonzero when any criterion fails.

#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "detspace/cli.hpp"
#include "detspace/detkit.hpp"
#include "detspace/theorems.hpp"

using namespace detspace;

namespace {

int g_failures = 0;
std::ostringstream g_log;

void note(const std::string& line) { g_log << "    " << line << '\n'; }

void expect(bool ok, const std::string& what) {
  if (!ok) note("failed: " + what);
  if (!ok) throw int(0);  // unwound by run(); keeps later criteria running
}

bool soft(bool ok, const std::string& what) {
  if (!ok) note("failed: " + what);
  return ok;
}

void run(int index, const std::string& label, bool (*fn)()) {
  g_log.str("");
  bool ok = false;
  try {
    ok = fn();
  } catch (int) {
    ok = false;
  } catch (const Error& e) {
    note(std::string("error: ") + e.what());
  }
  std::printf("criterion %2d  %s  %s\n", index, ok ? "PASS" : "FAIL",
              label.c_str());
  std::fputs(g_log.str().c_str(), stdout);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

// ---------------------------------------------------------------------------
// independent oracles

// symbolic determinant by recursive first-row cofactor expansion
MultiPoly cofactor_det(const std::vector<std::vector<MultiPoly>>& m,
                       const FieldPtr& f, unsigned nvars) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  MultiPoly acc(f, nvars);
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    MultiPoly term = m[0][j] * cofactor_det(minor, f, nvars);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

MultiPoly symbolic_det_by_cofactors(const MatSubspace& sub) {
  const FieldPtr& f = sub.field();
  unsigned n = sub.n(), d = sub.dim();
  std::vector<std::vector<MultiPoly>> entries(
      n, std::vector<MultiPoly>(n, MultiPoly(f, d)));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned k = 0; k < d; ++k) {
        Expo e(d, 0);
        e[k] = 1;
        entries[i][j].add_term(e, sub.basis()[k].at(i, j));
      }
  return cofactor_det(entries, f, d);
}

u128 gcd_u128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_scalar_matrix(const Matrix& m) {
  return m == Matrix::identity(m.field(), m.rows()).scaled(m.at(0, 0));
}

Matrix random_skew(const FieldPtr& f, unsigned n, SeededRng& rng) {
  Matrix m(f, n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      Elt e = rng.below(f->size());
      m.set(i, j, e);
      m.set(j, i, f->neg(e));
    }
  return m;
}

Matrix random_invertible_skew(const FieldPtr& f, unsigned n, SeededRng& rng) {
  for (int tries = 0; tries < 1000; ++tries) {
    Matrix m = random_skew(f, n, rng);
    if (is_invertible(m)) return m;
  }
  throw Error("no invertible skew matrix found in 1000 draws");
}

MatSubspace generic_skew_space(const FieldPtr& f, unsigned n) {
  std::vector<Matrix> basis;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      Matrix m(f, n, n);
      m.set(i, j, 1);
      m.set(j, i, f->neg(1));
      basis.push_back(m);
    }
  return MatSubspace::make(f, n, std::move(basis), "skew");
}

MatSubspace diagonal_space(const FieldPtr& f, unsigned n) {
  std::vector<Matrix> basis;
  for (unsigned i = 0; i < n; ++i) {
    Matrix m(f, n, n);
    m.set(i, i, 1);
    basis.push_back(m);
  }
  return MatSubspace::make(f, n, std::move(basis), "diagonal");
}

MatSubspace full_space(const FieldPtr& f, unsigned n) {
  std::vector<Matrix> basis;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      Matrix m(f, n, n);
      m.set(i, j, 1);
      basis.push_back(m);
    }
  return MatSubspace::make(f, n, std::move(basis), "full");
}

// ---------------------------------------------------------------------------
// 1. the two printed diagonal examples

bool c1() {
  MatSubspace a = ex1();
  FieldPtr f2 = a.field();
  MultiPoly p1 = det_poly(a);
  MultiPoly want1 = MultiPoly::monomial(f2, 2, {2, 1}, 1) +
                    MultiPoly::monomial(f2, 2, {1, 2}, 1);
  expect(p1 == want1, "first diagonal example formula");

  MatSubspace b = ex2();
  FieldPtr f3 = b.field();
  MultiPoly x1 = MultiPoly::var(f3, 2, 0), x2 = MultiPoly::var(f3, 2, 1);
  MultiPoly want2 = x1 * x2 * (x1 + x2) * (x1 - x2);
  expect(det_poly(b) == want2, "second diagonal example formula");

  Config cfg;
  ZeroCensus ca = zero_census(p1, CensusMode::affine, cfg);
  expect(ca.N_affine == 4 && a.point_count() == 4,
         "first census must cover all 4 points");
  ZeroCensus cb = zero_census(det_poly(b), CensusMode::affine, cfg);
  expect(cb.N_affine == 9 && b.point_count() == 9,
         "second census must cover all 9 points");

  for (MatSubspace* s : {&a, &b}) {
    VerdictReport rep = verify("field_size", s, cfg);
    expect(rep.passed && rep.caveats.empty(),
           "small-field flag must fire non-vacuously on " + s->tag());
    expect(s->field()->size() < s->n(), "q < n on " + s->tag());
  }
  note("both identically-vanishing examples flagged with q < n");
  return true;
}

// ---------------------------------------------------------------------------
// 2. the three-dimensional construction with a cube parameter

bool c2() {
  MatSubspace sub = ex3(7, 3);
  FieldPtr f = sub.field();
  MultiPoly p = det_poly(sub);
  MultiPoly want = MultiPoly::monomial(f, 3, {0, 3, 0}, 3) +
                   MultiPoly::monomial(f, 3, {0, 0, 3}, 2);
  expect(p == want, "formula must reduce to 3*x2^3 + 2*x3^3");
  expect(p == symbolic_det_by_cofactors(sub),
         "independent cofactor expansion must agree");

  Config cfg;
  SingularPart sp = singular_part(sub, cfg);
  expect(sp.is_subspace && sp.dim == 1 && sp.count == 7,
         "singular locus must be a line");
  MatSubspace line = MatSubspace::make(f, 3, sp.basis);
  MatSubspace first = MatSubspace::make(f, 3, {sub.basis()[0]});
  expect(line.same_span(first), "singular line must be spanned by the first "
                                "basis matrix");

  auto w = norm_form_witness(p, 3, cfg);
  expect(w.has_value(), "norm-form witness must exist");
  // full re-verification: the witness product must reproduce every coefficient
  const FieldPtr& E = w->ext;
  MultiPoly form(E, 3);
  for (unsigned j = 0; j < 3; ++j) {
    Expo e(3, 0);
    e[j] = 1;
    form.add_term(e, w->omega[j]);
  }
  MultiPoly prod = MultiPoly::constant(E, 3, w->lambda);
  for (unsigned i = 0; i < w->r; ++i) prod = prod * frobenius_coeffs(form, i);
  expect(map_coeffs(p, E) == prod,
         "witness product must reproduce the polynomial coefficient by "
         "coefficient");
  note("witness: lambda=" + std::to_string(w->lambda) + " over " +
       E->describe());
  return true;
}

// ---------------------------------------------------------------------------
// 3. the two trace-form constructions and their scalar reductions

bool c3() {
  Config cfg;
  for (u64 q : {u64(2), u64(3), u64(4), u64(5), u64(7)}) {
    MatSubspace sub = thm4_1(q);
    SingularPart sp = singular_part(sub, cfg);
    expect(sp.count == q, "singular count must be q at q=" + std::to_string(q));
    expect(sp.is_subspace && sp.dim == 1, "singular part must be a line");
    MatSubspace line = MatSubspace::make(sub.field(), 3, sp.basis);
    MatSubspace sigma = MatSubspace::make(sub.field(), 3, {sub.basis()[0]});
    expect(line.same_span(sigma),
           "singular line must be the difference-map span at q=" +
               std::to_string(q));
    for (u64 i = 1; i < line.point_count(); ++i)
      expect(rank(line.element_at(i)) == 2,
             "every nonzero singular element must have rank 2");
  }
  note("cubic construction: q singular elements on the expected line, rank 2");

  for (u64 q : {u64(2), u64(4)}) {
    MatSubspace sub = thm4_4(q);
    expect(sub.contains(Matrix::identity(sub.field(), 4)),
           "identity must lie in the span at q=" + std::to_string(q));
    SingularPart sp = singular_part(sub, cfg);
    expect(sp.is_subspace && sp.dim == 1 && sp.count == q,
           "singular part must be a line at q=" + std::to_string(q));
    MatSubspace line = MatSubspace::make(sub.field(), 4, sp.basis);
    for (u64 i = 1; i < line.point_count(); ++i) {
      Matrix t = line.element_at(i);
      expect((t * t).is_zero(), "singular elements must square to zero");
      expect(rank(t) == 2, "singular elements must have rank 2");
    }
  }
  note("quartic construction: nilpotent singular line, identity inside");

  FieldPtr f2 = Field::prime_field(2);
  for (unsigned m : {2u, 3u}) {
    MatSubspace over = thm4_1(pow_u64(2, m));
    MatSubspace red = field_reduction(over, f2);
    expect(red.dim() == 3 * m && red.n() == 3 * m,
           "reduction must have dimension 3m at m=" + std::to_string(m));
    SingularPart sp = singular_part(red, cfg);
    expect(sp.is_subspace && sp.dim == m,
           "reduced singular part must have dimension m");
    MatSubspace sing = MatSubspace::make(f2, 3 * m, sp.basis);
    for (u64 i = 1; i < sing.point_count(); ++i)
      expect(rank(sing.element_at(i)) == 2 * m,
             "reduced singular elements must have rank 2m");
  }
  note("scalar reduction: dim-3m spaces with dim-m singular parts of rank 2m");
  return true;
}

// ---------------------------------------------------------------------------
// 4. invertible-only block constructions: pair reducibility and maximality

bool c4() {
  Config cfg;
  bool all_ok = true;
  for (auto [q, d] : std::vector<std::pair<u64, unsigned>>{
           {2, 2}, {3, 2}, {2, 3}}) {
    std::string at = "(q=" + std::to_string(q) + ", d=" + std::to_string(d) +
                     ")";
    MatSubspace sub = thm3_7(q, d);
    SingularPart sp = singular_part(sub, cfg);
    expect(sp.count == 1, "all nonzero elements must be invertible at " + at);

    u64 pts = sub.point_count();
    for (u64 i = 1; i < pts; ++i) {
      Matrix a = sub.element_at(i);
      Matrix ai = *inverse(a);
      for (u64 j = 1; j < pts; ++j) {
        // skip pairs on a common line through the origin
        std::vector<std::vector<Elt>> rows = {sub.coords_at(i),
                                              sub.coords_at(j)};
        if (rref_rows(rows, sub.field()) < 2) continue;
        expect(!uni_irreducible(char_poly(ai * sub.element_at(j))),
               "independent pairs must have reducible characteristic "
               "polynomials at " +
                   at);
      }
    }

    ExtendOptions opt;
    opt.budget = 1200;
    opt.seed = cfg.seed;
    MatSubspace grown =
        extend_by_property(sub, SpanProperty::all_nonzero_invertible, opt);
    if (grown.dim() == sub.dim()) {
      note(at + ": no invertibility-preserving enlargement in 1200 seeded "
                "candidates");
    } else {
      // decisive counterexample: re-verify the enlargement exhaustively
      bool real = true;
      for (u64 i = 1; i < grown.point_count(); ++i)
        real = real && is_invertible(grown.element_at(i));
      note(at + ": FAIL, an invertibility-preserving enlargement of dimension " +
           std::to_string(grown.dim()) +
           (real ? " exists (re-verified exhaustively: every nonzero element "
                   "of the grown span is invertible)"
                 : " was reported but does not re-verify"));
      note(at + ": the no-enlargement conclusion is asymptotic and genuinely "
                "fails at this size; see the rank-" +
           std::to_string(sub.n()) + " span of the added matrix");
      all_ok = false;
    }
  }
  return all_ok;
}

// ---------------------------------------------------------------------------
// 5. field subspaces: irreducibility and shared characteristic polynomials

bool c5() {
  Config cfg;
  for (auto [q, r] : std::vector<std::pair<u64, unsigned>>{
           {2, 3}, {3, 3}, {2, 5}, {4, 3}}) {
    std::string at = "(q=" + std::to_string(q) + ", r=" + std::to_string(r) +
                     ")";
    MatSubspace sub = field_subspace(Field::of_order(q), r);
    Classification cl = classify(sub, cfg);
    expect(cl.chevalley_irreducible,
           "degree-vs-zero-count irreducibility must fire at " + at);
    expect(cl.witness.has_value() && cl.norm_form,
           "norm-form witness must be found at " + at);
    expect(cl.census.N_affine == 1, "singular part must be {0} at " + at);

    std::map<std::string, u64> share;
    for (u64 i = 0; i < sub.point_count(); ++i) {
      Matrix m = sub.element_at(i);
      if (is_scalar_matrix(m)) continue;
      UniPoly cp = char_poly(m);
      expect(cp.deg() == int(r) && uni_irreducible(cp),
             "non-scalar elements must have irreducible degree-r "
             "characteristic polynomials at " +
                 at);
      ++share[render(cp)];
    }
    for (const auto& kv : share)
      expect(kv.second == r,
             "exactly r elements must share " + kv.first + " at " + at);

    VerdictReport rep = verify("irreducible_polynomial", &sub, cfg);
    expect(rep.passed, "catalogue check must pass at " + at);
    bool caveat = false;
    for (const std::string& c : rep.caveats)
      caveat = caveat || c.find("r^6") != std::string::npos;
    expect(caveat, "the small-q caveat must be recorded at " + at);
  }
  note("all four field subspaces: witness found, classes of size exactly r, "
       "small-q caveat recorded");
  return true;
}

// ---------------------------------------------------------------------------
// 6. full two-by-two spaces: exact censuses against brute force

bool c6() {
  Config cfg;
  for (u64 q : {u64(3), u64(5), u64(7), u64(11), u64(67)}) {
    std::string at = "q=" + std::to_string(q);
    FieldPtr f = Field::prime_field(q);
    MatSubspace sub = full_space(f, 2);
    MultiPoly p = det_poly(sub);
    ZeroCensus affine = zero_census(p, CensusMode::affine, cfg);
    u64 want = pow_u64(q, 3) + pow_u64(q, 2) - q;
    expect(affine.N_affine == want,
           "affine zero count must be q^3 + q^2 - q at " + at);

    if (q <= 11) {
      expect(!affine.affine_derived, "small censuses must enumerate directly");
      u64 brute = 0;
      for (u64 a = 0; a < q; ++a)
        for (u64 b = 0; b < q; ++b)
          for (u64 c = 0; c < q; ++c)
            for (u64 d = 0; d < q; ++d)
              if (f->sub(f->mul(a, d), f->mul(b, c)) == 0) ++brute;
      expect(brute == affine.N_affine,
             "brute-force matrix enumeration must match at " + at);
    } else {
      expect(affine.affine_derived,
             "the large census must derive the affine count projectively");
    }

    expect(cafure_matera_consistent(q, 2, 4, affine.N_affine),
           "point-count window must hold at " + at);

    ZeroCensus proj = zero_census(p, CensusMode::projective, cfg);
    expect(proj.N_projective.has_value() &&
               affine.N_affine == 1 + (q - 1) * *proj.N_projective,
           "affine and projective counts must be consistent at " + at);
  }
  note("censuses exact at q in {3,5,7,11,67}; brute force agrees through "
       "q=11; q=67 derived projectively");
  return true;
}

// ---------------------------------------------------------------------------
// 7. square-root machinery: round-trips, pfaffians, a non-split instance

bool c7() {
  Config cfg;
  // seeded square round-trips over four coefficient fields
  SeededRng rng(cfg.seed ^ 0x5bd1e995u);
  std::vector<FieldPtr> fields = {Field::prime_field(3), Field::prime_field(5),
                                  Field::prime_field(7), Field::make(3, 2)};
  unsigned round_trips = 0;
  for (const FieldPtr& f : fields) {
    for (unsigned t = 0; t < 50; ++t) {
      unsigned nv = 2 + unsigned(rng.below(2));
      MultiPoly g(f, nv);
      unsigned terms = 1 + unsigned(rng.below(3));
      for (unsigned k = 0; k < terms; ++k) {
        Expo e(nv, 0);
        for (unsigned v = 0; v < nv; ++v) e[v] = unsigned(rng.below(4));
        g.add_term(e, rng.below(f->size()));
      }
      if (g.is_zero()) g.add_term(Expo(nv, 0), 1);
      MultiPoly sq = g * g;
      auto root = multi_sqrt(sq);
      expect(root.has_value() && *root * *root == sq,
             "square root must round-trip on seeded square " +
                 std::to_string(round_trips));
      ++round_trips;
    }
  }
  expect(round_trips >= 200, "at least 200 seeded round-trips");
  note("square-root round-trips on " + std::to_string(round_trips) +
       " seeded squares over four fields");

  // pfaffian identity on generic skew spaces of sizes 2, 4, 6
  for (unsigned n : {2u, 4u, 6u}) {
    MatSubspace sk = generic_skew_space(Field::prime_field(3), n);
    MultiPoly g = pfaffian(sk);
    expect(g * g == det_poly(sk),
           "pfaffian must square to the determinant at n=" + std::to_string(n));
  }
  note("pfaffian identity verified on generic skew spaces of sizes 2, 4, 6");

  // the characteristic-3 instance that takes square values but is not a square
  FieldPtr f3 = Field::prime_field(3);
  MultiPoly h(f3, 2);
  h.add_term({6, 0}, 1);
  h.add_term({2, 4}, f3->neg(1));
  h.add_term({0, 6}, 1);
  for (Elt x = 0; x < 3; ++x)
    for (Elt y = 0; y < 3; ++y)
      expect(f3->is_square(h.eval({x, y})),
             "every value on the 9 points must be a square");
  expect(!multi_sqrt(h).has_value(), "no polynomial square root may exist");
  // dehomogenize at y=1 and certify irreducibility by exhaustive trial division
  UniPoly deh(f3, {1, 0, 2, 0, 0, 0, 1});  // x^6 - x^2 + 1
  unsigned divisors_tried = 0;
  for (unsigned dd = 1; dd <= 3; ++dd) {
    // all monic candidates of degree dd
    for (u64 code = 0; code < pow_u64(3, dd); ++code) {
      std::vector<Elt> cs;
      u64 t = code;
      for (unsigned i = 0; i < dd; ++i) {
        cs.push_back(t % 3);
        t /= 3;
      }
      cs.push_back(1);
      UniPoly cand(f3, cs);
      expect(!divmod(deh, cand).second.is_zero(),
             "no proper monic divisor may exist: " + render(cand, "x"));
      ++divisors_tried;
    }
  }
  expect(divisors_tried == 39, "trial division must cover 3 + 9 + 27 candidates");
  expect(uni_irreducible(deh), "the fast irreducibility test must agree");
  note("non-split instance: square values on all 9 points, no square root, "
       "dehomogenization irreducible by trial division");

  // seeded invertible skew pairs: the ratio has a square characteristic poly
  unsigned pairs = 0;
  for (const FieldPtr& f : {Field::prime_field(3), Field::prime_field(5)}) {
    for (unsigned n : {4u, 6u}) {
      SeededRng prng(cfg.seed ^ (f->size() * 131 + n));
      for (unsigned t = 0; t < 13; ++t) {
        Matrix m = random_invertible_skew(f, n, prng);
        Matrix nn = random_invertible_skew(f, n, prng);
        UniPoly cp = char_poly(*inverse(m) * nn);
        auto s = uni_sqrt(cp);
        expect(s.has_value(), "characteristic polynomial of a skew ratio must "
                              "be a square");
        UniPoly ms = s->monic();
        expect(ms * ms == cp, "the square root normalizes to a monic square");
        ++pairs;
      }
    }
  }
  expect(pairs >= 50, "at least 50 seeded skew pairs");
  note(std::to_string(pairs) +
       " seeded skew pairs of sizes 4 and 6 over F_3 and F_5");
  return true;
}

// ---------------------------------------------------------------------------
// 8. rank distributions and their lower-bound lines

bool c8() {
  Config cfg;
  auto bounds_hold = [](const RankCensus& rc, const std::string& at) {
    for (const RankBound& b : rc.bounds)
      if (!b.informational)
        expect(b.holds, "bound " + b.name + " must hold on " + at);
  };

  for (unsigned n = 1; n <= 3; ++n)
    for (u64 q : {u64(2), u64(3), u64(4), u64(5)}) {
      MatSubspace sub = diagonal_space(Field::of_order(q), n);
      RankCensus rc = rank_census(sub, cfg);
      expect(rc.counts[n] == pow_u64(q - 1, n),
             "diagonal full-rank count must be (q-1)^n at n=" +
                 std::to_string(n) + ", q=" + std::to_string(q));
      bounds_hold(rc, "diagonal n=" + std::to_string(n));
    }
  note("diagonal spaces: exact (q-1)^n full-rank counts for n <= 3, q <= 5");

  for (auto [q, r] : std::vector<std::pair<u64, unsigned>>{
           {2, 3}, {3, 3}, {2, 5}, {4, 3}})
    bounds_hold(rank_census(field_subspace(Field::of_order(q), r), cfg),
                "field subspace q=" + std::to_string(q));

  for (auto [q, d] : std::vector<std::pair<u64, unsigned>>{
           {2, 2}, {3, 2}, {2, 3}})
    bounds_hold(rank_census(thm3_7(q, d), cfg),
                "block construction q=" + std::to_string(q));

  // seeded rectangular subspaces of 3x4 matrices over F_3
  FieldPtr f3 = Field::prime_field(3);
  SeededRng rng(cfg.seed ^ 0xa5a5a5a5u);
  unsigned built = 0;
  while (built < 5) {
    unsigned d = 2 + unsigned(rng.below(2));
    std::vector<Matrix> basis;
    std::vector<std::vector<Elt>> rows;
    for (unsigned k = 0; k < d; ++k) {
      Matrix m(f3, 3, 4);
      for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 4; ++j) m.set(i, j, rng.below(3));
      basis.push_back(m);
      rows.push_back(m.flat());
    }
    std::vector<std::vector<Elt>> copy = rows;
    if (rref_rows(copy, f3) < d) continue;  // resample dependent draws
    RankCensus rc = rank_census(MatSubspace(f3, 3, 4, basis), cfg);
    bounds_hold(rc, "seeded 3x4 subspace " + std::to_string(built));
    ++built;
  }
  note("five seeded 3x4 subspaces over F_3: maximal-rank bounds hold");

  // the generic skew space has dimension n(n-1)/2, so size 6 is enumerable
  // over F_2 only; sizes beyond that blow past the affine cap
  for (u64 q : {u64(3), u64(5)})
    bounds_hold(rank_census(generic_skew_space(Field::prime_field(q), 4), cfg),
                "generic skew n=4, q=" + std::to_string(q));
  bounds_hold(rank_census(generic_skew_space(Field::prime_field(2), 6), cfg),
              "generic skew n=6, q=2");
  note("generic skew spaces: size 4 over F_3 and F_5, size 6 over F_2");
  return true;
}

// ---------------------------------------------------------------------------
// 9. commuting algebras, the normalizer quotient, and the coprimality grid

bool c9() {
  Config cfg;
  MatSubspace fs = field_subspace(Field::prime_field(2), 3);
  GroupAnalysis ga = normalizer_quotient(fs, cfg);
  expect(ga.centralizer_order == 7 && ga.field_flag,
         "commuting algebra must have order 7 with field structure");
  expect(!ga.skipped && *ga.normalizer_order == 21 && *ga.quotient_order == 3,
         "normalizer quotient must be 21/7 = 3");
  VerdictReport rep = verify("fixed_point_free_action", &fs, cfg);
  expect(rep.passed, "quotient-order check must pass");
  bool caveat = false;
  for (const std::string& c : rep.caveats)
    caveat = caveat || c.find("r^6") != std::string::npos;
  expect(caveat, "the small-q caveat must be recorded");
  note("field subspace: orders 7 and 21, quotient 3, small-q caveat recorded");

  // coprimality grid, recomputed here in 128-bit integer arithmetic
  std::vector<u64> prime_powers;
  for (u64 q = 2; q <= 64; ++q)
    if (prime_factors(q).size() == 1) prime_powers.push_back(q);
  expect(prime_powers.size() == 27, "27 prime powers up to 64");
  unsigned checked = 0;
  for (u64 r : {u64(2), u64(3), u64(5), u64(7), u64(11), u64(13)}) {
    for (u64 q : prime_powers) {
      u128 quotient = (pow_u128(q, unsigned(r)) - 1) / (q - 1);
      u128 g = gcd_u128(q - 1, quotient);
      expect(g == gcd_u128(q - 1, r),
             "gcd identity at r=" + std::to_string(r) + ", q=" +
                 std::to_string(q));
      if (gcd_u128(q - 1, r) == 1)
        expect(g == 1, "coprime case must make the orders coprime at r=" +
                           std::to_string(r) + ", q=" + std::to_string(q));
      ++checked;
    }
  }
  expect(checked == 162, "the grid must cover 6 primes x 27 prime powers");
  VerdictReport grid = verify("relatively_prime", nullptr, cfg);
  expect(grid.passed, "catalogue arithmetic entry must pass");
  note("coprimality identity re-verified on 162 grid points in 128-bit "
       "arithmetic");

  GroupAnalysis idl = centralizer(
      MatSubspace::make(Field::prime_field(2), 2,
                        {Matrix::identity(Field::prime_field(2), 2)}),
      cfg);
  expect(idl.centralizer_dim == 4 && idl.centralizer_order == 6 &&
             !idl.field_flag,
         "identity line: everything commutes, 6 invertibles, not a field");
  GroupAnalysis full = centralizer(full_space(Field::prime_field(3), 2), cfg);
  expect(full.centralizer_dim == 1 && full.centralizer_order == 2 &&
             full.field_flag,
         "full space: only the scalars commute");
  note("sanity: identity line and full space commuting algebras as expected");
  return true;
}

// ---------------------------------------------------------------------------
// 10. determinism of the full suite through the command-line front end

bool c10() {
  std::ostringstream out1, err1, out2, err2;
  int code1 = cli_run({"verify", "--suite", "--json"}, out1, err1);
  int code2 = cli_run({"verify", "--suite", "--json"}, out2, err2);
  expect(code1 == code2, "exit codes must agree across runs");
  expect(out1.str() == out2.str(), "suite output must be byte-identical");
  expect(!out1.str().empty(), "suite output must not be empty");
  note("two runs produced " + std::to_string(out1.str().size()) +
       " identical bytes (suite exit code " + std::to_string(code1) + ")");
  return true;
}

}  // namespace

int main() {
  run(1, "printed diagonal examples: formulas, censuses, small-field flag",
      c1);
  run(2, "cube-parameter construction: formula, singular line, norm witness",
      c2);
  run(3, "trace-form constructions: singular structure and ranks", c3);
  run(4, "invertible-only blocks: reducible pairs and maximality probe", c4);
  run(5, "field subspaces: irreducibility and shared characteristic "
         "polynomials",
      c5);
  run(6, "full 2x2 censuses: exact counts, brute force, point-count window",
      c6);
  run(7, "square roots: round-trips, pfaffians, non-split instance, skew "
         "pairs",
      c7);
  run(8, "rank distributions: exact diagonal counts and lower bounds", c8);
  run(9, "commuting algebras: orders, quotient, coprimality grid", c9);
  run(10, "determinism: suite output byte-identical across runs", c10);
  if (g_failures)
    std::printf("acceptance: %d of 10 criteria failed\n", g_failures);
  else
    std::printf("acceptance: all 10 criteria passed\n");
  return g_failures ? 1 : 0;
}
