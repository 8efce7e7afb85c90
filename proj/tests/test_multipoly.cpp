#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "detspace/multipoly.hpp"

using namespace detspace;

namespace {

MultiPoly random_poly(const FieldPtr& f, unsigned nvars, SeededRng& rng,
                      unsigned max_terms = 6, unsigned max_exp = 3) {
  MultiPoly p(f, nvars);
  u64 nterms = rng.below(max_terms + 1);
  for (u64 t = 0; t < nterms; ++t) {
    Expo e(nvars);
    for (unsigned i = 0; i < nvars; ++i)
      e[i] = static_cast<unsigned>(rng.below(max_exp + 1));
    p.add_term(e, rng.below(f->size()));
  }
  return p;
}

std::vector<Elt> random_point(const FieldPtr& f, unsigned nvars,
                              SeededRng& rng) {
  std::vector<Elt> pt(nvars);
  for (Elt& x : pt) x = rng.below(f->size());
  return pt;
}

}  // namespace

TEST_CASE("ring axioms on seeded random triples") {
  SeededRng rng(1);
  for (const FieldPtr& f :
       {Field::prime_field(3), Field::make(2, 2), Field::prime_field(7)}) {
    for (int i = 0; i < 200; ++i) {
      MultiPoly a = random_poly(f, 3, rng);
      MultiPoly b = random_poly(f, 3, rng);
      MultiPoly c = random_poly(f, 3, rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == MultiPoly(f, 3));
      CHECK(a + MultiPoly(f, 3) == a);
      CHECK(a * MultiPoly::constant(f, 3, 1) == a);
    }
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  SeededRng rng(2);
  FieldPtr f = Field::prime_field(5);
  for (int i = 0; i < 200; ++i) {
    MultiPoly a = random_poly(f, 2, rng);
    MultiPoly b = random_poly(f, 2, rng);
    std::vector<Elt> pt = random_point(f, 2, rng);
    CHECK((a + b).eval(pt) == f->add(a.eval(pt), b.eval(pt)));
    CHECK((a * b).eval(pt) == f->mul(a.eval(pt), b.eval(pt)));
  }
}

TEST_CASE("terms are kept in descending graded-lex order") {
  FieldPtr f = Field::prime_field(3);
  MultiPoly p(f, 2);
  p.add_term({0, 0}, 1);
  p.add_term({1, 1}, 1);
  p.add_term({0, 2}, 1);
  p.add_term({3, 0}, 1);
  CHECK(render(p) == "x1^3 + x1*x2 + x2^2 + 1");
  CHECK(p.total_deg() == 3);
  CHECK(!p.is_homogeneous());
  MultiPoly h(f, 2);
  h.add_term({2, 1}, 1);
  h.add_term({1, 2}, 2);
  CHECK(h.is_homogeneous());
  CHECK(MultiPoly(f, 2).is_homogeneous());
  CHECK(MultiPoly(f, 2).total_deg() == -1);
}

TEST_CASE("rendering rules") {
  FieldPtr f2 = Field::prime_field(2);
  MultiPoly p(f2, 2);
  p.add_term({2, 1}, 1);
  p.add_term({1, 2}, 1);
  CHECK(render(p) == "x1^2*x2 + x1*x2^2");
  CHECK(render(MultiPoly(f2, 2)) == "0");
  FieldPtr f7 = Field::prime_field(7);
  CHECK(render(MultiPoly::constant(f7, 3, 5)) == "5");
  MultiPoly q(f7, 3);
  q.add_term({0, 1, 0}, 3);
  q.add_term({0, 0, 0}, 6);
  CHECK(render(q) == "3*x2 + 6");
  CHECK(render(MultiPoly::var(f7, 2, 1)) == "x2");
}

TEST_CASE("substitution commutes with evaluation") {
  SeededRng rng(3);
  FieldPtr f = Field::prime_field(5);
  for (int i = 0; i < 100; ++i) {
    MultiPoly g = random_poly(f, 2, rng);
    std::vector<MultiPoly> images = {random_poly(f, 3, rng),
                                     random_poly(f, 3, rng)};
    MultiPoly s = substitute(g, images);
    std::vector<Elt> pt = random_point(f, 3, rng);
    std::vector<Elt> inner = {images[0].eval(pt), images[1].eval(pt)};
    CHECK(s.eval(pt) == g.eval(inner));
  }
}

TEST_CASE("pair restriction keeps exactly two variables") {
  FieldPtr f = Field::prime_field(7);
  MultiPoly p(f, 3);
  p.add_term({3, 0, 0}, 2);  // survives as y1^3
  p.add_term({1, 1, 1}, 4);  // killed by x2 -> 0
  p.add_term({2, 0, 1}, 5);  // survives as y1^2 y2
  MultiPoly r = restrict_pair(p, 0, 2);
  CHECK(r.nvars() == 2);
  MultiPoly want(f, 2);
  want.add_term({3, 0}, 2);
  want.add_term({2, 1}, 5);
  CHECK(r == want);
}

TEST_CASE("coefficient maps: tower embedding and Frobenius") {
  FieldPtr f2 = Field::prime_field(2);
  FieldPtr f8 = Field::make(2, 3);
  SeededRng rng(4);
  MultiPoly g = random_poly(f2, 2, rng);
  MultiPoly ge = map_coeffs(g, f8);
  CHECK(ge.field()->same_as(*f8));
  std::vector<Elt> pt = {5, 7};
  CHECK(ge.eval(pt) == g.eval_in(f8, pt));
  CHECK_THROWS_AS((void)map_coeffs(g, Field::prime_field(3)), Error);

  // sigma(f(a)) = f^sigma(sigma(a)), per point
  for (int i = 0; i < 50; ++i) {
    MultiPoly h = random_poly(f8, 2, rng);
    MultiPoly hs = frobenius_coeffs(h, 1);
    std::vector<Elt> p2 = random_point(f8, 2, rng);
    std::vector<Elt> p2s = {f8->frobenius(p2[0]), f8->frobenius(p2[1])};
    CHECK(f8->frobenius(h.eval(p2)) == hs.eval(p2s));
  }
}

TEST_CASE("square roots round-trip on seeded squares") {
  SeededRng rng(5);
  int done = 0;
  for (const FieldPtr& f :
       {Field::prime_field(3), Field::make(2, 2), Field::prime_field(7)}) {
    for (int i = 0; i < 80; ++i) {
      MultiPoly g = random_poly(f, 3, rng, 5, 2);
      MultiPoly sq = g * g;
      auto r = multi_sqrt(sq);
      REQUIRE(r.has_value());
      CHECK(*r * *r == sq);
      ++done;
    }
  }
  CHECK(done >= 200);
}

TEST_CASE("non-squares are rejected") {
  FieldPtr f3 = Field::prime_field(3);
  MultiPoly xy(f3, 2);
  xy.add_term({1, 1}, 1);
  CHECK(!multi_sqrt(xy).has_value());

  // x^6 - x^2 y^4 + y^6 takes only square values on F_3^2 yet has no root
  MultiPoly p(f3, 2);
  p.add_term({6, 0}, 1);
  p.add_term({2, 4}, 2);
  p.add_term({0, 6}, 1);
  CHECK(!multi_sqrt(p).has_value());
  for (Elt a = 0; a < 3; ++a)
    for (Elt b = 0; b < 3; ++b) {
      Elt v = p.eval({a, b});
      CHECK((v == 0 || v == 1));  // squares of F_3
    }
}

TEST_CASE("pow and scaling") {
  FieldPtr f = Field::prime_field(3);
  MultiPoly x = MultiPoly::var(f, 2, 0);
  MultiPoly y = MultiPoly::var(f, 2, 1);
  MultiPoly s = x + y;
  // freshman's dream in characteristic 3
  MultiPoly cube = s.pow(3);
  MultiPoly want = x.pow(3) + y.pow(3);
  CHECK(cube == want);
  CHECK(s.pow(0) == MultiPoly::constant(f, 2, 1));
  CHECK(s.scaled(2) == s + s);
  CHECK(s.scaled(0).is_zero());
}

TEST_CASE("evaluation in an extension of the coefficient field") {
  FieldPtr f2 = Field::prime_field(2);
  FieldPtr f4 = Field::make(2, 2);
  MultiPoly p(f2, 1);
  p.add_term({2}, 1);
  p.add_term({1}, 1);
  p.add_term({0}, 1);  // x^2 + x + 1
  // both roots lie in F_4: the two elements outside F_2
  CHECK(p.eval_in(f4, {2}) == 0);
  CHECK(p.eval_in(f4, {3}) == 0);
  CHECK(p.eval_in(f4, {1}) == 1);
  CHECK_THROWS_AS((void)p.eval_in(Field::prime_field(5), {2}), Error);
}
