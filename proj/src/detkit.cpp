#include "detspace/detkit.hpp"

#include <algorithm>

#include "detspace/census.hpp"

namespace detspace {

namespace {

// entries of the symbolic pencil x1 M1 + ... + xd Md, each a linear form
std::vector<std::vector<MultiPoly>> pencil_entries(const MatSubspace& sub) {
  const FieldPtr& F = sub.field();
  unsigned d = sub.dim();
  std::vector<std::vector<MultiPoly>> L(
      sub.rows(), std::vector<MultiPoly>(sub.cols(), MultiPoly(F, d)));
  for (unsigned i = 0; i < d; ++i) {
    const Matrix& m = sub.basis()[i];
    Expo e(d, 0);
    e[i] = 1;
    for (unsigned r = 0; r < sub.rows(); ++r)
      for (unsigned c = 0; c < sub.cols(); ++c)
        if (m.at(r, c) != 0) L[r][c].add_term(e, m.at(r, c));
  }
  return L;
}

// min(q^d, lim + 1), saturating instead of overflowing
u64 pow_capped(u64 q, unsigned d, u64 lim) {
  u64 r = 1;
  for (unsigned i = 0; i < d; ++i) {
    if (r > lim / q) return lim + 1;
    r *= q;
  }
  return r;
}

std::vector<Elt> digits_point(u64 idx, u64 q, unsigned d) {
  std::vector<Elt> p(d);
  for (unsigned i = 0; i < d; ++i) {
    p[i] = idx % q;
    idx /= q;
  }
  return p;
}

}  // namespace

MultiPoly det_poly(const MatSubspace& sub) {
  require(sub.is_square(), "determinantal polynomial of a rectangular span");
  const FieldPtr& F = sub.field();
  unsigned n = sub.n(), d = sub.dim();
  auto L = pencil_entries(sub);
  // subset dynamic program: dp[S] is the minor of rows 0..|S|-1 on the
  // column set S, built by expansion along the last row
  std::vector<MultiPoly> dp(u64(1) << n, MultiPoly(F, d));
  dp[0] = MultiPoly::constant(F, d, 1);
  for (u64 s = 1; s < (u64(1) << n); ++s) {
    unsigned k = static_cast<unsigned>(__builtin_popcountll(s));
    MultiPoly acc(F, d);
    unsigned pos = 0;
    for (unsigned c = 0; c < n; ++c) {
      if (!(s >> c & 1)) continue;
      if (!L[k - 1][c].is_zero()) {
        MultiPoly term = L[k - 1][c] * dp[s ^ (u64(1) << c)];
        acc = ((k - 1 + pos) % 2 == 0) ? acc + term : acc - term;
      }
      ++pos;
    }
    dp[s] = acc;
  }
  return dp[(u64(1) << n) - 1];
}

UniPoly char_poly(const Matrix& a) {
  require(a.is_square(), "characteristic polynomial of a rectangular matrix");
  const FieldPtr& F = a.field();
  unsigned n = a.rows();
  // Berkowitz vector recurrence: c holds det(yI - A_k) highest power first
  std::vector<Elt> c = {1, F->neg(a.at(0, 0))};
  for (unsigned k = 1; k < n; ++k) {
    // v = (1, -a_kk, -R S, -R M S, -R M^2 S, ...) with R the new row, S the
    // new column and M the leading k x k block
    std::vector<Elt> v(k + 2);
    v[0] = 1;
    v[1] = F->neg(a.at(k, k));
    std::vector<Elt> cur(k);
    for (unsigned i = 0; i < k; ++i) cur[i] = a.at(i, k);
    for (unsigned j = 0; j < k; ++j) {
      Elt rs = 0;
      for (unsigned i = 0; i < k; ++i)
        rs = F->add(rs, F->mul(a.at(k, i), cur[i]));
      v[j + 2] = F->neg(rs);
      if (j + 2 <= k) {
        std::vector<Elt> nxt(k, 0);
        for (unsigned i = 0; i < k; ++i) {
          if (cur[i] == 0) continue;
          for (unsigned r = 0; r < k; ++r)
            nxt[r] = F->add(nxt[r], F->mul(a.at(r, i), cur[i]));
        }
        cur = std::move(nxt);
      }
    }
    // multiply by the lower-triangular Toeplitz matrix of v
    std::vector<Elt> nc(k + 2, 0);
    for (unsigned i = 0; i < k + 2; ++i)
      for (unsigned j = 0; j <= std::min(i, k); ++j)
        nc[i] = F->add(nc[i], F->mul(v[i - j], c[j]));
    c = std::move(nc);
  }
  std::reverse(c.begin(), c.end());
  return UniPoly(F, c);
}

bool is_skew_symmetric(const Matrix& a) {
  if (!a.is_square()) return false;
  const FieldPtr& F = a.field();
  for (unsigned i = 0; i < a.rows(); ++i) {
    if (a.at(i, i) != 0) return false;
    for (unsigned j = i + 1; j < a.cols(); ++j)
      if (a.at(j, i) != F->neg(a.at(i, j))) return false;
  }
  return true;
}

MultiPoly pfaffian(const MatSubspace& sub) {
  require(sub.is_square(), "pfaffian of a rectangular span");
  unsigned n = sub.n();
  require(n % 2 == 0, "pfaffian needs even size");
  for (const Matrix& m : sub.basis())
    require(is_skew_symmetric(m), "pfaffian needs a skew-symmetric basis");
  const FieldPtr& F = sub.field();
  unsigned d = sub.dim();
  auto L = pencil_entries(sub);
  // dp over even-size index sets; expansion along the smallest index pins
  // the sign so the standard symplectic form comes out +1
  std::vector<MultiPoly> dp(u64(1) << n, MultiPoly(F, d));
  dp[0] = MultiPoly::constant(F, d, 1);
  for (u64 s = 1; s < (u64(1) << n); ++s) {
    if (__builtin_popcountll(s) % 2) continue;
    unsigned i0 = static_cast<unsigned>(__builtin_ctzll(s));
    MultiPoly acc(F, d);
    unsigned pos = 0;
    for (unsigned j = i0 + 1; j < n; ++j) {
      if (!(s >> j & 1)) continue;
      if (!L[i0][j].is_zero()) {
        MultiPoly term =
            L[i0][j] * dp[s ^ (u64(1) << i0) ^ (u64(1) << j)];
        acc = (pos % 2 == 0) ? acc + term : acc - term;
      }
      ++pos;
    }
    dp[s] = acc;
  }
  return dp[(u64(1) << n) - 1];
}

ZeroCensus zero_census(const MultiPoly& p, CensusMode mode,
                       const Config& cfg) {
  const FieldPtr& F = p.field();
  u64 q = F->size();
  unsigned d = p.nvars();
  ZeroCensus out;
  out.q = q;
  out.d = d;
  out.n = p.total_deg();

  u64 affine_total = pow_capped(q, d, cfg.affine_cap);
  bool affine_ok = affine_total <= cfg.affine_cap;
  // projective representatives: pivot coordinate k = 1, zeros before it,
  // free digits after; block k holds q^(d-1-k) points
  std::vector<u64> block_off(d + 1, 0);
  bool proj_ok = true;
  for (unsigned k = 0; k < d; ++k) {
    u64 sz = pow_capped(q, d - 1 - k, cfg.projective_cap);
    if (sz > cfg.projective_cap ||
        block_off[k] > cfg.projective_cap - sz)
      proj_ok = false;
    if (!proj_ok) break;
    block_off[k + 1] = block_off[k] + sz;
  }
  u64 proj_total = proj_ok ? block_off[d] : 0;

  auto affine_count = [&]() {
    return census_count(
        affine_total,
        [&](u64 i) { return p.eval(digits_point(i, q, d)) == 0; },
        cfg.use_parallel, cfg.threads);
  };
  auto projective_count = [&]() {
    return census_count(
        proj_total,
        [&](u64 i) {
          unsigned k = 0;
          while (i >= block_off[k + 1]) ++k;
          std::vector<Elt> pt(d, 0);
          pt[k] = 1;
          u64 rest = i - block_off[k];
          for (unsigned j = k + 1; j < d; ++j) {
            pt[j] = rest % q;
            rest /= q;
          }
          return p.eval(pt) == 0;
        },
        cfg.use_parallel, cfg.threads);
  };
  auto derived_affine = [&](u64 nproj) {
    u128 v = 1 + u128(q - 1) * nproj;
    require(v <= ~u64(0), "derived affine count exceeds 64 bits");
    return static_cast<u64>(v);
  };

  if (mode == CensusMode::affine) {
    if (affine_ok) {
      out.N_affine = affine_count();
      if (p.is_homogeneous() && !p.is_zero() && proj_ok) {
        out.N_projective = projective_count();
        require(out.N_affine == derived_affine(*out.N_projective),
                "homogeneous census identity failed");
      }
    } else {
      require(p.is_homogeneous(),
              "affine census cap exceeded and no projective fallback for a "
              "non-homogeneous polynomial");
      require(proj_ok, "projective census cap exceeded");
      out.N_projective = projective_count();
      out.N_affine = derived_affine(*out.N_projective);
      out.affine_derived = true;
    }
  } else {
    require(p.is_homogeneous(),
            "projective census requires a homogeneous polynomial");
    require(proj_ok, "projective census cap exceeded");
    out.N_projective = projective_count();
    out.N_affine = derived_affine(*out.N_projective);
    out.affine_derived = true;
  }
  return out;
}

namespace {

// lambda * prod_{i<r} sigma^i applied to the linear form omega . x
MultiPoly conjugate_product(const FieldPtr& E, unsigned d, unsigned r,
                            const std::vector<Elt>& omega, Elt lambda) {
  MultiPoly prod = MultiPoly::constant(E, d, lambda);
  for (unsigned i = 0; i < r; ++i) {
    MultiPoly form(E, d);
    for (unsigned j = 0; j < d; ++j) {
      if (omega[j] == 0) continue;
      Expo e(d, 0);
      e[j] = 1;
      form.add_term(e, E->frobenius(omega[j], i));
    }
    prod = prod * form;
  }
  return prod;
}

// witness search on a polynomial already over the extension; the pivot is
// the first variable whose pure power survives
std::optional<NormFormWitness> pivot_witness(const MultiPoly& pe,
                                             const FieldPtr& E, unsigned r,
                                             const Config& cfg) {
  unsigned d = pe.nvars();
  int j0 = -1;
  Elt lambda = 0;
  for (unsigned j = 0; j < d && j0 < 0; ++j) {
    Expo e(d, 0);
    e[j] = r;
    Elt c = pe.coeff(e);
    if (c != 0) {
      j0 = static_cast<int>(j);
      lambda = c;
    }
  }
  if (j0 < 0) return std::nullopt;

  // candidates for omega_j from the roots of the binary restriction
  // u_j(t) = sum_a coeff(x_j0^a x_j^(r-a)) t^a, whose roots are -sigma^i(w_j)
  RootConfig rc;
  rc.enum_cap = cfg.root_enum_cap;
  rc.seed = cfg.seed;
  std::vector<std::vector<Elt>> cands(d);
  cands[j0] = {E->one()};
  for (unsigned j = 0; j < d; ++j) {
    if (static_cast<int>(j) == j0) continue;
    std::vector<Elt> uc(r + 1, 0);
    for (unsigned a = 0; a <= r; ++a) {
      Expo e(d, 0);
      e[static_cast<unsigned>(j0)] = a;
      e[j] = r - a;
      uc[a] = pe.coeff(e);
    }
    std::vector<Elt> roots = uni_roots_in(UniPoly(E, uc), E, rc);
    if (roots.size() != r) return std::nullopt;  // must split into linears
    std::vector<Elt>& cs = cands[j];
    for (Elt rt : roots) {
      Elt c = E->neg(rt);
      if (std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(c);
    }
  }

  // assemble one vector out of the per-coordinate conjugacy classes: the
  // first moving coordinate fixes the global twist, later ones are pinned
  // by their pair restriction against it
  std::vector<Elt> omega(d, 0);
  omega[static_cast<unsigned>(j0)] = E->one();
  int j1 = -1;
  for (unsigned j = 0; j < d; ++j) {
    if (static_cast<int>(j) == j0) continue;
    if (cands[j].size() == 1) {
      omega[j] = cands[j][0];
      continue;
    }
    if (j1 < 0) {
      j1 = static_cast<int>(j);
      omega[j] = cands[j][0];
      continue;
    }
    MultiPoly want = restrict_pair(pe, static_cast<unsigned>(j1), j);
    bool pinned = false;
    for (Elt c : cands[j]) {
      std::vector<Elt> w2 = {omega[static_cast<unsigned>(j1)], c};
      if (conjugate_product(E, 2, r, w2, lambda) == want) {
        omega[j] = c;
        pinned = true;
        break;
      }
    }
    if (!pinned) return std::nullopt;
  }

  if (conjugate_product(E, d, r, omega, lambda) != pe) return std::nullopt;
  NormFormWitness w;
  w.ext = E;
  w.omega = omega;
  w.lambda = lambda;
  w.r = r;
  return w;
}

}  // namespace

std::optional<NormFormWitness> norm_form_witness(const MultiPoly& p,
                                                 unsigned r,
                                                 const Config& cfg) {
  require(is_prime_u64(r), "conjugate factor count must be prime");
  require(!p.is_zero() && p.is_homogeneous() &&
              p.total_deg() == static_cast<int>(r),
          "polynomial degree must equal the factor count");
  const FieldPtr& F = p.field();
  unsigned d = p.nvars();
  FieldPtr E = Field::extension_of(F, r);
  MultiPoly pe = map_coeffs(p, E);

  if (auto w = pivot_witness(pe, E, r, cfg)) return w;

  // no pure power survives: move to seeded coordinates where one does, then
  // pull the witness back and renormalize
  SeededRng rng(cfg.seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Matrix a(F, d, d);
    do {
      for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) a.set(i, j, rng.below(F->size()));
    } while (!is_invertible(a));
    std::vector<MultiPoly> images;
    for (unsigned i = 0; i < d; ++i) {
      MultiPoly form(E, d);
      for (unsigned j = 0; j < d; ++j) {
        if (a.at(i, j) == 0) continue;
        Expo e(d, 0);
        e[j] = 1;
        form.add_term(e, E->embed(a.at(i, j)));
      }
      images.push_back(form);
    }
    auto w = pivot_witness(substitute(pe, images), E, r, cfg);
    if (!w) continue;
    Matrix ai = *inverse(a);
    std::vector<Elt> omega(d, 0);
    for (unsigned u = 0; u < d; ++u) {
      Elt s = 0;
      for (unsigned j = 0; j < d; ++j)
        s = E->add(s, E->mul(w->omega[j], E->embed(ai.at(j, u))));
      omega[u] = s;
    }
    unsigned first = 0;
    while (first < d && omega[first] == 0) ++first;
    if (first == d) continue;
    Elt mu = omega[first];
    Elt mu_inv = E->inv(mu);
    for (Elt& x : omega) x = E->mul(x, mu_inv);
    Elt lambda = E->mul(w->lambda, E->embed(E->norm(mu)));
    if (conjugate_product(E, d, r, omega, lambda) != pe) continue;
    w->omega = omega;
    w->lambda = lambda;
    return w;
  }
  return std::nullopt;
}

Classification classify(const MatSubspace& sub, const Config& cfg) {
  require(sub.is_square(), "classification of a rectangular span");
  Classification out;
  const FieldPtr& F = sub.field();
  u64 q = F->size();
  unsigned n = sub.n(), d = sub.dim();
  MultiPoly P = det_poly(sub);

  out.is_zero_poly = P.is_zero();
  out.census = zero_census(P, CensusMode::affine, cfg);
  if (out.is_zero_poly) {
    out.notes.push_back("determinantal polynomial is identically zero");
    return out;
  }

  if (u128(out.census.N_affine) == pow_u128(q, d)) {
    out.vanishes_everywhere = true;
    require(q < n, "a nonzero form vanishing everywhere forces q < degree");
    out.notes.push_back(
        "nonzero polynomial vanishing on the whole space; the field is "
        "smaller than the degree");
  }
  if (2 * u64(d) >= 1 + u64(n) && out.census.N_affine == 1) {
    out.chevalley_irreducible = true;
    out.notes.push_back(
        "no nontrivial zero with 2d >= n+1: irreducible over the base "
        "field");
  }
  if (is_prime_u64(n)) {
    out.witness = norm_form_witness(P, n, cfg);
    if (out.witness) {
      out.norm_form = true;
      out.notes.push_back(
          "product of conjugate linear forms over the degree-" +
          std::to_string(n) +
          " extension: irreducible but not absolutely irreducible");
    }
  }
  out.square_root = multi_sqrt(P);
  if (out.square_root) {
    out.is_square = true;
    out.notes.push_back("perfect square of a polynomial of half degree");
  }
  if (!out.chevalley_irreducible && !out.norm_form && !out.is_square) {
    if (cafure_matera_consistent(q, n, d, out.census.N_affine)) {
      out.heuristic_abs_irreducible = true;
      out.notes.push_back(
          "zero count within the smooth-count window (ceiling-rounded "
          "exponent 13/3): consistent with absolute irreducibility, not a "
          "proof");
    } else {
      out.notes.push_back(
          "zero count outside the smooth-count window; no certificate "
          "applies");
    }
  }
  return out;
}

SingularPart singular_part(const MatSubspace& sub, const Config& cfg) {
  require(sub.is_square(), "singular part of a rectangular span");
  u64 total = sub.point_count();
  require(total <= cfg.affine_cap, "enumeration cap exceeded");
  std::vector<u64> hits = census_collect(
      total, [&](u64 i) { return det(sub.element_at(i)) == 0; },
      cfg.use_parallel, cfg.threads);

  SingularPart out;
  out.count = hits.size();
  std::vector<std::vector<Elt>> rows;
  rows.reserve(hits.size());
  for (u64 i : hits) rows.push_back(sub.coords_at(i));
  unsigned rk = rref_rows(rows, sub.field());
  out.dim = rk;
  out.is_subspace = out.count == pow_u64(sub.field()->size(), rk);
  if (out.is_subspace) {
    for (unsigned i = 0; i < rk; ++i) {
      out.basis_coords.push_back(rows[i]);
      out.basis.push_back(sub.element(rows[i]));
    }
  }
  return out;
}

RankCensus rank_census(const MatSubspace& sub, const Config& cfg) {
  u64 total = sub.point_count();
  require(total <= cfg.affine_cap, "enumeration cap exceeded");
  const FieldPtr& F = sub.field();
  RankCensus out;
  out.q = F->size();
  out.d = sub.dim();
  out.rows = sub.rows();
  out.cols = sub.cols();
  out.skew = sub.is_square();
  for (const Matrix& m : sub.basis())
    out.skew = out.skew && is_skew_symmetric(m);

  unsigned maxr = std::min(out.rows, out.cols);
  std::vector<u64> hist = census_histogram(
      total, maxr + 1, [&](u64 i) { return rank(sub.element_at(i)); },
      cfg.use_parallel, cfg.threads);
  for (unsigned r = 0; r <= maxr; ++r)
    if (hist[r]) out.counts[r] = hist[r];

  i64 qd = static_cast<i64>(total);
  i64 qd1 = static_cast<i64>(total / out.q);
  auto line = [&](std::string name, i64 bound, u64 observed, bool info) {
    out.bounds.push_back(
        {std::move(name), bound, observed,
         static_cast<i64>(observed) >= bound, info});
  };
  auto count_at = [&](unsigned r) {
    auto it = out.counts.find(r);
    return it == out.counts.end() ? u64(0) : it->second;
  };
  unsigned top = 0;
  for (const auto& kv : out.counts) top = std::max(top, kv.first);

  if (sub.is_square()) {
    // the full-rank lines assume an invertible element exists
    unsigned n = sub.n();
    i64 b = qd - i64(n) * qd1 + i64(n) - 1;
    if (count_at(n) > 0) {
      line("full_rank", b, count_at(n), false);
      if (out.d >= 2)
        line("full_rank_serre", b + i64(n) * (qd1 / i64(out.q)), count_at(n),
             true);
    }
  } else {
    i64 b = qd - i64(top) * qd1 + i64(top) - 1;
    line("max_rank", b, count_at(top), false);
  }
  if (out.skew) {
    unsigned n = sub.n();
    if (n % 2 == 0 && count_at(n) > 0)
      line("skew_full_rank", qd - i64(n / 2) * qd1 + i64(n / 2) - 1,
           count_at(n), false);
    for (const auto& kv : out.counts) {
      if (kv.first == 0 || kv.first % 2) continue;
      unsigned r = kv.first / 2;
      u64 at_least = 0;
      for (const auto& kv2 : out.counts)
        if (kv2.first >= kv.first) at_least += kv2.second;
      line("skew_rank_at_least_" + std::to_string(kv.first),
           qd - i64(r) * qd1 + i64(r) - 1, at_least, false);
    }
  }
  return out;
}

bool cafure_matera_consistent(u64 q, unsigned n, unsigned d, u64 N) {
  require(q >= 2 && d >= 1, "census shape out of range");
  require(n >= 1 && n <= 30, "degree out of range for the exact 13/3 power");
  u64 c13 = ceil_icbrt(pow_u64(n, 13));  // ceil(n^(13/3)), conservative
  u128 qd1 = pow_u128(q, d - 1);
  u128 delta = u128(N) > qd1 ? u128(N) - qd1 : qd1 - u128(N);
  u128 A, B, lhs;
  if (d >= 2) {
    u128 qd2 = pow_u128(q, d - 2);
    A = u128(n - 1) * (n - 2) * qd2;
    B = u128(5) * c13 * qd2;
    lhs = delta;
  } else {
    A = u128(n - 1) * (n - 2);
    B = u128(5) * c13;
    lhs = delta * q;
  }
  if (lhs <= B) return true;
  u128 rem = lhs - B;
  require(rem < (u128(1) << 60) && A < (u128(1) << 60) && q < (u64(1) << 32),
          "consistency check out of exact range");
  return rem * rem <= A * A * q;
}

std::vector<Elt> square_values(const FieldPtr& f) {
  std::vector<Elt> out;
  for (Elt x = 0; x < f->size(); ++x) out.push_back(f->mul(x, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detspace
