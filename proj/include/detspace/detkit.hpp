#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detspace/multipoly.hpp"
#include "detspace/subspace.hpp"
#include "detspace/unipoly.hpp"

namespace detspace {

// Caps and determinism knobs shared by censuses, witnesses and verifiers.
struct Config {
  u64 seed = 1;
  u64 affine_cap = u64(1) << 24;
  u64 projective_cap = u64(1) << 24;
  u64 group_budget = 12000;
  u64 root_enum_cap = 4096;
  unsigned threads = 0;  // 0 = all available
  bool use_parallel = true;
};

// det(x1 M1 + ... + xd Md): zero or homogeneous of degree n in d variables
MultiPoly det_poly(const MatSubspace& sub);

// monic det(yI - A) by a division-free recurrence, safe in any characteristic
UniPoly char_poly(const Matrix& a);

// true when a is skew-symmetric; in characteristic 2 this means symmetric
// with zero diagonal
bool is_skew_symmetric(const Matrix& a);

// the canonical square root of det_poly for a skew-symmetric subspace of
// even size; the standard symplectic block form has pfaffian +1
MultiPoly pfaffian(const MatSubspace& sub);

struct ZeroCensus {
  u64 q = 0;
  int n = -1;   // degree of the polynomial
  unsigned d = 0;
  u64 N_affine = 0;
  std::optional<u64> N_projective;
  // affine count derived from the projective one via N = 1 + (q-1)N_proj
  bool affine_derived = false;
};

enum class CensusMode { affine, projective };

// Exact zero counts of P by exhaustive evaluation. Affine mode falls back to
// the projective census plus the homogeneity identity when q^d exceeds the
// affine cap; projective mode requires homogeneous input and enumerates
// representatives normalized by first nonzero coordinate = 1.
ZeroCensus zero_census(const MultiPoly& p, CensusMode mode, const Config& cfg);

struct NormFormWitness {
  FieldPtr ext;            // degree-r extension the factor lives in
  std::vector<Elt> omega;  // normalized: first nonzero entry = 1
  Elt lambda;              // scalar, lies in the base field inside ext
  unsigned r;
};

// Decide whether P = lambda * prod_{i<r} sigma^i(omega_1 x_1 + ... + omega_d x_d)
// for a prime r, by root-finding on two-variable restrictions followed by a
// full coefficient comparison. Returns the witness or nothing.
std::optional<NormFormWitness> norm_form_witness(const MultiPoly& p,
                                                 unsigned r,
                                                 const Config& cfg);

struct Classification {
  bool is_zero_poly = false;
  bool vanishes_everywhere = false;     // nonzero P, zero on every point
  bool chevalley_irreducible = false;   // certified irreducible over F_q
  bool norm_form = false;               // irreducible, not absolutely so
  bool is_square = false;
  bool heuristic_abs_irreducible = false;  // census-based, not a proof
  std::optional<NormFormWitness> witness;
  std::optional<MultiPoly> square_root;
  ZeroCensus census;
  std::vector<std::string> notes;  // provenance, one line per decided flag
};

Classification classify(const MatSubspace& sub, const Config& cfg);

struct SingularPart {
  u64 count = 0;  // elements of determinant zero, the zero matrix included
  bool is_subspace = false;
  unsigned dim = 0;  // rank of the collected coordinate set
  std::vector<std::vector<Elt>> basis_coords;  // echelon basis, when subspace
  std::vector<Matrix> basis;
};

// Enumerate the subspace, collect determinant-zero elements, and test whether
// they form a linear subspace (cardinality q^rank of the collected span).
SingularPart singular_part(const MatSubspace& sub, const Config& cfg);

struct RankBound {
  std::string name;
  i64 bound;
  u64 observed;
  bool holds;
  bool informational;  // recorded in reports but never scored
};

struct RankCensus {
  u64 q = 0;
  unsigned d = 0, rows = 0, cols = 0;
  bool skew = false;
  std::map<unsigned, u64> counts;  // rank -> element count
  std::vector<RankBound> bounds;
};

// Exact rank distribution with the applicable lower-bound lines: the
// full-rank bound q^d - n q^{d-1} + n - 1 (square), the maximal-rank
// rectangular variant, the skew-symmetric full- and at-least-rank variants,
// and the informational Serre improvement by n q^{d-2}.
RankCensus rank_census(const MatSubspace& sub, const Config& cfg);

// |N - q^{d-1}| <= (n-1)(n-2) q^{d-3/2} + 5 n^{13/3} q^{d-2}, decided in
// exact integer arithmetic; n^{13/3} rounds up (conservative, flagged in
// report text where used).
bool cafure_matera_consistent(u64 q, unsigned n, unsigned d, u64 N);

// all values x^2, sorted ascending; size (q+1)/2 in odd characteristic
std::vector<Elt> square_values(const FieldPtr& f);

}  // namespace detspace
