#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace detspace {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Precondition violations, cap overruns and malformed inputs. The CLI maps
// this to exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw Error(what);
}

// splitmix64 stream. Deterministic across platforms, unlike the standard
// distributions; every randomized path in the library draws from this.
class SeededRng {
 public:
  explicit SeededRng(u64 seed) : state_(seed) {}

  u64 next() {
    u64 z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n), n >= 1, by multiply-shift
  u64 below(u64 n) { return static_cast<u64>((u128(next()) * n) >> 64); }

 private:
  u64 state_;
};

inline bool is_prime_u64(u64 p) {
  if (p < 2) return false;
  for (u64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// smallest s with s*s >= n
inline u64 ceil_isqrt(u64 n) {
  if (n == 0) return 0;
  u64 s = static_cast<u64>(__builtin_sqrtl(static_cast<long double>(n)));
  while (s * s >= n) --s;
  while (s * s < n) ++s;
  return s;
}

// smallest c with c*c*c >= n
inline u64 ceil_icbrt(u64 n) {
  if (n == 0) return 0;
  u64 c = static_cast<u64>(__builtin_cbrtl(static_cast<long double>(n)));
  while (c > 0 && c * c * c >= n) --c;
  while (c * c * c < n) ++c;
  return c;
}

inline u64 pow_u64(u64 b, unsigned e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

inline u128 pow_u128(u64 b, unsigned e) {
  u128 r = 1;
  while (e--) r *= b;
  return r;
}

std::string u128_to_string(u128 v);

}  // namespace detspace
