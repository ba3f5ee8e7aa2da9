#pragma once

#include <cstddef>  // for size_t
#include <cstdint>  // for int64_t, uint64_t
#include <utility>  // for pair
#include <vector>   // for vector

namespace rlcm {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Checked arithmetic; throws OverflowError instead of wrapping.
i64 checked_add(i64 a, i64 b);
i64 checked_sub(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);
i64 checked_pow(i64 base, u64 exp);

//! Nonnegative gcd; gcd(0, 0) = 0.
i64 gcd(i64 a, i64 b);

//! Returns (d, x, y) with a*x + b*y = d = gcd(a, b) >= 0.
struct ExtGcd {
  i64 d, x, y;
};
ExtGcd ext_gcd(i64 a, i64 b);

//! Least nonnegative residue of a modulo m > 0.
i64 floor_mod(i64 a, i64 m);

//! Floor division for m > 0.
i64 floor_div(i64 a, i64 m);

bool is_prime(u64 n);

//! Prime factorisation by trial division, primes ascending.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace rlcm
