#include "rlcm/arith.hpp"

#include <cstdlib>  // for abs

#include "rlcm/error.hpp"

namespace rlcm {

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in addition");
  }
  return r;
}

i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in subtraction");
  }
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in multiplication");
  }
  return r;
}

i64 checked_pow(i64 base, u64 exp) {
  i64 r = 1;
  while (exp > 0) {
    if (exp & 1) {
      r = checked_mul(r, base);
    }
    exp >>= 1;
    if (exp > 0) {
      base = checked_mul(base, base);
    }
  }
  return r;
}

i64 gcd(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    i64 t = a % b;
    a     = b;
    b     = t;
  }
  return a;
}

ExtGcd ext_gcd(i64 a, i64 b) {
  i64 old_r = a, r = b;
  i64 old_s = 1, s = 0;
  i64 old_t = 0, t = 1;
  while (r != 0) {
    i64 q   = old_r / r;
    i64 tmp = old_r - q * r;
    old_r   = r;
    r       = tmp;
    tmp     = old_s - q * s;
    old_s   = s;
    s       = tmp;
    tmp     = old_t - q * t;
    old_t   = t;
    t       = tmp;
  }
  if (old_r < 0) {
    return {-old_r, -old_s, -old_t};
  }
  return {old_r, old_s, old_t};
}

i64 floor_mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 floor_div(i64 a, i64 m) {
  return (a - floor_mod(a, m)) / m;
}

bool is_prime(u64 n) {
  if (n < 2) {
    return false;
  }
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) {
      out.emplace_back(d, e);
    }
  }
  if (n > 1) {
    out.emplace_back(n, 1);
  }
  return out;
}

}  // namespace rlcm
