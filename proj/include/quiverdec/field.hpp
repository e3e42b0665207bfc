#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace quiverdec {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

inline bool is_prime(u32 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u32 d = 3; static_cast<u64>(d) * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Arithmetic context for the prime field F_p.
// Every value passed in or returned is a residue in [0, p).
class PrimeField {
 public:
  explicit PrimeField(u32 p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
  }

  u32 p() const { return p_; }

  u32 reduce(i64 x) const {
    i64 r = x % static_cast<i64>(p_);
    if (r < 0) r += p_;
    return static_cast<u32>(r);
  }

  u32 add(u32 a, u32 b) const {
    u32 s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p_ - b; }

  u32 neg(u32 a) const { return a == 0 ? 0 : p_ - a; }

  u32 mul(u32 a, u32 b) const {
    return static_cast<u32>((static_cast<u64>(a) * b) % p_);
  }

  // Extended Euclid; requires a != 0.
  u32 inv(u32 a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    i64 t = 0, new_t = 1;
    i64 r = p_, new_r = a;
    while (new_r != 0) {
      i64 q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    return reduce(t);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  u32 p_;
};

}  // namespace quiverdec
