#include "sliplab/gf.hpp"

namespace sliplab {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p > (std::uint32_t{1} << 16) || !is_prime(p)) throw NonPrimeModulus(p);
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0) throw DivisionByZero();
  // extended Euclid on (a, p)
  std::int64_t r0 = a, r1 = p_, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  std::int64_t s = s0 % p_;
  if (s < 0) s += p_;
  return static_cast<Residue>(s);
}

}  // namespace sliplab
