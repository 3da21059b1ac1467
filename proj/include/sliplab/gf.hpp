#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sliplab/errors.hpp"

namespace sliplab {

// Residues are kept reduced in [0, p).  p <= 2^16, so a product of two
// residues always fits in 32 bits.
using Residue = std::uint32_t;
using Vec = std::vector<Residue>;

bool is_prime(std::uint32_t n);

class PrimeField {
 public:
  PrimeField() : p_(2) {}
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  Residue add(Residue a, Residue b) const {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const { return a * b % p_; }
  Residue inv(Residue a) const;
  Residue reduce(std::uint64_t x) const { return static_cast<Residue>(x % p_); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

// y += lambda * x componentwise.  Over GF(2) the only nonzero lambda is 1,
// so the update degenerates to a xor; that path carries all the big scans.
inline void add_scaled(const PrimeField& f, std::span<Residue> y, Residue lambda,
                       std::span<const Residue> x) {
  if (y.size() != x.size()) throw DimensionMismatch("add_scaled: length mismatch");
  if (lambda == 0) return;
  const std::size_t n = y.size();
  if (f.modulus() == 2) {
    for (std::size_t i = 0; i < n; ++i) y[i] ^= x[i];
    return;
  }
  const std::uint32_t p = f.modulus();
  for (std::size_t i = 0; i < n; ++i) y[i] = (y[i] + lambda * x[i]) % p;
}

inline void sub_scaled(const PrimeField& f, std::span<Residue> y, Residue lambda,
                       std::span<const Residue> x) {
  add_scaled(f, y, f.neg(lambda), x);
}

inline void scale(const PrimeField& f, std::span<Residue> y, Residue lambda) {
  if (lambda == 1) return;
  for (auto& v : y) v = f.mul(v, lambda);
}

inline Residue dot(const PrimeField& f, std::span<const Residue> a, std::span<const Residue> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::uint64_t{a[i]} * b[i];
  return f.reduce(acc);
}

inline bool is_zero_vec(std::span<const Residue> v) {
  for (Residue x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace sliplab
