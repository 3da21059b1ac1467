#include "sliplab/algebra.hpp"

#include <algorithm>
#include <string>

namespace sliplab {

Vec Algebra::mul(std::span<const Residue> x, std::span<const Residue> y) const {
  if (x.size() != dim || y.size() != dim) throw DimensionMismatch("algebra mul: length mismatch");
  Vec out(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (!y[j]) continue;
      add_scaled(field, out, field.mul(x[i], y[j]), product_row(i, j));
    }
  }
  return out;
}

Matrix Algebra::left_mul_matrix(std::span<const Residue> x) const {
  if (x.size() != dim) throw DimensionMismatch("left_mul_matrix: length mismatch");
  Matrix m(field, dim, dim);
  Vec col(dim, 0);
  for (std::size_t j = 0; j < dim; ++j) {
    std::fill(col.begin(), col.end(), 0);
    for (std::size_t i = 0; i < dim; ++i)
      if (x[i]) add_scaled(field, col, x[i], product_row(i, j));
    for (std::size_t k = 0; k < dim; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Matrix Algebra::right_mul_matrix(std::span<const Residue> x) const {
  if (x.size() != dim) throw DimensionMismatch("right_mul_matrix: length mismatch");
  Matrix m(field, dim, dim);
  Vec col(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    std::fill(col.begin(), col.end(), 0);
    for (std::size_t j = 0; j < dim; ++j)
      if (x[j]) add_scaled(field, col, x[j], product_row(i, j));
    for (std::size_t k = 0; k < dim; ++k) m.at(k, i) = col[k];
  }
  return m;
}

Validation validate(const Algebra& a) {
  using C = Validation::Code;
  const std::size_t d = a.dim;
  if (d == 0) return Validation::fail(C::bad_shape, {}, "algebra dim must be >= 1");
  if (a.structure.size() != d * d * d)
    return Validation::fail(C::bad_shape, {}, "structure tensor has wrong size");
  if (a.unit.size() != d) return Validation::fail(C::bad_shape, {}, "unit vector has wrong size");
  const std::uint32_t p = a.field.modulus();
  for (Residue x : a.structure)
    if (x >= p) return Validation::fail(C::entry_out_of_range, {}, "structure entry not reduced mod p");
  for (Residue x : a.unit)
    if (x >= p) return Validation::fail(C::entry_out_of_range, {}, "unit entry not reduced mod p");

  Vec lhs(d), rhs(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      auto cij = a.product_row(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        // (e_i e_j) e_k vs e_i (e_j e_k)
        std::fill(lhs.begin(), lhs.end(), 0);
        for (std::size_t l = 0; l < d; ++l)
          if (cij[l]) add_scaled(a.field, lhs, cij[l], a.product_row(l, k));
        auto cjk = a.product_row(j, k);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (std::size_t l = 0; l < d; ++l)
          if (cjk[l]) add_scaled(a.field, rhs, cjk[l], a.product_row(i, l));
        if (lhs != rhs)
          return Validation::fail(C::non_associative, {i, j, k},
                                  "associativity fails at basis triple (" + std::to_string(i) +
                                      ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
      }
    }
  }

  for (std::size_t j = 0; j < d; ++j) {
    Vec ej = a.basis_vector(j);
    if (a.mul(a.unit, ej) != ej || a.mul(ej, a.unit) != ej)
      return Validation::fail(C::unit_axiom_violated, {j, 0, 0},
                              "unit axiom fails at basis vector " + std::to_string(j));
  }
  return Validation::ok_result();
}

void require_valid(const Algebra& a) { require(validate(a)); }

std::uint64_t checked_pow(std::uint32_t p, std::size_t d, std::uint64_t cap, const char* what) {
  constexpr std::uint64_t kMax = ~std::uint64_t{0};
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < d; ++i) n = n > kMax / p ? kMax : n * p;
  if (n > cap) throw EnumerationCapExceeded(what, n, cap);
  return n;
}

VectorScan::VectorScan(PrimeField f, std::size_t dim)
    : field_(f), dim_(dim), state_(dim, 0), fresh_(true), done_(false) {}

bool VectorScan::next(Vec& out) {
  if (done_) return false;
  if (fresh_) {
    fresh_ = false;
    out = state_;
    return true;
  }
  // odometer: last coordinate runs fastest
  const Residue top = field_.modulus() - 1;
  std::size_t i = dim_;
  while (i > 0) {
    --i;
    if (state_[i] < top) {
      ++state_[i];
      std::fill(state_.begin() + static_cast<std::ptrdiff_t>(i) + 1, state_.end(), 0);
      out = state_;
      return true;
    }
  }
  done_ = true;
  return false;
}

ProjectiveScan::ProjectiveScan(PrimeField f, std::size_t dim) : raw_(f, dim) {}

bool ProjectiveScan::next(Vec& out) {
  while (raw_.next(buf_)) {
    std::size_t fz = buf_.size();
    for (std::size_t i = 0; i < buf_.size(); ++i) {
      if (buf_[i]) {
        fz = i;
        break;
      }
    }
    if (fz == buf_.size() || buf_[fz] != 1) continue;
    out = buf_;
    return true;
  }
  return false;
}

std::vector<Vec> projective_representatives(const PrimeField& f, std::size_t dim,
                                            std::uint64_t cap) {
  checked_pow(f.modulus(), dim, cap, "projective enumeration");
  std::vector<Vec> out;
  ProjectiveScan scan(f, dim);
  Vec v;
  while (scan.next(v)) out.push_back(v);
  return out;
}

bool is_idempotent(const Algebra& a, std::span<const Residue> e) {
  Vec sq = a.mul(e, e);
  return std::equal(sq.begin(), sq.end(), e.begin(), e.end());
}

bool is_left_semicentral(const Algebra& a, std::span<const Residue> e) {
  // A*e vs e*A*e as canonical subspaces
  SpanBuilder ae(a.field, a.dim), eae(a.field, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    Vec xe = a.mul(a.basis_vector(i), e);
    ae.add(xe);
    eae.add(a.mul(e, xe));
  }
  return ae.to_subspace() == eae.to_subspace();
}

IdempotentReport idempotents(const Algebra& a, std::uint64_t cap) {
  IdempotentReport rep;
  VectorScan scan(a.field, a.dim);
  Vec v;
  std::uint64_t seen = 0;
  while (scan.next(v)) {
    if (seen == cap) {
      rep.truncated = true;
      break;
    }
    ++seen;
    if (!is_idempotent(a, v)) continue;
    rep.idempotents.push_back(v);
    if (is_left_semicentral(a, v)) rep.left_semicentral.push_back(v);
  }
  return rep;
}

CornerAlgebra corner_algebra(const Algebra& a, std::span<const Residue> e) {
  if (!is_idempotent(a, e)) throw NotIdempotent("corner_algebra: e*e != e");
  if (is_zero_vec(e)) throw NontrivialIdempotentRequired("corner_algebra: e = 0");
  SpanBuilder sb(a.field, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) sb.add(a.mul(e, a.mul(a.basis_vector(i), e)));
  Subspace span = sb.to_subspace();
  const std::size_t r = span.dim();

  CornerAlgebra out;
  out.span = span;
  out.corner.field = a.field;
  out.corner.dim = r;
  out.corner.structure.assign(r * r * r, 0);
  for (std::size_t u = 0; u < r; ++u) {
    for (std::size_t v = 0; v < r; ++v) {
      Vec prod = a.mul(span.basis.row(u), span.basis.row(v));
      Vec coords = rref_coordinates(span, prod);
      std::copy(coords.begin(), coords.end(),
                out.corner.structure.begin() + static_cast<std::ptrdiff_t>((u * r + v) * r));
    }
  }
  out.corner.unit = rref_coordinates(span, e);
  out.embed = Matrix(a.field, a.dim, r);
  for (std::size_t u = 0; u < r; ++u)
    for (std::size_t k = 0; k < a.dim; ++k) out.embed.at(k, u) = span.basis.at(u, k);
  require_valid(out.corner);
  return out;
}

Subspace subalgebra_generated_by(const Algebra& a, const std::vector<Vec>& gens) {
  SpanBuilder sb(a.field, a.dim);
  sb.add(a.unit);
  for (const auto& g : gens) sb.add(g);
  // multiply current basis pairs until the rank stops growing
  for (;;) {
    Subspace s = sb.to_subspace();
    std::size_t before = sb.rank();
    for (std::size_t u = 0; u < s.dim(); ++u)
      for (std::size_t v = 0; v < s.dim(); ++v) sb.add(a.mul(s.basis.row(u), s.basis.row(v)));
    if (sb.rank() == before) return sb.to_subspace();
  }
}

bool is_idempotent_generated(const Algebra& a, std::uint64_t cap) {
  checked_pow(a.field.modulus(), a.dim, cap, "idempotent enumeration");
  IdempotentReport rep = idempotents(a, cap);
  return subalgebra_generated_by(a, rep.idempotents).dim() == a.dim;
}

Subspace two_sided_ideal(const Algebra& a, std::span<const Residue> v) {
  SpanBuilder sb(a.field, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    Vec ev = a.mul(a.basis_vector(i), v);
    for (std::size_t j = 0; j < a.dim; ++j) sb.add(a.mul(ev, a.basis_vector(j)));
  }
  Subspace s = sb.to_subspace();
  // closure sanity: stable under one-sided multiplication by every basis element
  for (std::size_t r = 0; r < s.dim(); ++r) {
    for (std::size_t i = 0; i < a.dim; ++i) {
      if (!s.contains(a.mul(a.basis_vector(i), s.basis.row(r))) ||
          !s.contains(a.mul(s.basis.row(r), a.basis_vector(i))))
        throw Error("two_sided_ideal: closure violated");
    }
  }
  return s;
}

std::uint64_t subspace_count(std::uint32_t p, std::size_t d) {
  // Gaussian binomials via the q-Pascal rule, saturating on overflow.
  constexpr std::uint64_t kMax = ~std::uint64_t{0};
  auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
  auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return std::uint64_t{0};
    return a > kMax / b ? kMax : a * b;
  };
  std::vector<std::uint64_t> row(d + 1, 0);
  row[0] = 1;
  for (std::size_t n = 1; n <= d; ++n) {
    std::vector<std::uint64_t> next(d + 1, 0);
    next[0] = 1;
    std::uint64_t qk = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      qk = sat_mul(qk, p);  // p^k
      next[k] = sat_add(row[k - 1], sat_mul(qk, row[k]));
    }
    row = next;
  }
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= d; ++k) total = sat_add(total, row[k]);
  return total;
}

namespace {

// Enumerates all RREF matrices with the given pivot columns, invoking fn on
// each candidate; free entries run through an odometer, last position fastest.
template <class Fn>
void scan_rref_shapes(const PrimeField& f, std::size_t d, const std::vector<std::size_t>& pivots,
                      Fn&& fn) {
  const std::size_t r = pivots.size();
  Matrix m(f, r, d);
  std::vector<bool> is_pivot(d, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::pair<std::size_t, std::size_t>> free_pos;
  for (std::size_t i = 0; i < r; ++i) {
    m.at(i, pivots[i]) = 1;
    for (std::size_t c = pivots[i] + 1; c < d; ++c)
      if (!is_pivot[c]) free_pos.emplace_back(i, c);
  }
  const Residue top = f.modulus() - 1;
  for (;;) {
    fn(m);
    std::size_t k = free_pos.size();
    while (k > 0) {
      --k;
      auto [i, c] = free_pos[k];
      if (m.at(i, c) < top) {
        ++m.at(i, c);
        for (std::size_t k2 = k + 1; k2 < free_pos.size(); ++k2)
          m.at(free_pos[k2].first, free_pos[k2].second) = 0;
        break;
      }
      if (k == 0) return;
    }
    if (free_pos.empty()) return;
  }
}

// Lexicographic combinations of size r from {0..d-1}.
template <class Fn>
void scan_combinations(std::size_t d, std::size_t r, Fn&& fn) {
  std::vector<std::size_t> c(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = i;
  for (;;) {
    fn(c);
    std::size_t i = r;
    while (i > 0) {
      --i;
      if (c[i] < d - (r - i)) {
        ++c[i];
        for (std::size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
    if (r == 0) return;
  }
}

}  // namespace

std::vector<Subspace> enumerate_left_ideals(const Algebra& a, std::uint64_t cap) {
  const std::size_t d = a.dim;
  std::uint64_t total = subspace_count(a.field.modulus(), d);
  if (total > cap) throw EnumerationCapExceeded("left ideal enumeration", total, cap);

  std::vector<Matrix> left_mats;
  left_mats.reserve(d);
  for (std::size_t i = 0; i < d; ++i) left_mats.push_back(a.left_mul_matrix(a.basis_vector(i)));

  std::vector<Subspace> ideals;
  for (std::size_t r = 0; r <= d; ++r) {
    scan_combinations(d, r, [&](const std::vector<std::size_t>& pivots) {
      scan_rref_shapes(a.field, d, pivots, [&](const Matrix& basis) {
        Subspace cand;
        cand.ambient = d;
        cand.basis = basis;
        for (std::size_t row = 0; row < r; ++row) {
          for (std::size_t i = 0; i < d; ++i) {
            if (!cand.contains(left_mats[i].apply(basis.row(row)))) return;
          }
        }
        ideals.push_back(std::move(cand));
      });
    });
  }
  return ideals;
}

bool is_algebra_isomorphism(const Algebra& src, const Algebra& dst, const Matrix& map) {
  if (src.dim != dst.dim || src.field != dst.field) return false;
  if (map.rows != src.dim || map.cols != src.dim) return false;
  if (!inverse(map)) return false;
  if (map.apply(src.unit) != dst.unit) return false;
  for (std::size_t i = 0; i < src.dim; ++i) {
    Vec fi = map.apply(src.basis_vector(i));
    for (std::size_t j = 0; j < src.dim; ++j) {
      Vec lhs = map.apply(src.mul(src.basis_vector(i), src.basis_vector(j)));
      Vec rhs = dst.mul(fi, map.apply(src.basis_vector(j)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace sliplab
