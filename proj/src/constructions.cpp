#include "sliplab/constructions.hpp"

#include <algorithm>
#include <string>

namespace sliplab {

Algebra scalar_field(std::uint32_t p) {
  Algebra a;
  a.field = PrimeField(p);
  a.dim = 1;
  a.structure = {1};
  a.unit = {1};
  require_valid(a);
  return a;
}

Algebra u_dual_numbers(std::uint32_t p) {
  Algebra a;
  a.field = PrimeField(p);
  a.dim = 2;
  // basis (1, x): 1*1 = 1, 1*x = x*1 = x, x*x = 0
  a.structure = {1, 0, 0, 1, 0, 1, 0, 0};
  a.unit = {1, 0};
  require_valid(a);
  return a;
}

std::size_t BlockShape::total() const {
  std::size_t n = 0;
  for (std::size_t k : parts) n += k;
  return n;
}

BlockConstruction block_upper(const Algebra& base, const BlockShape& shape) {
  if (shape.parts.empty()) throw Error("block_upper: shape must have at least one part");
  for (std::size_t k : shape.parts)
    if (k == 0) throw Error("block_upper: block sizes must be >= 1");
  const std::size_t n = shape.total();
  const std::size_t db = base.dim;

  // block index of each matrix row/column
  std::vector<std::size_t> blk(n);
  {
    std::size_t pos = 0;
    for (std::size_t b = 0; b < shape.parts.size(); ++b)
      for (std::size_t k = 0; k < shape.parts[b]; ++k) blk[pos++] = b;
  }

  // in-pattern positions, row-major; base basis runs innermost
  std::vector<std::pair<std::size_t, std::size_t>> pos_list;
  std::vector<std::vector<std::size_t>> pos_index(n, std::vector<std::size_t>(n, SIZE_MAX));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (blk[i] <= blk[j]) {
        pos_index[i][j] = pos_list.size();
        pos_list.emplace_back(i, j);
      }
    }
  }
  const std::size_t d = pos_list.size() * db;
  auto idx = [&](std::size_t i, std::size_t j, std::size_t u) {
    return pos_index[i][j] * db + u;
  };

  Algebra a;
  a.field = base.field;
  a.dim = d;
  a.structure.assign(d * d * d, 0);
  a.unit.assign(d, 0);

  for (std::size_t t1 = 0; t1 < pos_list.size(); ++t1) {
    auto [i, j] = pos_list[t1];
    for (std::size_t t2 = 0; t2 < pos_list.size(); ++t2) {
      auto [k, l] = pos_list[t2];
      if (j != k) continue;
      // (E_ij ⊗ x_u)(E_jl ⊗ x_v) = E_il ⊗ x_u x_v
      for (std::size_t u = 0; u < db; ++u) {
        for (std::size_t v = 0; v < db; ++v) {
          auto prod = base.product_row(u, v);
          auto row = std::span<Residue>(
              a.structure.data() + (idx(i, j, u) * d + idx(k, l, v)) * d, d);
          for (std::size_t w = 0; w < db; ++w) row[idx(i, l, w)] = prod[w];
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t u = 0; u < db; ++u) a.unit[idx(i, i, u)] = base.unit[u];
  require_valid(a);

  BlockConstruction out;
  out.algebra = std::move(a);
  for (std::size_t b = 0; b < shape.parts.size(); ++b) {
    Vec f(d, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (blk[i] != b) continue;
      for (std::size_t u = 0; u < db; ++u) f[idx(i, i, u)] = base.unit[u];
    }
    out.triangulating.push_back(std::move(f));
  }
  return out;
}

Algebra matn(const Algebra& base, std::size_t n) {
  return block_upper(base, BlockShape{{n}}).algebra;
}

Algebra tn(const Algebra& base, std::size_t n) {
  return block_upper(base, BlockShape{std::vector<std::size_t>(n, 1)}).algebra;
}

TriangularConstruction triangular(const Bimodule& m) {
  require(validate_module(m));
  const Algebra& A = m.left_algebra;
  const Algebra& B = m.right_algebra;
  const std::size_t r = A.dim, s = m.mdim, t = B.dim;
  const std::size_t d = r + s + t;
  const PrimeField& f = A.field;

  Algebra alg;
  alg.field = f;
  alg.dim = d;
  alg.structure.assign(d * d * d, 0);
  alg.unit.assign(d, 0);
  auto row_of = [&](std::size_t i, std::size_t j) {
    return std::span<Residue>(alg.structure.data() + (i * d + j) * d, d);
  };

  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      auto c = A.product_row(i, j);
      auto row = row_of(i, j);
      for (std::size_t k = 0; k < r; ++k) row[k] = c[k];
    }
    for (std::size_t j = 0; j < s; ++j) {
      auto c = m.lact_row(i, j);
      auto row = row_of(i, r + j);
      for (std::size_t k = 0; k < s; ++k) row[r + k] = c[k];
    }
  }
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      auto c = m.ract_row(i, j);
      auto row = row_of(r + i, r + s + j);
      for (std::size_t k = 0; k < s; ++k) row[r + k] = c[k];
    }
  }
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      auto c = B.product_row(i, j);
      auto row = row_of(r + s + i, r + s + j);
      for (std::size_t k = 0; k < t; ++k) row[r + s + k] = c[k];
    }
  }
  for (std::size_t k = 0; k < r; ++k) alg.unit[k] = A.unit[k];
  for (std::size_t k = 0; k < t; ++k) alg.unit[r + s + k] = B.unit[k];
  require_valid(alg);

  TriangularConstruction out;
  out.algebra = std::move(alg);
  out.corner_idempotent.assign(d, 0);
  for (std::size_t k = 0; k < r; ++k) out.corner_idempotent[k] = A.unit[k];
  out.left_dim = r;
  out.middle_dim = s;
  out.right_dim = t;
  if (!is_left_semicentral(out.algebra, out.corner_idempotent))
    throw Error("triangular: corner idempotent is not left semicentral");
  return out;
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  if (a.field != b.field) throw AlgebraMismatch("direct_product: field mismatch");
  const std::size_t da = a.dim, db = b.dim, d = da + db;
  Algebra out;
  out.field = a.field;
  out.dim = d;
  out.structure.assign(d * d * d, 0);
  out.unit.assign(d, 0);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      auto c = a.product_row(i, j);
      for (std::size_t k = 0; k < da; ++k) out.structure[(i * d + j) * d + k] = c[k];
    }
  }
  for (std::size_t i = 0; i < db; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      auto c = b.product_row(i, j);
      for (std::size_t k = 0; k < db; ++k)
        out.structure[((da + i) * d + (da + j)) * d + (da + k)] = c[k];
    }
  }
  for (std::size_t k = 0; k < da; ++k) out.unit[k] = a.unit[k];
  for (std::size_t k = 0; k < db; ++k) out.unit[da + k] = b.unit[k];
  require_valid(out);
  return out;
}

RightModule regular_module(const Algebra& a) {
  return make_right_module(a, a.dim, a.structure);
}

Bimodule regular_bimodule(const Algebra& a) {
  return make_bimodule(a, a, a.dim, a.structure, a.structure);
}

Bimodule scalar_right_bimodule(const Algebra& a) {
  Algebra f = scalar_field(a.field.modulus());
  Vec ract(a.dim * 1 * a.dim, 0);
  for (std::size_t i = 0; i < a.dim; ++i) ract[i * a.dim + i] = 1;  // f_i * 1 = f_i
  return make_bimodule(a, std::move(f), a.dim, a.structure, std::move(ract));
}

Bimodule zero_bimodule(const Algebra& a, const Algebra& b) {
  if (a.field != b.field) throw AlgebraMismatch("zero_bimodule: field mismatch");
  return make_bimodule(a, b, 0, {}, {});
}

Bimodule column_bimodule(const Algebra& base, std::size_t n) {
  Algebra big = matn(base, n);
  const std::size_t db = base.dim, m = n * db, ad = big.dim;
  // module basis: f_{k,v} = column slot k tensored with base basis v
  auto midx = [&](std::size_t k, std::size_t v) { return k * db + v; };
  // matn basis: positions (i, j) row-major, base innermost
  auto aidx = [&](std::size_t i, std::size_t j, std::size_t u) { return (i * n + j) * db + u; };

  Vec lact(ad * m * m, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t u = 0; u < db; ++u)
        for (std::size_t v = 0; v < db; ++v) {
          // (E_ij ⊗ x_u)(f_j ⊗ x_v) = f_i ⊗ x_u x_v
          auto prod = base.product_row(u, v);
          std::size_t off = (aidx(i, j, u) * m + midx(j, v)) * m;
          for (std::size_t w = 0; w < db; ++w) lact[off + midx(i, w)] = prod[w];
        }
  Vec ract(m * db * m, 0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t v = 0; v < db; ++v)
      for (std::size_t w = 0; w < db; ++w) {
        // (f_k ⊗ x_v) x_w = f_k ⊗ x_v x_w
        auto prod = base.product_row(v, w);
        std::size_t off = (midx(k, v) * db + w) * m;
        for (std::size_t z = 0; z < db; ++z) ract[off + midx(k, z)] = prod[z];
      }
  return make_bimodule(std::move(big), base, m, std::move(lact), std::move(ract));
}

RightModule row_module(const Algebra& base, std::size_t n) {
  Algebra big = matn(base, n);
  const std::size_t db = base.dim, m = n * db;
  auto midx = [&](std::size_t j, std::size_t v) { return j * db + v; };
  auto aidx = [&](std::size_t i, std::size_t j, std::size_t u) { return (i * n + j) * db + u; };

  Vec ract(m * big.dim * m, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t v = 0; v < db; ++v)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t u = 0; u < db; ++u) {
          // (f_j ⊗ x_v)(E_jl ⊗ x_u) = f_l ⊗ x_v x_u
          auto prod = base.product_row(v, u);
          std::size_t off = (midx(j, v) * big.dim + aidx(j, l, u)) * m;
          for (std::size_t w = 0; w < db; ++w) ract[off + midx(l, w)] = prod[w];
        }
  return make_right_module(std::move(big), m, std::move(ract));
}

RightModule matrix_module(const Algebra& a, std::size_t r, std::size_t s) {
  if (r == 0 || s == 0) throw Error("matrix_module: shape must be positive");
  const std::size_t da = a.dim, m = r * s * da;
  Vec ract(m * da * m, 0);
  for (std::size_t slot = 0; slot < r * s; ++slot)
    for (std::size_t u = 0; u < da; ++u)
      for (std::size_t w = 0; w < da; ++w) {
        // (f_slot ⊗ x_u) x_w = f_slot ⊗ x_u x_w
        auto prod = a.product_row(u, w);
        std::size_t off = ((slot * da + u) * da + w) * m;
        for (std::size_t z = 0; z < da; ++z) ract[off + slot * da + z] = prod[z];
      }
  return make_right_module(a, m, std::move(ract));
}

Bimodule e3_bimodule(const Algebra& a) { return mixed_bimodule(a, a); }

Bimodule mixed_bimodule(const Algebra& a, const Algebra& b) {
  Algebra prod = direct_product(a, b);
  const std::size_t da = a.dim, m = da;
  Vec lact(prod.dim * m * m, 0);
  // (x, y) * v = x v : only the first-factor basis acts
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto c = a.product_row(i, j);
      std::size_t off = (i * m + j) * m;
      for (std::size_t k = 0; k < m; ++k) lact[off + k] = c[k];
    }
  return make_bimodule(std::move(prod), a, m, std::move(lact), a.structure);
}

Validation verify_triangulating(const Algebra& a, const std::vector<Vec>& idems) {
  using C = Validation::Code;
  const std::size_t d = a.dim;
  if (idems.empty())
    return Validation::fail(C::bad_shape, {}, "triangulating list must be nonempty");
  for (std::size_t k = 0; k < idems.size(); ++k) {
    if (idems[k].size() != d)
      return Validation::fail(C::bad_shape, {k, 0, 0},
                              "idempotent " + std::to_string(k) + " has wrong length");
    if (!is_idempotent(a, idems[k]))
      return Validation::fail(C::not_idempotent, {k, 0, 0},
                              "element " + std::to_string(k) + " is not idempotent");
    if (is_zero_vec(idems[k]))
      return Validation::fail(C::zero_idempotent, {k, 0, 0},
                              "element " + std::to_string(k) + " is zero");
  }
  Vec sum(d, 0);
  for (const auto& e : idems) add_scaled(a.field, sum, 1, e);
  if (sum != a.unit)
    return Validation::fail(C::sum_not_unit, {}, "idempotents do not sum to the unit");

  if (!is_left_semicentral(a, idems[0]))
    return Validation::fail(C::not_left_semicentral, {0, 0, 0},
                            "element 0 is not left semicentral");

  Vec partial = idems[0];
  for (std::size_t k = 1; k < idems.size(); ++k) {
    Vec fk(d);
    for (std::size_t i = 0; i < d; ++i) fk[i] = a.field.sub(a.unit[i], partial[i]);
    if (is_zero_vec(fk))
      return Validation::fail(C::not_in_corner, {k, 0, 0},
                              "corner before element " + std::to_string(k) + " is zero");
    if (!is_idempotent(a, fk))
      return Validation::fail(C::not_idempotent, {k, 0, 0},
                              "complement before element " + std::to_string(k) +
                                  " is not idempotent");
    CornerAlgebra corner = corner_algebra(a, fk);
    if (!corner.span.contains(idems[k]))
      return Validation::fail(C::not_in_corner, {k, 0, 0},
                              "element " + std::to_string(k) + " is outside its corner");
    Vec coords = rref_coordinates(corner.span, idems[k]);
    if (!is_left_semicentral(corner.corner, coords))
      return Validation::fail(C::not_left_semicentral, {k, 0, 0},
                              "element " + std::to_string(k) +
                                  " is not left semicentral in its corner");
    add_scaled(a.field, partial, 1, idems[k]);
  }
  return Validation::ok_result();
}

}  // namespace sliplab
