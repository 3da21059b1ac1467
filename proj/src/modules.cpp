#include "sliplab/modules.hpp"

#include <algorithm>
#include <string>

namespace sliplab {

Vec RightModule::act(std::span<const Residue> m, std::span<const Residue> b) const {
  if (m.size() != mdim || b.size() != base.dim)
    throw DimensionMismatch("module act: length mismatch");
  Vec out(mdim, 0);
  for (std::size_t i = 0; i < mdim; ++i) {
    if (!m[i]) continue;
    for (std::size_t j = 0; j < base.dim; ++j) {
      if (!b[j]) continue;
      add_scaled(base.field, out, base.field.mul(m[i], b[j]), ract_row(i, j));
    }
  }
  return out;
}

Matrix RightModule::action_matrix(std::span<const Residue> b) const {
  if (b.size() != base.dim) throw DimensionMismatch("action_matrix: length mismatch");
  Matrix s(base.field, mdim, mdim);
  Vec col(mdim, 0);
  for (std::size_t i = 0; i < mdim; ++i) {
    std::fill(col.begin(), col.end(), 0);
    for (std::size_t j = 0; j < base.dim; ++j)
      if (b[j]) add_scaled(base.field, col, b[j], ract_row(i, j));
    for (std::size_t k = 0; k < mdim; ++k) s.at(k, i) = col[k];
  }
  return s;
}

Vec Bimodule::lact(std::span<const Residue> a, std::span<const Residue> m) const {
  if (a.size() != left_algebra.dim || m.size() != mdim)
    throw DimensionMismatch("bimodule lact: length mismatch");
  Vec out(mdim, 0);
  for (std::size_t i = 0; i < left_algebra.dim; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < mdim; ++j) {
      if (!m[j]) continue;
      add_scaled(left_algebra.field, out, left_algebra.field.mul(a[i], m[j]), lact_row(i, j));
    }
  }
  return out;
}

Vec Bimodule::ract(std::span<const Residue> m, std::span<const Residue> b) const {
  return right_module().act(m, b);
}

namespace {

Validation check_entries(const PrimeField& f, const Vec& tensor, const char* what) {
  for (Residue x : tensor) {
    if (x >= f.modulus())
      return Validation::fail(Validation::Code::entry_out_of_range, {},
                              std::string(what) + " entry not reduced mod p");
  }
  return Validation::ok_result();
}

}  // namespace

Validation validate_module(const RightModule& x) {
  using C = Validation::Code;
  const std::size_t bd = x.base.dim, m = x.mdim;
  if (x.raction.size() != bd * m * m)
    return Validation::fail(C::bad_shape, {}, "right action tensor has wrong size");
  if (auto v = check_entries(x.base.field, x.raction, "right action"); !v) return v;
  if (auto v = validate(x.base); !v) return v;

  const PrimeField& f = x.base.field;
  Vec lhs(m), rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < bd; ++j) {
      auto w = x.ract_row(i, j);  // f_i * e_j
      for (std::size_t k = 0; k < bd; ++k) {
        // (f_i e_j) e_k vs f_i (e_j e_k)
        std::fill(lhs.begin(), lhs.end(), 0);
        for (std::size_t l = 0; l < m; ++l)
          if (w[l]) add_scaled(f, lhs, w[l], x.ract_row(l, k));
        auto cjk = x.base.product_row(j, k);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (std::size_t l = 0; l < bd; ++l)
          if (cjk[l]) add_scaled(f, rhs, cjk[l], x.ract_row(i, l));
        if (lhs != rhs)
          return Validation::fail(C::module_axiom_violated, {i, j, k},
                                  "right module law fails at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ", " + std::to_string(k) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    Vec fi(m, 0);
    fi[i] = 1;
    if (x.act(fi, x.base.unit) != fi)
      return Validation::fail(C::unit_action_violated, {i, 0, 0},
                              "f_" + std::to_string(i) + " * 1 != f_" + std::to_string(i));
  }
  return Validation::ok_result();
}

Validation validate_module(const Bimodule& bm) {
  using C = Validation::Code;
  const std::size_t ad = bm.left_algebra.dim, bd = bm.right_algebra.dim, m = bm.mdim;
  if (bm.left_algebra.field != bm.right_algebra.field)
    return Validation::fail(C::bad_shape, {}, "bimodule: corner algebras over different fields");
  if (bm.laction.size() != ad * m * m)
    return Validation::fail(C::bad_shape, {}, "left action tensor has wrong size");
  if (auto v = check_entries(bm.left_algebra.field, bm.laction, "left action"); !v) return v;
  if (auto v = validate(bm.left_algebra); !v) return v;
  if (auto v = validate_module(bm.right_module()); !v) return v;

  const PrimeField& f = bm.left_algebra.field;
  Vec lhs(m), rhs(m);
  // left module law: (e_i e_j) f_k = e_i (e_j f_k)
  for (std::size_t i = 0; i < ad; ++i) {
    for (std::size_t j = 0; j < ad; ++j) {
      auto cij = bm.left_algebra.product_row(i, j);
      for (std::size_t k = 0; k < m; ++k) {
        std::fill(lhs.begin(), lhs.end(), 0);
        for (std::size_t l = 0; l < ad; ++l)
          if (cij[l]) add_scaled(f, lhs, cij[l], bm.lact_row(l, k));
        auto w = bm.lact_row(j, k);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (std::size_t l = 0; l < m; ++l)
          if (w[l]) add_scaled(f, rhs, w[l], bm.lact_row(i, l));
        if (lhs != rhs)
          return Validation::fail(C::module_axiom_violated, {i, j, k},
                                  "left module law fails at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ", " + std::to_string(k) + ")");
      }
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    Vec fk(m, 0);
    fk[k] = 1;
    if (bm.lact(bm.left_algebra.unit, fk) != fk)
      return Validation::fail(C::unit_action_violated, {k, 0, 0},
                              "1 * f_" + std::to_string(k) + " != f_" + std::to_string(k));
  }
  // compatibility: (e_i f_j) e_k = e_i (f_j e_k)
  for (std::size_t i = 0; i < ad; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto w = bm.lact_row(i, j);
      for (std::size_t k = 0; k < bd; ++k) {
        std::fill(lhs.begin(), lhs.end(), 0);
        for (std::size_t l = 0; l < m; ++l)
          if (w[l]) add_scaled(f, lhs, w[l], bm.ract_row(l, k));
        auto u = bm.ract_row(j, k);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (std::size_t l = 0; l < m; ++l)
          if (u[l]) add_scaled(f, rhs, u[l], bm.lact_row(i, l));
        if (lhs != rhs)
          return Validation::fail(C::compatibility_violated, {i, j, k},
                                  "bimodule compatibility fails at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ", " + std::to_string(k) + ")");
      }
    }
  }
  return Validation::ok_result();
}

RightModule make_right_module(Algebra base, std::size_t mdim, Vec raction) {
  RightModule x{std::move(base), mdim, std::move(raction)};
  require(validate_module(x));
  return x;
}

Bimodule make_bimodule(Algebra left, Algebra right, std::size_t mdim, Vec laction, Vec raction) {
  Bimodule m{std::move(left), std::move(right), mdim, std::move(laction), std::move(raction)};
  require(validate_module(m));
  return m;
}

Subspace module_principal_image(const RightModule& x, std::span<const Residue> b) {
  return column_space(x.action_matrix(b));
}

Subspace left_annihilator(const Bimodule& m) {
  // rows indexed by (module basis j, output coordinate k); columns by a-coordinates
  const std::size_t ad = m.left_algebra.dim;
  Matrix cons(m.left_algebra.field, m.mdim * m.mdim, ad);
  for (std::size_t j = 0; j < m.mdim; ++j)
    for (std::size_t k = 0; k < m.mdim; ++k)
      for (std::size_t i = 0; i < ad; ++i) cons.at(j * m.mdim + k, i) = m.lact_row(i, j)[k];
  return nullspace(cons);
}

EndomorphismAlgebra endomorphism_algebra(const RightModule& x) {
  const std::size_t m = x.mdim, bd = x.base.dim;
  const PrimeField& f = x.base.field;

  // commutant constraints: Phi * sigma_b - sigma_b * Phi = 0 per basis b
  Matrix cons(f, bd * m * m, m * m);
  for (std::size_t b = 0; b < bd; ++b) {
    Matrix s = x.action_matrix(x.base.basis_vector(b));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        auto row = cons.row((b * m + i) * m + j);
        for (std::size_t k = 0; k < m; ++k) {
          row[i * m + k] = f.add(row[i * m + k], s.at(k, j));
          row[k * m + j] = f.sub(row[k * m + j], s.at(i, k));
        }
      }
    }
  }
  Subspace sol = nullspace(cons);
  const std::size_t r = sol.dim();

  EndomorphismAlgebra out;
  out.basis.reserve(r);
  for (std::size_t u = 0; u < r; ++u) {
    Matrix phi(f, m, m);
    std::copy(sol.basis.row(u).begin(), sol.basis.row(u).end(), phi.data.begin());
    out.basis.push_back(std::move(phi));
  }

  out.end_alg.field = f;
  out.end_alg.dim = r;
  out.end_alg.structure.assign(r * r * r, 0);
  for (std::size_t u = 0; u < r; ++u) {
    for (std::size_t v = 0; v < r; ++v) {
      Matrix prod = out.basis[u].multiplied_by(out.basis[v]);
      Vec coords = rref_coordinates(sol, prod.data);
      std::copy(coords.begin(), coords.end(),
                out.end_alg.structure.begin() + static_cast<std::ptrdiff_t>((u * r + v) * r));
    }
  }
  out.end_alg.unit = rref_coordinates(sol, Matrix::identity(f, m).data);
  require_valid(out.end_alg);

  // left action of the endomorphism basis on M: phi_u * f_j = column j of phi_u
  Vec lact(r * m * m, 0);
  for (std::size_t u = 0; u < r; ++u)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) lact[(u * m + j) * m + k] = out.basis[u].at(k, j);
  out.as_bimodule = make_bimodule(out.end_alg, x.base, m, std::move(lact), x.raction);

  if (left_annihilator(out.as_bimodule).dim() != 0)
    throw Error("endomorphism_algebra: nonzero left annihilator");
  return out;
}

PeirceSplit peirce_split(const Algebra& a, std::span<const Residue> e) {
  const std::size_t d = a.dim;
  if (!is_idempotent(a, e)) throw NotIdempotent("peirce_split: e*e != e");
  if (is_zero_vec(e) || a.is_unit_elem(e))
    throw NontrivialIdempotentRequired("peirce_split: e must differ from 0 and 1");
  if (!is_left_semicentral(a, e)) throw NotLeftSemicentral("peirce_split: Ae != eAe");

  Vec fcompl(d);
  for (std::size_t i = 0; i < d; ++i) fcompl[i] = a.field.sub(a.unit[i], e[i]);

  // (1-e)Ae must vanish; anything else contradicts left semicentrality.
  for (std::size_t i = 0; i < d; ++i) {
    Vec w = a.mul(fcompl, a.mul(a.basis_vector(i), e));
    if (!is_zero_vec(w)) throw NotLeftSemicentral("peirce_split: (1-e)Ae != 0");
  }

  CornerAlgebra left = corner_algebra(a, e);
  CornerAlgebra right = corner_algebra(a, fcompl);

  SpanBuilder mid_sb(a.field, d);
  for (std::size_t i = 0; i < d; ++i) mid_sb.add(a.mul(e, a.mul(a.basis_vector(i), fcompl)));
  Subspace mid = mid_sb.to_subspace();
  const std::size_t s = mid.dim();
  const std::size_t r = left.corner.dim, t = right.corner.dim;
  if (r + s + t != d) throw Error("peirce_split: pieces do not span the algebra");

  Vec lact(r * s * s, 0), ract(s * t * s, 0);
  for (std::size_t u = 0; u < r; ++u) {
    for (std::size_t v = 0; v < s; ++v) {
      Vec prod = a.mul(left.span.basis.row(u), mid.basis.row(v));
      Vec coords = rref_coordinates(mid, prod);
      std::copy(coords.begin(), coords.end(),
                lact.begin() + static_cast<std::ptrdiff_t>((u * s + v) * s));
    }
  }
  for (std::size_t v = 0; v < s; ++v) {
    for (std::size_t w = 0; w < t; ++w) {
      Vec prod = a.mul(mid.basis.row(v), right.span.basis.row(w));
      Vec coords = rref_coordinates(mid, prod);
      std::copy(coords.begin(), coords.end(),
                ract.begin() + static_cast<std::ptrdiff_t>((v * t + w) * s));
    }
  }

  PeirceSplit out;
  out.corner_left = left.corner;
  out.corner_right = right.corner;
  out.off_diagonal =
      make_bimodule(left.corner, right.corner, s, std::move(lact), std::move(ract));
  out.embed_left = left.embed;
  out.embed_right = right.embed;
  out.embed_mid = Matrix(a.field, d, s);
  for (std::size_t v = 0; v < s; ++v)
    for (std::size_t k = 0; k < d; ++k) out.embed_mid.at(k, v) = mid.basis.at(v, k);
  return out;
}

}  // namespace sliplab
