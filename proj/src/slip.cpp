#include "sliplab/slip.hpp"

#include <algorithm>

namespace sliplab {

bool MapSpace::contains(const Matrix& map) const {
  if (map.rows != codomain_dim || map.cols != domain_dim)
    throw DimensionMismatch("map space contains: shape mismatch");
  return space.contains(map.data);
}

Matrix MapSpace::basis_map(std::size_t i) const {
  Matrix m(space.field(), codomain_dim, domain_dim);
  std::copy(space.basis.row(i).begin(), space.basis.row(i).end(), m.data.begin());
  return m;
}

MapSpace left_multiplier_space(const Algebra& a) {
  SpanBuilder sb(a.field, a.dim * a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) sb.add(a.left_mul_matrix(a.basis_vector(i)).data);
  if (sb.rank() != a.dim) throw Error("left_multiplier_space: dimension is not dim(A)");
  return MapSpace{a.dim, a.dim, sb.to_subspace()};
}

namespace {

// Accumulates the constraints psi(v) in im(sigma(v)) over all scalar lines of
// the domain and returns the solution space of vectorized maps.  `floor_dim`
// is a proven lower bound on the solution dimension (the multiplier maps),
// so constraint rank can never exceed ambient - floor_dim; reaching that rank
// allows an early stop.
template <class SigmaFn>
SpaceRun constraint_solution_space(const Algebra& domain, std::size_t codim,
                                   std::size_t floor_dim, SigmaFn&& sigma, const RunConfig& cfg,
                                   const char* what) {
  const std::size_t d = domain.dim;
  checked_pow(domain.field.modulus(), d, cfg.enumeration_cap, what);
  const std::size_t ambient = codim * d;
  const std::size_t max_rank = ambient - floor_dim;

  SpanBuilder cons(domain.field, ambient);
  std::uint64_t points = 0;
  bool early = false;
  Vec row(ambient);

  auto process = [&](const Vec& v) -> bool {
    ++points;
    Subspace certs = left_nullspace(sigma(v));
    for (std::size_t r = 0; r < certs.dim(); ++r) {
      auto c = certs.basis.row(r);
      for (std::size_t k = 0; k < codim; ++k)
        for (std::size_t j = 0; j < d; ++j) row[k * d + j] = domain.field.mul(c[k], v[j]);
      cons.add(row);
      if (cfg.early_stop && cons.rank() == max_rank) return true;
    }
    return false;
  };

  Vec v;
  if (cfg.projective_reduction) {
    ProjectiveScan scan(domain.field, d);
    while (scan.next(v)) {
      if (process(v)) {
        early = true;
        break;
      }
    }
  } else {
    VectorScan scan(domain.field, d);
    while (scan.next(v)) {
      if (is_zero_vec(v)) continue;
      if (process(v)) {
        early = true;
        break;
      }
    }
  }

  Subspace sol = nullspace(cons.to_subspace().basis);
  return SpaceRun{MapSpace{d, codim, sol}, points, early};
}

}  // namespace

SpaceRun lip_space_run(const Algebra& a, const RunConfig& cfg) {
  return constraint_solution_space(
      a, a.dim, a.dim, [&](const Vec& v) { return a.right_mul_matrix(v); }, cfg,
      "lip space enumeration");
}

MapSpace lip_space(const Algebra& a, const RunConfig& cfg) { return lip_space_run(a, cfg).space; }

bool is_left_multiplier_map(const Algebra& a, const Matrix& psi) {
  if (psi.rows != a.dim || psi.cols != a.dim)
    throw DimensionMismatch("is_left_multiplier_map: shape mismatch");
  return a.left_mul_matrix(psi.apply(a.unit)) == psi;
}

bool is_lip_pointwise(const Algebra& a, const Matrix& psi, const RunConfig& cfg) {
  if (psi.rows != a.dim || psi.cols != a.dim)
    throw DimensionMismatch("is_lip_pointwise: shape mismatch");
  checked_pow(a.field.modulus(), a.dim, cfg.enumeration_cap, "pointwise lip check");
  ProjectiveScan scan(a.field, a.dim);
  Vec v;
  while (scan.next(v)) {
    if (!in_column_space(a.right_mul_matrix(v), psi.apply(v))) return false;
  }
  return true;
}

bool is_local_pointwise(const Algebra& b, const RightModule& x, const Matrix& psi,
                        const RunConfig& cfg) {
  if (x.base != b) throw AlgebraMismatch("is_local_pointwise: module not over b");
  if (psi.rows != x.mdim || psi.cols != b.dim)
    throw DimensionMismatch("is_local_pointwise: shape mismatch");
  checked_pow(b.field.modulus(), b.dim, cfg.enumeration_cap, "pointwise local check");
  ProjectiveScan scan(b.field, b.dim);
  Vec v;
  while (scan.next(v)) {
    if (!in_column_space(x.action_matrix(v), psi.apply(v))) return false;
  }
  return true;
}

SlipReport is_slip(const Algebra& a, const RunConfig& cfg) {
  SlipReport rep;
  MapSpace mult = left_multiplier_space(a);
  rep.multiplier_dim = mult.dim();
  if (a.dim == 1) {
    // every linear map on a 1-dim unital algebra is a multiplier
    rep.lip_dim = 1;
    rep.is_slip = true;
    return rep;
  }
  SpaceRun run = lip_space_run(a, cfg);
  rep.lip_dim = run.space.dim();
  rep.points_processed = run.points_processed;
  rep.early_stop = run.early_stop;
  rep.is_slip = rep.lip_dim == rep.multiplier_dim;
  if (!rep.is_slip) {
    // extend the multiplier basis by lip basis rows; first row that enlarges
    // the span is the canonical witness
    SpanBuilder ext(a.field, a.dim * a.dim);
    ext.seed(mult.space);
    for (std::size_t i = 0; i < run.space.dim(); ++i) {
      if (ext.add(run.space.space.basis.row(i))) {
        rep.witness = run.space.basis_map(i);
        break;
      }
    }
    if (!rep.witness) throw Error("is_slip: no witness despite dimension gap");
    if (!is_lip_pointwise(a, *rep.witness, cfg) || is_left_multiplier_map(a, *rep.witness))
      throw Error("is_slip: witness failed re-verification");
  }
  return rep;
}

SpaceRun local_left_multiplier_space_run(const Algebra& b, const RightModule& x,
                                         const RunConfig& cfg) {
  if (x.base != b) throw AlgebraMismatch("local_left_multiplier_space: module not over b");
  return constraint_solution_space(
      b, x.mdim, x.mdim, [&](const Vec& v) { return x.action_matrix(v); }, cfg,
      "local multiplier enumeration");
}

MapSpace local_left_multiplier_space(const Algebra& b, const RightModule& x,
                                     const RunConfig& cfg) {
  return local_left_multiplier_space_run(b, x, cfg).space;
}

MapSpace module_multiplier_space(const Algebra& b, const RightModule& x) {
  if (x.base != b) throw AlgebraMismatch("module_multiplier_space: module not over b");
  SpanBuilder sb(b.field, x.mdim * b.dim);
  Vec row(x.mdim * b.dim, 0);
  for (std::size_t i = 0; i < x.mdim; ++i) {
    // map b |-> f_i * b has matrix entry (r, s) = (f_i * e_s)[r]
    for (std::size_t s = 0; s < b.dim; ++s) {
      auto w = x.ract_row(i, s);
      for (std::size_t r = 0; r < x.mdim; ++r) row[r * b.dim + s] = w[r];
    }
    sb.add(row);
  }
  if (sb.rank() != x.mdim) throw Error("module_multiplier_space: dimension is not mdim");
  return MapSpace{b.dim, x.mdim, sb.to_subspace()};
}

bool local_equals_multiplier(const Algebra& b, const RightModule& x, const RunConfig& cfg) {
  MapSpace mult = module_multiplier_space(b, x);
  MapSpace local = local_left_multiplier_space(b, x, cfg);
  if (!subspace_leq(mult.space, local.space))
    throw Error("local_equals_multiplier: multiplier space escaped the local space");
  return mult.dim() == local.dim();
}

bool lip_check_full(const Algebra& a, const Matrix& psi, std::uint64_t cap) {
  if (psi.rows != a.dim || psi.cols != a.dim)
    throw DimensionMismatch("lip_check_full: shape mismatch");
  for (const Subspace& j : enumerate_left_ideals(a, cap)) {
    for (std::size_t r = 0; r < j.dim(); ++r) {
      if (!j.contains(psi.apply(j.basis.row(r)))) return false;
    }
  }
  return true;
}

namespace {

Matrix slice(const Matrix& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
  Matrix out(m.field, r1 - r0, c1 - c0);
  for (std::size_t r = r0; r < r1; ++r)
    for (std::size_t c = c0; c < c1; ++c) out.at(r - r0, c - c0) = m.at(r, c);
  return out;
}

}  // namespace

TriangularDecomposition decompose_lip_triangular(const Algebra& t, std::span<const Residue> e,
                                                 const Matrix& psi, const RunConfig& cfg,
                                                 const MapSpace* lip) {
  const std::size_t d = t.dim;
  if (psi.rows != d || psi.cols != d)
    throw DimensionMismatch("decompose_lip_triangular: shape mismatch");
  bool lip_ok = lip != nullptr ? lip->contains(psi) : is_lip_pointwise(t, psi, cfg);
  if (!lip_ok) throw NotLip("decompose_lip_triangular: map does not preserve left ideals");

  TriangularDecomposition out;
  out.split = peirce_split(t, e);
  const std::size_t r = out.split.corner_left.dim;
  const std::size_t s = out.split.off_diagonal.mdim;
  const std::size_t w = out.split.corner_right.dim;

  Matrix change(t.field, d, d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t c = 0; c < r; ++c) change.at(k, c) = out.split.embed_left.at(k, c);
    for (std::size_t c = 0; c < s; ++c) change.at(k, r + c) = out.split.embed_mid.at(k, c);
    for (std::size_t c = 0; c < w; ++c) change.at(k, r + s + c) = out.split.embed_right.at(k, c);
  }
  auto inv = inverse(change);
  if (!inv) throw Error("decompose_lip_triangular: Peirce basis is singular");
  Matrix block = inv->multiplied_by(psi).multiplied_by(change);

  // allowed pattern: A'-columns land in A', M'-columns in M', B'-columns in M'+B'
  for (std::size_t row = 0; row < d; ++row) {
    for (std::size_t col = 0; col < d; ++col) {
      if (block.at(row, col) == 0) continue;
      bool ok;
      if (col < r) ok = row < r;
      else if (col < r + s) ok = row >= r && row < r + s;
      else ok = row >= r;
      if (!ok)
        throw BlockStructureViolated("decompose_lip_triangular: entry (" + std::to_string(row) +
                                     ", " + std::to_string(col) + ") outside the block pattern");
    }
  }

  out.alpha = slice(block, 0, r, 0, r);
  out.tau = slice(block, r, r + s, r, r + s);
  out.beta1 = slice(block, r, r + s, r + s, d);
  out.beta2 = slice(block, r + s, d, r + s, d);

  const Bimodule& m = out.split.off_diagonal;
  out.tau_compatible = true;
  for (std::size_t u = 0; u < r && out.tau_compatible; ++u) {
    // alpha(a_u) in corner coordinates = column u of alpha
    Vec au(r, 0);
    for (std::size_t k = 0; k < r; ++k) au[k] = out.alpha.at(k, u);
    for (std::size_t v = 0; v < s; ++v) {
      Vec lhs = out.tau.apply(m.lact_row(u, v));
      Vec fv(s, 0);
      fv[v] = 1;
      Vec rhs = m.lact(au, fv);
      if (lhs != rhs) {
        out.tau_compatible = false;
        break;
      }
    }
  }
  out.alpha_lip = is_lip_pointwise(out.split.corner_left, out.alpha, cfg);
  out.beta2_lip = is_lip_pointwise(out.split.corner_right, out.beta2, cfg);
  out.beta1_local = is_local_pointwise(out.split.corner_right, m.right_module(), out.beta1, cfg);
  return out;
}

}  // namespace sliplab
