#include "sliplab/zpd.hpp"

#include <algorithm>

namespace sliplab {

namespace {

struct ZpdSpan {
  SpanBuilder span;
  std::uint64_t points = 0;
};

ZpdSpan zero_product_span(const Algebra& a, const RunConfig& cfg) {
  const std::size_t d = a.dim;
  checked_pow(a.field.modulus(), d, cfg.enumeration_cap, "zpd enumeration");
  const std::size_t kernel_dim = d * d - d;
  ZpdSpan out{SpanBuilder(a.field, d * d), 0};
  ProjectiveScan scan(a.field, d);
  Vec v, row(d * d);
  while (scan.next(v)) {
    ++out.points;
    Subspace ker = nullspace(a.left_mul_matrix(v));
    bool full = false;
    for (std::size_t r = 0; r < ker.dim(); ++r) {
      auto k = ker.basis.row(r);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) row[i * d + j] = a.field.mul(v[i], k[j]);
      out.span.add(row);
      if (cfg.early_stop && out.span.rank() == kernel_dim) {
        full = true;
        break;
      }
    }
    if (full) break;
  }
  return out;
}

}  // namespace

ZpdReport is_zpd(const Algebra& a, const RunConfig& cfg) {
  ZpdReport rep;
  rep.kernel_dim = a.dim * a.dim - a.dim;
  ZpdSpan z = zero_product_span(a, cfg);
  rep.span_dim = z.span.rank();
  rep.points_processed = z.points;
  if (rep.span_dim > rep.kernel_dim) throw Error("is_zpd: span escaped the multiplication kernel");
  rep.is_zpd = rep.span_dim == rep.kernel_dim;
  return rep;
}

Matrix multiplication_matrix(const Algebra& a) {
  const std::size_t d = a.dim;
  Matrix mu(a.field, d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      auto c = a.product_row(i, j);
      for (std::size_t k = 0; k < d; ++k) mu.at(k, i * d + j) = c[k];
    }
  }
  return mu;
}

std::optional<Matrix> zpd_obstruction(const Algebra& a, const RunConfig& cfg) {
  const std::size_t d = a.dim;
  ZpdSpan z = zero_product_span(a, cfg);
  if (z.span.rank() == d * d - d) return std::nullopt;
  Subspace zs = z.span.to_subspace();
  Subspace ker = nullspace(multiplication_matrix(a));
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    if (!zs.contains(ker.basis.row(r))) {
      Matrix out(a.field, d, d);
      std::copy(ker.basis.row(r).begin(), ker.basis.row(r).end(), out.data.begin());
      return out;
    }
  }
  throw Error("zpd_obstruction: kernel contained in span despite dimension gap");
}

}  // namespace sliplab
