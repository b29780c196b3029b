#include "oam/doubling.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

#include "oam/random.hpp"

namespace oam {

double unitary_defect(const CMatrix& u) {
  if (!u.is_square()) return std::numeric_limits<double>::infinity();
  return (u.adjoint() * u - CMatrix::identity(u.rows())).max_abs();
}

Doubling doubling_construction(const ModuleDescriptor& v, const CMatrix& u, Rng& rng,
                               std::size_t samples) {
  if (v.kind() != ModuleKind::Rectangular) {
    throw std::invalid_argument("doubling_construction: base module must be Rectangular");
  }
  const std::size_t m = v.dim1();
  const std::size_t n = v.dim2();
  if (u.rows() != m || u.cols() != m) throw std::invalid_argument("doubling_construction: U must be m x m");
  if (unitary_defect(u) > kUnitaryTol) throw std::invalid_argument("doubling_construction: U is not unitary");

  const auto doubled = ModuleDescriptor::rectangular(2 * m, n, v.flavor());
  auto stack = [doubled, m, n](const CMatrix& top, const CMatrix& bottom) {
    CMatrix out(2 * m, n);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        out(r, c) = top(r, c);
        out(m + r, c) = bottom(r, c);
      }
    }
    return ModuleElement::from_matrix(doubled, std::move(out));
  };
  const CMatrix zero(m, n);
  Doubling d{v, doubled,
             [stack, zero](const ModuleElement& x) { return stack(x.matrix_payload(), zero); },
             [stack, zero, u](const ModuleElement& x) { return stack(zero, u * x.matrix_payload()); },
             {}};

  DoublingReport& r = d.report;
  r.samples = samples;
  const std::array<Complex, 2> lambdas{Complex{1.0, 0.0}, kI};
  for (std::size_t s = 0; s < samples; ++s) {
    const auto x = ModuleElement::random(v, rng);
    const auto y = ModuleElement::random(v, rng);
    const double scale = 1.0 + module_norm(x) * module_norm(y);
    const auto px = d.phi(x);
    const auto py = d.phi(y);
    const auto ex = d.embed(x);
    const auto ey = d.embed(y);
    r.morphism = std::max(r.morphism, distance(inner_product(px, py), inner_product(x, y)) / scale);
    r.orthogonality = std::max(r.orthogonality, operator_norm(inner_product(px, ey)) / scale);
    for (const Complex lambda : lambdas) {
      const auto a = px + lambda * ex;
      const auto b = py - lambda * ey;
      r.polarized_orthogonality = std::max(r.polarized_orthogonality, operator_norm(inner_product(a, b)) / scale);
    }
  }
  return d;
}

}  // namespace oam
