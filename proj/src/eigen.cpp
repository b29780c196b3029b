#include "oam/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace oam {

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// A <- J* A J, V <- V J with J the identity except
//   J_pp = c, J_pq = s e^{i phi}, J_qp = -s e^{-i phi}, J_qq = c.
void rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
  const Complex g = a(p, q);
  const double mag = std::abs(g);
  if (mag == 0.0) return;
  const Complex phase = g / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex jpq = s * phase;
  const Complex jqp = -s * std::conj(phase);
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * c + akq * jqp;
    a(k, q) = akp * jpq + akq * c;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * c + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * c;
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const CMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("hermitian_eig: matrix is not square");
  const double scale = input.frobenius_norm();
  if (hermitian_defect(input) > kHermitianInputTol * std::max(1.0, scale)) {
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
  }
  const std::size_t n = input.rows();

  CMatrix a = 0.5 * (input + input.adjoint());
  CMatrix v = CMatrix::identity(n);
  const double threshold = kJacobiThreshold * scale;

  bool converged = off_diagonal_norm(a) <= threshold;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    converged = off_diagonal_norm(a) <= threshold;
  }
  if (!converged) throw std::runtime_error("hermitian_eig: no convergence in 100 sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace oam
