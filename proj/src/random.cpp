#include "oam/random.hpp"

#include <cmath>
#include <stdexcept>

namespace oam {

Complex Rng::complex_gaussian() {
  constexpr double s = 0.70710678118654752440;
  const double re = normal_(engine_);
  const double im = normal_(engine_);
  return {s * re, s * im};
}

double Rng::real_gaussian() { return normal_(engine_); }

double Rng::uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Rng::index: empty range");
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
}

Rng Rng::split() { return Rng(engine_()); }

CMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  CMatrix m(rows, cols);
  for (auto& z : m.entries()) z = rng.complex_gaussian();
  return m;
}

CVector random_vector(std::size_t n, Rng& rng) {
  CVector v(n);
  for (auto& z : v) z = rng.complex_gaussian();
  return v;
}

void orthonormalize_columns(CMatrix& m) {
  const std::size_t rows = m.rows();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex proj = 0.0;
        for (std::size_t i = 0; i < rows; ++i) proj += std::conj(m(i, k)) * m(i, j);
        for (std::size_t i = 0; i < rows; ++i) m(i, j) -= proj * m(i, k);
      }
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < rows; ++i) nrm += std::norm(m(i, j));
    nrm = std::sqrt(nrm);
    if (nrm < 1e-12) throw std::runtime_error("orthonormalize_columns: dependent columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) /= nrm;
  }
}

CMatrix random_unitary(std::size_t n, Rng& rng) {
  CMatrix u = random_matrix(n, n, rng);
  orthonormalize_columns(u);
  return u;
}

AlgebraElement random_algebra_element(const AlgebraDescriptor& d, Rng& rng) {
  std::vector<CMatrix> blocks;
  blocks.reserve(d.block_count());
  for (auto n : d.blocks()) blocks.push_back(random_matrix(n, n, rng));
  return {d, std::move(blocks)};
}

}  // namespace oam
