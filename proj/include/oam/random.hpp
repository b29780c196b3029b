#pragma once

#include <cstdint>
#include <random>

#include "oam/algebra.hpp"
#include "oam/cmatrix.hpp"

namespace oam {

/// Seeded deterministic generator. Engine: std::mt19937_64; complex samples
/// are standard complex Gaussians (independent real and imaginary parts with
/// variance 1/2 each, so E|z|² = 1). One owner per instance; parallel users
/// take independent children from split().
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  Complex complex_gaussian();
  double real_gaussian();
  double uniform();  // [0, 1)
  std::size_t index(std::size_t n);  // uniform in [0, n)
  Rng split();
  /// Raw 64-bit draw, used to seed child runs.
  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

CMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng);
CVector random_vector(std::size_t n, Rng& rng);
/// Haar-distributed unitary: Gram-Schmidt on a Gaussian matrix.
CMatrix random_unitary(std::size_t n, Rng& rng);
AlgebraElement random_algebra_element(const AlgebraDescriptor& d, Rng& rng);

/// Orthonormalizes the columns of `m` in place (modified Gram-Schmidt, two
/// passes). Columns must be linearly independent.
void orthonormalize_columns(CMatrix& m);

}  // namespace oam
