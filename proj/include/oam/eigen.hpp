#pragma once

#include <vector>

#include "oam/cmatrix.hpp"

namespace oam {

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // unitary, column k pairs with values[k]

  /// Q diag(f(values)) Q*.
  template <class F>
  CMatrix reconstruct(F&& f) const {
    const std::size_t n = values.size();
    CMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      const double w = f(values[k]);
      if (w == 0.0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const Complex qi = w * vectors(i, k);
        for (std::size_t j = 0; j < n; ++j) out(i, j) += qi * std::conj(vectors(j, k));
      }
    }
    return out;
  }
  CMatrix reconstruct() const {
    return reconstruct([](double v) { return v; });
  }
};

inline constexpr double kHermitianInputTol = 1e-12;
inline constexpr double kJacobiThreshold = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
/// Throws std::invalid_argument when `a` is not Hermitian to 1e-12 (relative
/// to max(1, |a|_F)) and std::runtime_error when 100 sweeps do not bring the
/// off-diagonal mass under 1e-13 |a|_F.
EigenDecomposition hermitian_eig(const CMatrix& a);

}  // namespace oam
