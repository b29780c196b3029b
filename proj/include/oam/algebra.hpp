#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "oam/cmatrix.hpp"

namespace oam {

/// Norm flavor of a direct-sum matrix algebra: compact operators carry the
/// operator (C*) norm, Hilbert-Schmidt operators the Frobenius (H*) norm.
enum class Flavor { CompactOperator, HilbertSchmidt };

std::string_view to_string(Flavor f);

/// Shape of ⊕_j M_{n_j}.
class AlgebraDescriptor {
 public:
  AlgebraDescriptor() = default;
  AlgebraDescriptor(std::vector<std::size_t> blocks, Flavor flavor);

  static AlgebraDescriptor matrix(std::size_t n, Flavor flavor) { return {{n}, flavor}; }

  const std::vector<std::size_t>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t block_dim(std::size_t j) const { return blocks_.at(j); }
  Flavor flavor() const { return flavor_; }
  /// Total number of matrix units Σ n_j².
  std::size_t unit_count() const;

  friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;

 private:
  std::vector<std::size_t> blocks_;
  Flavor flavor_ = Flavor::CompactOperator;
};

class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(AlgebraDescriptor descriptor, std::vector<CMatrix> blocks);

  static AlgebraElement zero(const AlgebraDescriptor& d);
  static AlgebraElement identity(const AlgebraDescriptor& d);
  /// Matrix unit E_pq inside block j.
  static AlgebraElement unit(const AlgebraDescriptor& d, std::size_t j, std::size_t p, std::size_t q);
  /// Embeds one block, zeros elsewhere.
  static AlgebraElement single_block(const AlgebraDescriptor& d, std::size_t j, CMatrix block);

  const AlgebraDescriptor& descriptor() const { return descriptor_; }
  const std::vector<CMatrix>& blocks() const { return blocks_; }
  const CMatrix& block(std::size_t j) const { return blocks_.at(j); }
  CMatrix& block(std::size_t j) { return blocks_.at(j); }

  AlgebraElement adjoint() const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(Complex s);

 private:
  AlgebraDescriptor descriptor_;
  std::vector<CMatrix> blocks_;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator*(Complex s, AlgebraElement a);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

/// Compact flavor: max over blocks of the largest singular value, computed
/// from the spectrum of a*a. Hilbert-Schmidt flavor: sqrt(Σ_j |a_j|_F²).
double operator_norm(const AlgebraElement& a);

/// Flavor norm of a - b.
double distance(const AlgebraElement& a, const AlgebraElement& b);

inline constexpr double kPositivityTol = 1e-10;

/// Every block Hermitian to `tol` with spectrum >= -tol.
bool is_positive(const AlgebraElement& a, double tol = kPositivityTol);

/// a = b1 - b2 + i (b3 - b4) with b1, b2 the positive and negative spectral
/// parts of (a + a*)/2 and b3, b4 those of (a - a*)/(2i).
std::array<AlgebraElement, 4> four_positive_decomposition(const AlgebraElement& a);

/// Σ_j trace(b_j* a_j).
Complex hs_inner(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace oam
