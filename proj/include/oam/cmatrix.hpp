#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace oam {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

inline constexpr Complex kI{0.0, 1.0};

/// Dense complex matrix, row-major. Carrier for algebra blocks and module
/// payloads. Entries are always finite; the checked constructor enforces it.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static CMatrix identity(std::size_t n);
  /// Matrix unit with a single 1 at (p, q).
  static CMatrix unit(std::size_t rows, std::size_t cols, std::size_t p, std::size_t q);
  static CMatrix diagonal(std::span<const Complex> d);
  static CMatrix column(std::span<const Complex> v);
  static CMatrix row(std::span<const Complex> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Complex> entries() const { return entries_; }
  std::span<Complex> entries() { return entries_; }

  CVector column_vector(std::size_t j) const;
  CVector row_vector(std::size_t i) const;
  CVector diagonal_vector() const;

  CMatrix adjoint() const;
  CMatrix transpose() const;
  CMatrix conjugate() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex s);

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a);
CMatrix operator*(Complex s, CMatrix a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CVector operator*(const CMatrix& a, std::span<const Complex> v);

/// (ξ ⊗ η)(ν) = (ν, η) ξ, i.e. the matrix ξ η*.
CMatrix rank_one(std::span<const Complex> xi, std::span<const Complex> eta);

/// Hilbert-space inner product, linear in the first argument.
Complex dot(std::span<const Complex> x, std::span<const Complex> y);
double norm(std::span<const Complex> v);

/// Frobenius norm of a - b.
double distance(const CMatrix& a, const CMatrix& b);

/// Largest |a_ij - conj(a_ji)|.
double hermitian_defect(const CMatrix& a);

}  // namespace oam
