#include "oam/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace oam {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("CMatrix: entry count does not match shape");
  }
  if (!all_finite()) {
    throw std::invalid_argument("CMatrix: non-finite entry");
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::unit(std::size_t rows, std::size_t cols, std::size_t p, std::size_t q) {
  if (p >= rows || q >= cols) throw std::out_of_range("CMatrix::unit: index out of range");
  CMatrix m(rows, cols);
  m(p, q) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::column(std::span<const Complex> v) {
  return CMatrix(v.size(), 1, std::vector<Complex>(v.begin(), v.end()));
}

CMatrix CMatrix::row(std::span<const Complex> v) {
  return CMatrix(1, v.size(), std::vector<Complex>(v.begin(), v.end()));
}

CVector CMatrix::column_vector(std::size_t j) const {
  CVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

CVector CMatrix::row_vector(std::size_t i) const {
  return CVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

CVector CMatrix::diagonal_vector() const {
  CVector d(std::min(rows_, cols_));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i);
  return d;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

CMatrix CMatrix::transpose() const {
  CMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

CMatrix CMatrix::conjugate() const {
  CMatrix m = *this;
  for (auto& z : m.entries_) z = std::conj(z);
  return m;
}

Complex CMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: matrix is not square");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

bool CMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator-(CMatrix a) { return a *= -1.0; }
CMatrix operator*(Complex s, CMatrix a) { return a *= s; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("operator*: inner dimensions differ");
  }
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

CVector operator*(const CMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) throw std::invalid_argument("operator*: vector length mismatch");
  CVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

CMatrix rank_one(std::span<const Complex> xi, std::span<const Complex> eta) {
  if (xi.size() != eta.size() || xi.empty()) {
    throw std::invalid_argument("rank_one: vectors must have the same nonzero length");
  }
  const std::size_t n = xi.size();
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = xi[i] * std::conj(eta[j]);
  return m;
}

Complex dot(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
  Complex s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * std::conj(y[k]);
  return s;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

double distance(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "distance");
  double s = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) s += std::norm(a.entries()[k] - b.entries()[k]);
  return std::sqrt(s);
}

double hermitian_defect(const CMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("hermitian_defect: matrix is not square");
  double d = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - std::conj(a(j, i))));
  return d;
}

}  // namespace oam
