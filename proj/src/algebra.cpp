#include "oam/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oam/eigen.hpp"

namespace oam {

namespace {

void require_same_descriptor(const AlgebraElement& a, const AlgebraElement& b, const char* what) {
  if (a.descriptor() != b.descriptor()) {
    throw std::invalid_argument(std::string(what) + ": algebra descriptor mismatch");
  }
}

double spectral_norm(const CMatrix& m) {
  const auto eig = hermitian_eig(m.adjoint() * m);
  return eig.values.empty() ? 0.0 : std::sqrt(std::max(0.0, eig.values.back()));
}

}  // namespace

std::string_view to_string(Flavor f) {
  return f == Flavor::CompactOperator ? "compact" : "hilbert_schmidt";
}

AlgebraDescriptor::AlgebraDescriptor(std::vector<std::size_t> blocks, Flavor flavor)
    : blocks_(std::move(blocks)), flavor_(flavor) {
  if (blocks_.empty()) throw std::invalid_argument("AlgebraDescriptor: no blocks");
  for (auto n : blocks_) {
    if (n < 1) throw std::invalid_argument("AlgebraDescriptor: block dimension must be >= 1");
  }
}

std::size_t AlgebraDescriptor::unit_count() const {
  std::size_t s = 0;
  for (auto n : blocks_) s += n * n;
  return s;
}

AlgebraElement::AlgebraElement(AlgebraDescriptor descriptor, std::vector<CMatrix> blocks)
    : descriptor_(std::move(descriptor)), blocks_(std::move(blocks)) {
  if (blocks_.size() != descriptor_.block_count()) {
    throw std::invalid_argument("AlgebraElement: block count does not match descriptor");
  }
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    const auto n = descriptor_.block_dim(j);
    if (blocks_[j].rows() != n || blocks_[j].cols() != n) {
      throw std::invalid_argument("AlgebraElement: block shape does not match descriptor");
    }
  }
}

AlgebraElement AlgebraElement::zero(const AlgebraDescriptor& d) {
  std::vector<CMatrix> blocks;
  blocks.reserve(d.block_count());
  for (auto n : d.blocks()) blocks.emplace_back(n, n);
  return {d, std::move(blocks)};
}

AlgebraElement AlgebraElement::identity(const AlgebraDescriptor& d) {
  std::vector<CMatrix> blocks;
  blocks.reserve(d.block_count());
  for (auto n : d.blocks()) blocks.push_back(CMatrix::identity(n));
  return {d, std::move(blocks)};
}

AlgebraElement AlgebraElement::unit(const AlgebraDescriptor& d, std::size_t j, std::size_t p,
                                    std::size_t q) {
  const auto n = d.block_dim(j);
  return single_block(d, j, CMatrix::unit(n, n, p, q));
}

AlgebraElement AlgebraElement::single_block(const AlgebraDescriptor& d, std::size_t j,
                                            CMatrix block) {
  auto out = zero(d);
  out.block(j) = std::move(block);
  return AlgebraElement(d, std::move(out.blocks_));
}

AlgebraElement AlgebraElement::adjoint() const {
  std::vector<CMatrix> blocks;
  blocks.reserve(blocks_.size());
  for (const auto& b : blocks_) blocks.push_back(b.adjoint());
  return {descriptor_, std::move(blocks)};
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same_descriptor(*this, other, "AlgebraElement::operator+");
  for (std::size_t j = 0; j < blocks_.size(); ++j) blocks_[j] += other.blocks_[j];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same_descriptor(*this, other, "AlgebraElement::operator-");
  for (std::size_t j = 0; j < blocks_.size(); ++j) blocks_[j] -= other.blocks_[j];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex s) {
  for (auto& b : blocks_) b *= s;
  return *this;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
AlgebraElement operator*(Complex s, AlgebraElement a) { return a *= s; }

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_descriptor(a, b, "AlgebraElement::operator*");
  std::vector<CMatrix> blocks;
  blocks.reserve(a.blocks().size());
  for (std::size_t j = 0; j < a.blocks().size(); ++j) blocks.push_back(a.block(j) * b.block(j));
  return {a.descriptor(), std::move(blocks)};
}

double operator_norm(const AlgebraElement& a) {
  if (a.descriptor().flavor() == Flavor::HilbertSchmidt) {
    double s = 0.0;
    for (const auto& b : a.blocks()) s += std::pow(b.frobenius_norm(), 2);
    return std::sqrt(s);
  }
  double m = 0.0;
  for (const auto& b : a.blocks()) m = std::max(m, spectral_norm(b));
  return m;
}

double distance(const AlgebraElement& a, const AlgebraElement& b) { return operator_norm(a - b); }

bool is_positive(const AlgebraElement& a, double tol) {
  if (tol < 0.0) throw std::invalid_argument("is_positive: negative tolerance");
  for (const auto& b : a.blocks()) {
    if (hermitian_defect(b) > tol) return false;
    const auto eig = hermitian_eig(0.5 * (b + b.adjoint()));
    if (!eig.values.empty() && eig.values.front() < -tol) return false;
  }
  return true;
}

std::array<AlgebraElement, 4> four_positive_decomposition(const AlgebraElement& a) {
  const auto& d = a.descriptor();
  std::array<AlgebraElement, 4> parts{AlgebraElement::zero(d), AlgebraElement::zero(d),
                                      AlgebraElement::zero(d), AlgebraElement::zero(d)};
  for (std::size_t j = 0; j < d.block_count(); ++j) {
    const CMatrix& b = a.block(j);
    const CMatrix re = 0.5 * (b + b.adjoint());
    const CMatrix im = Complex(0.0, -0.5) * (b - b.adjoint());
    const auto re_eig = hermitian_eig(re);
    const auto im_eig = hermitian_eig(im);
    parts[0].block(j) = re_eig.reconstruct([](double v) { return std::max(v, 0.0); });
    parts[1].block(j) = re_eig.reconstruct([](double v) { return std::max(-v, 0.0); });
    parts[2].block(j) = im_eig.reconstruct([](double v) { return std::max(v, 0.0); });
    parts[3].block(j) = im_eig.reconstruct([](double v) { return std::max(-v, 0.0); });
  }
  return parts;
}

Complex hs_inner(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_descriptor(a, b, "hs_inner");
  Complex s = 0.0;
  for (std::size_t j = 0; j < a.blocks().size(); ++j) {
    const auto ea = a.block(j).entries();
    const auto eb = b.block(j).entries();
    for (std::size_t k = 0; k < ea.size(); ++k) s += std::conj(eb[k]) * ea[k];
  }
  return s;
}

}  // namespace oam
