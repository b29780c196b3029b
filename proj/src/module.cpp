#include "oam/module.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oam/random.hpp"

namespace oam {

namespace {

void require_positive(std::size_t n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": dimension must be >= 1");
}

void require_same_module(const ModuleElement& x, const ModuleElement& y, const char* what) {
  if (!(x.descriptor() == y.descriptor())) {
    throw std::invalid_argument(std::string(what) + ": module descriptor mismatch");
  }
}

}  // namespace

std::string_view to_string(ModuleKind k) {
  switch (k) {
    case ModuleKind::AlgebraAsModule: return "algebra";
    case ModuleKind::Rectangular: return "rectangular";
    case ModuleKind::Vector: return "vector";
    case ModuleKind::Pair: return "pair";
    case ModuleKind::Diagonal: return "diagonal";
    case ModuleKind::DirectSum: return "direct_sum";
  }
  return "unknown";
}

ModuleDescriptor ModuleDescriptor::algebra_as_module(std::size_t n, Flavor f) {
  require_positive(n, "AlgebraAsModule");
  ModuleDescriptor d;
  d.kind_ = ModuleKind::AlgebraAsModule;
  d.dim1_ = d.dim2_ = n;
  d.algebra_ = AlgebraDescriptor::matrix(n, f);
  d.finalize();
  return d;
}

ModuleDescriptor ModuleDescriptor::rectangular(std::size_t m, std::size_t n, Flavor f) {
  require_positive(m, "Rectangular");
  require_positive(n, "Rectangular");
  ModuleDescriptor d;
  d.kind_ = ModuleKind::Rectangular;
  d.dim1_ = m;
  d.dim2_ = n;
  d.algebra_ = AlgebraDescriptor::matrix(n, f);
  d.finalize();
  return d;
}

ModuleDescriptor ModuleDescriptor::vector(std::size_t n, Flavor f) {
  require_positive(n, "VectorModule");
  ModuleDescriptor d;
  d.kind_ = ModuleKind::Vector;
  d.dim1_ = n;
  d.algebra_ = AlgebraDescriptor::matrix(n, f);
  d.finalize();
  return d;
}

ModuleDescriptor ModuleDescriptor::pair(std::size_t n, Flavor f) {
  require_positive(n, "PairModule");
  ModuleDescriptor d;
  d.kind_ = ModuleKind::Pair;
  d.dim1_ = n;
  d.algebra_ = AlgebraDescriptor::matrix(n, f);
  d.finalize();
  return d;
}

ModuleDescriptor ModuleDescriptor::diagonal(std::size_t n, Flavor f) {
  require_positive(n, "DiagonalModule");
  ModuleDescriptor d;
  d.kind_ = ModuleKind::Diagonal;
  d.dim1_ = n;
  d.algebra_ = AlgebraDescriptor(std::vector<std::size_t>(n, 1), f);
  d.finalize();
  return d;
}

ModuleDescriptor ModuleDescriptor::direct_sum(std::vector<ModuleDescriptor> children) {
  if (children.empty()) throw std::invalid_argument("DirectSum: no children");
  const Flavor f = children.front().flavor();
  std::vector<std::size_t> blocks;
  for (const auto& c : children) {
    if (c.kind() == ModuleKind::DirectSum || c.kind() == ModuleKind::Diagonal) {
      throw std::invalid_argument("DirectSum: children must be single-block modules");
    }
    if (c.flavor() != f) throw std::invalid_argument("DirectSum: children must share one flavor");
    blocks.push_back(c.algebra().block_dim(0));
  }
  ModuleDescriptor d;
  d.kind_ = ModuleKind::DirectSum;
  d.dim1_ = children.size();
  d.children_ = std::move(children);
  d.algebra_ = AlgebraDescriptor(std::move(blocks), f);
  d.finalize();
  return d;
}

void ModuleDescriptor::finalize() {
  layout_.clear();
  switch (kind_) {
    case ModuleKind::AlgebraAsModule: layout_.push_back({dim1_, dim1_}); break;
    case ModuleKind::Rectangular: layout_.push_back({dim1_, dim2_}); break;
    case ModuleKind::Vector: layout_.push_back({1, dim1_}); break;
    case ModuleKind::Pair: layout_.push_back({2, dim1_}); break;
    case ModuleKind::Diagonal: layout_.assign(dim1_, BlockShape{1, 1}); break;
    case ModuleKind::DirectSum:
      for (const auto& c : children_) layout_.push_back(c.layout().front());
      break;
  }
}

std::size_t ModuleDescriptor::orthogonal_dimension() const {
  std::size_t s = 0;
  for (const auto& b : layout_) s += b.rows;
  return s;
}

std::size_t ModuleDescriptor::min_block_orthogonal_dimension() const {
  std::size_t m = layout_.front().rows;
  for (const auto& b : layout_) m = std::min(m, b.rows);
  return m;
}

std::size_t ModuleDescriptor::coordinate_count() const {
  std::size_t s = 0;
  for (const auto& b : layout_) s += b.rows * b.cols;
  return s;
}

bool ModuleDescriptor::has_orthogonal_pairs() const {
  if (layout_.size() >= 2) return true;
  return layout_.front().rows >= 2;
}

std::string ModuleDescriptor::describe() const {
  const std::string fl = std::string(to_string(flavor()));
  switch (kind_) {
    case ModuleKind::AlgebraAsModule: return "AlgebraAsModule(" + std::to_string(dim1_) + ", " + fl + ")";
    case ModuleKind::Rectangular:
      return "Rectangular(" + std::to_string(dim1_) + "," + std::to_string(dim2_) + ", " + fl + ")";
    case ModuleKind::Vector: return "VectorModule(" + std::to_string(dim1_) + ", " + fl + ")";
    case ModuleKind::Pair: return "PairModule(" + std::to_string(dim1_) + ", " + fl + ")";
    case ModuleKind::Diagonal: return "DiagonalModule(" + std::to_string(dim1_) + ", " + fl + ")";
    case ModuleKind::DirectSum: {
      std::string s = "DirectSum(";
      for (std::size_t j = 0; j < children_.size(); ++j) {
        if (j) s += ", ";
        s += children_[j].describe();
      }
      return s + ")";
    }
  }
  return "?";
}

bool operator==(const ModuleDescriptor& a, const ModuleDescriptor& b) {
  return a.kind_ == b.kind_ && a.dim1_ == b.dim1_ && a.dim2_ == b.dim2_ && a.algebra_ == b.algebra_ &&
         a.children_ == b.children_;
}

ModuleElement::ModuleElement(ModuleDescriptor descriptor, std::vector<CMatrix> parts)
    : descriptor_(std::move(descriptor)), parts_(std::move(parts)) {
  const auto& layout = descriptor_.layout();
  if (parts_.size() != layout.size()) {
    throw std::invalid_argument("ModuleElement: part count does not match descriptor");
  }
  for (std::size_t j = 0; j < layout.size(); ++j) {
    if (parts_[j].rows() != layout[j].rows || parts_[j].cols() != layout[j].cols) {
      throw std::invalid_argument("ModuleElement: payload shape does not match descriptor");
    }
  }
}

ModuleElement ModuleElement::zero(const ModuleDescriptor& d) {
  std::vector<CMatrix> parts;
  for (const auto& b : d.layout()) parts.emplace_back(b.rows, b.cols);
  return {d, std::move(parts)};
}

ModuleElement ModuleElement::random(const ModuleDescriptor& d, Rng& rng) {
  std::vector<CMatrix> parts;
  for (const auto& b : d.layout()) parts.push_back(random_matrix(b.rows, b.cols, rng));
  return {d, std::move(parts)};
}

ModuleElement ModuleElement::from_matrix(const ModuleDescriptor& d, CMatrix payload) {
  if (d.kind() != ModuleKind::Rectangular && d.kind() != ModuleKind::AlgebraAsModule) {
    throw std::invalid_argument("from_matrix: module is not Rectangular or AlgebraAsModule");
  }
  return {d, {std::move(payload)}};
}

ModuleElement ModuleElement::from_vector(const ModuleDescriptor& d, const CVector& xi) {
  if (d.kind() != ModuleKind::Vector) throw std::invalid_argument("from_vector: not a VectorModule");
  return {d, {CMatrix::row(xi)}};
}

ModuleElement ModuleElement::from_pair(const ModuleDescriptor& d, const CVector& xi1,
                                       const CVector& xi2) {
  if (d.kind() != ModuleKind::Pair) throw std::invalid_argument("from_pair: not a PairModule");
  if (xi1.size() != d.dim1() || xi2.size() != d.dim1()) {
    throw std::invalid_argument("from_pair: component length mismatch");
  }
  std::vector<Complex> e(xi1.begin(), xi1.end());
  e.insert(e.end(), xi2.begin(), xi2.end());
  return {d, {CMatrix(2, d.dim1(), std::move(e))}};
}

ModuleElement ModuleElement::from_diagonal(const ModuleDescriptor& d, const CVector& diag) {
  if (d.kind() != ModuleKind::Diagonal) throw std::invalid_argument("from_diagonal: not a DiagonalModule");
  if (diag.size() != d.dim1()) throw std::invalid_argument("from_diagonal: length mismatch");
  std::vector<CMatrix> parts;
  for (const auto& z : diag) parts.push_back(CMatrix(1, 1, {z}));
  return {d, std::move(parts)};
}

ModuleElement ModuleElement::from_block(const ModuleDescriptor& d, std::size_t j, CMatrix part) {
  auto x = zero(d);
  x.parts_.at(j) = std::move(part);
  return {d, std::move(x.parts_)};
}

CMatrix ModuleElement::matrix_payload() const {
  if (parts_.size() != 1) throw std::logic_error("matrix_payload: multi-block module");
  return parts_.front();
}

CVector ModuleElement::vector_payload() const {
  if (descriptor_.kind() != ModuleKind::Vector) throw std::logic_error("vector_payload: not a VectorModule");
  return parts_.front().row_vector(0);
}

std::pair<CVector, CVector> ModuleElement::pair_payload() const {
  if (descriptor_.kind() != ModuleKind::Pair) throw std::logic_error("pair_payload: not a PairModule");
  return {parts_.front().row_vector(0), parts_.front().row_vector(1)};
}

CVector ModuleElement::diagonal_payload() const {
  if (descriptor_.kind() != ModuleKind::Diagonal) {
    throw std::logic_error("diagonal_payload: not a DiagonalModule");
  }
  CVector d;
  for (const auto& p : parts_) d.push_back(p(0, 0));
  return d;
}

CVector ModuleElement::coordinates() const {
  CVector c;
  c.reserve(descriptor_.coordinate_count());
  for (const auto& p : parts_) c.insert(c.end(), p.entries().begin(), p.entries().end());
  return c;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& other) {
  require_same_module(*this, other, "ModuleElement::operator+");
  for (std::size_t j = 0; j < parts_.size(); ++j) parts_[j] += other.parts_[j];
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& other) {
  require_same_module(*this, other, "ModuleElement::operator-");
  for (std::size_t j = 0; j < parts_.size(); ++j) parts_[j] -= other.parts_[j];
  return *this;
}

ModuleElement& ModuleElement::operator*=(Complex s) {
  for (auto& p : parts_) p *= s;
  return *this;
}

ModuleElement operator+(ModuleElement x, const ModuleElement& y) { return x += y; }
ModuleElement operator-(ModuleElement x, const ModuleElement& y) { return x -= y; }
ModuleElement operator-(ModuleElement x) { return x *= -1.0; }
ModuleElement operator*(Complex s, ModuleElement x) { return x *= s; }

AlgebraElement inner_product(const ModuleElement& x, const ModuleElement& y) {
  require_same_module(x, y, "inner_product");
  std::vector<CMatrix> blocks;
  blocks.reserve(x.parts().size());
  for (std::size_t j = 0; j < x.parts().size(); ++j) blocks.push_back(x.part(j).adjoint() * y.part(j));
  return {x.descriptor().algebra(), std::move(blocks)};
}

ModuleElement module_action(const ModuleElement& x, const AlgebraElement& a) {
  if (a.descriptor() != x.descriptor().algebra()) {
    throw std::invalid_argument("module_action: algebra element incompatible with module");
  }
  std::vector<CMatrix> parts;
  parts.reserve(x.parts().size());
  for (std::size_t j = 0; j < x.parts().size(); ++j) parts.push_back(x.part(j) * a.block(j));
  return {x.descriptor(), std::move(parts)};
}

double module_norm(const ModuleElement& x) { return std::sqrt(operator_norm(inner_product(x, x))); }

double distance(const ModuleElement& x, const ModuleElement& y) { return module_norm(x - y); }

bool is_orthogonal(const ModuleElement& x, const ModuleElement& y, double tol) {
  return operator_norm(inner_product(x, y)) <= tol;
}

}  // namespace oam
