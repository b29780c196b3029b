#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "oam/algebra.hpp"
#include "oam/cmatrix.hpp"

namespace oam {

class Rng;

enum class ModuleKind { AlgebraAsModule, Rectangular, Vector, Pair, Diagonal, DirectSum };

std::string_view to_string(ModuleKind k);

/// Storage shape of one algebra block of a module: payload rows × n_j.
struct BlockShape {
  std::size_t rows;
  std::size_t cols;
  friend bool operator==(const BlockShape&, const BlockShape&) = default;
};

/// Every supported module is stored as ⊕_j M_{r_j × n_j} over ⊕_j M_{n_j}
/// with ⟨x, y⟩_j = x_j* y_j and (x·a)_j = x_j a_j:
///
///   AlgebraAsModule(n)  one n×n block
///   Rectangular(m, n)   one m×n block, B(C^n, C^m) over M_n
///   Vector(n)           one 1×n block holding the row ξᵀ
///   Pair(n)             one 2×n block holding the rows ξ1ᵀ, ξ2ᵀ
///   Diagonal(n)         n blocks of shape 1×1 over the diagonal algebra C^n
///   DirectSum(children) children's blocks side by side
///
/// For Vector and Pair this gives ⟨ξ, η⟩ = conj(ξ) ηᵀ = (η ⊗ ξ)ᵀ with the
/// action ξ·a = aᵀ ξ; the untransposed η ⊗ ξ is not right A-linear in η.
class ModuleDescriptor {
 public:
  static ModuleDescriptor algebra_as_module(std::size_t n, Flavor f = Flavor::CompactOperator);
  static ModuleDescriptor rectangular(std::size_t m, std::size_t n, Flavor f = Flavor::CompactOperator);
  static ModuleDescriptor vector(std::size_t n, Flavor f = Flavor::CompactOperator);
  static ModuleDescriptor pair(std::size_t n, Flavor f = Flavor::CompactOperator);
  static ModuleDescriptor diagonal(std::size_t n, Flavor f = Flavor::CompactOperator);
  static ModuleDescriptor direct_sum(std::vector<ModuleDescriptor> children);

  ModuleKind kind() const { return kind_; }
  /// Payload dimensions as the user states them (e.g. m and n of Rectangular).
  std::size_t dim1() const { return dim1_; }
  std::size_t dim2() const { return dim2_; }
  const std::vector<ModuleDescriptor>& children() const { return children_; }
  const AlgebraDescriptor& algebra() const { return algebra_; }
  Flavor flavor() const { return algebra_.flavor(); }
  const std::vector<BlockShape>& layout() const { return layout_; }
  std::size_t block_count() const { return layout_.size(); }

  /// dim_A W: the length of an orthonormal basis, Σ_j r_j.
  std::size_t orthogonal_dimension() const;
  /// min_j r_j, the per-block orthogonal dimension that the decomposition
  /// needs to be at least 2.
  std::size_t min_block_orthogonal_dimension() const;
  /// Σ_j r_j n_j complex coordinates.
  std::size_t coordinate_count() const;
  /// Whether nonzero x, y with ⟨x, y⟩ = 0 exist.
  bool has_orthogonal_pairs() const;

  std::string describe() const;

  friend bool operator==(const ModuleDescriptor&, const ModuleDescriptor&);

 private:
  ModuleDescriptor() = default;
  void finalize();

  ModuleKind kind_ = ModuleKind::AlgebraAsModule;
  std::size_t dim1_ = 0;
  std::size_t dim2_ = 0;
  std::vector<ModuleDescriptor> children_;
  AlgebraDescriptor algebra_;
  std::vector<BlockShape> layout_;
};

class ModuleElement {
 public:
  ModuleElement(ModuleDescriptor descriptor, std::vector<CMatrix> parts);

  static ModuleElement zero(const ModuleDescriptor& d);
  /// I.i.d. standard complex Gaussian coordinates.
  static ModuleElement random(const ModuleDescriptor& d, Rng& rng);
  /// Single-block kinds: the m×n (or n×n) payload.
  static ModuleElement from_matrix(const ModuleDescriptor& d, CMatrix payload);
  static ModuleElement from_vector(const ModuleDescriptor& d, const CVector& xi);
  static ModuleElement from_pair(const ModuleDescriptor& d, const CVector& xi1, const CVector& xi2);
  static ModuleElement from_diagonal(const ModuleDescriptor& d, const CVector& diag);
  /// Block j set to `part`, every other block zero.
  static ModuleElement from_block(const ModuleDescriptor& d, std::size_t j, CMatrix part);

  const ModuleDescriptor& descriptor() const { return descriptor_; }
  const std::vector<CMatrix>& parts() const { return parts_; }
  const CMatrix& part(std::size_t j) const { return parts_.at(j); }

  CMatrix matrix_payload() const;
  CVector vector_payload() const;
  std::pair<CVector, CVector> pair_payload() const;
  CVector diagonal_payload() const;
  /// All coordinates, blocks concatenated, each block row-major.
  CVector coordinates() const;

  ModuleElement& operator+=(const ModuleElement& other);
  ModuleElement& operator-=(const ModuleElement& other);
  ModuleElement& operator*=(Complex s);

 private:
  ModuleDescriptor descriptor_;
  std::vector<CMatrix> parts_;
};

ModuleElement operator+(ModuleElement x, const ModuleElement& y);
ModuleElement operator-(ModuleElement x, const ModuleElement& y);
ModuleElement operator-(ModuleElement x);
ModuleElement operator*(Complex s, ModuleElement x);

/// ⟨x, y⟩, conjugate-linear in x, linear and right A-linear in y.
AlgebraElement inner_product(const ModuleElement& x, const ModuleElement& y);
/// Right action x·a.
ModuleElement module_action(const ModuleElement& x, const AlgebraElement& a);
/// |⟨x, x⟩|^{1/2} in the algebra's flavor norm.
double module_norm(const ModuleElement& x);
double distance(const ModuleElement& x, const ModuleElement& y);
bool is_orthogonal(const ModuleElement& x, const ModuleElement& y, double tol);

}  // namespace oam
