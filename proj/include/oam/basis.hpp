#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "oam/module.hpp"

namespace oam {

class Rng;

/// Per-block choice of orthonormal bases: the columns of `rows` (r_j × r_j)
/// label basis elements, the columns of `cols` (n_j × n_j) are the vectors
/// ξ_i of C^{n_j} whose rank-one projections ξ_i ⊗ ξ_i appear as ⟨w, w⟩.
struct Frame {
  CMatrix rows;
  CMatrix cols;
};

std::vector<Frame> canonical_frames(const ModuleDescriptor& w);
std::vector<Frame> random_frames(const ModuleDescriptor& w, Rng& rng);

struct OrthonormalBasis {
  std::vector<ModuleElement> elements;
  std::vector<AlgebraElement> projections;  // projections[i] = ⟨w_i, w_i⟩
  std::vector<std::size_t> blocks;          // algebra block each element lives in

  std::size_t size() const { return elements.size(); }
  /// The elements living in algebra block j, in order.
  OrthonormalBasis restrict_to_block(std::size_t j) const;
};

/// Orthonormal basis with every ⟨g_i, g_i⟩ equal to ξ_pivot ⊗ ξ_pivot in its
/// block. With canonical frames, g_i = E_{i,pivot}; for Rectangular(m, n) and
/// pivot 0 this is the matrix units E_{i1}, i = 1..m.
OrthonormalBasis build_orthonormal_basis(const ModuleDescriptor& w, std::size_t pivot = 0);
OrthonormalBasis build_orthonormal_basis(const ModuleDescriptor& w, std::size_t pivot,
                                         const std::vector<Frame>& frames);

/// Rebases a uniform basis (all projections ξ_pivot ⊗ ξ_pivot) to
/// w_i = g_i (ξ_pivot ⊗ ξ_i), so that ⟨w_i, w_i⟩ = ξ_i ⊗ ξ_i. Requires
/// r_j <= n_j in every block. The i-th element of a block pairs with ξ_i.
OrthonormalBasis rebase_basis(const OrthonormalBasis& basis, std::size_t pivot);
OrthonormalBasis rebase_basis(const OrthonormalBasis& basis, std::size_t pivot,
                                const std::vector<Frame>& frames);

struct BasisExpansion {
  std::vector<AlgebraElement> coefficients;  // ⟨w_i, x⟩
  ModuleElement reconstruction;              // Σ w_i ⟨w_i, x⟩
};

BasisExpansion basis_expand(const ModuleElement& x, const OrthonormalBasis& basis);

/// Σ_i w_i a. On a rebased basis whose projections sum to the identity in
/// each block, ⟨s, s⟩ = a* a.
ModuleElement module_series(const OrthonormalBasis& basis, const AlgebraElement& a);

/// Nonzero x, y with ⟨x, y⟩ = 0 by construction. Blocks with r_j >= 2 get a
/// low-rank x_j and a y_j projected onto the orthogonal complement of the
/// column space of x_j; blocks with r_j = 1 are split into disjoint supports
/// (first half to x, second half to y). Throws for modules without
/// nontrivial orthogonal pairs.
std::pair<ModuleElement, ModuleElement> random_orthogonal_pair(const ModuleDescriptor& w, Rng& rng);

}  // namespace oam
