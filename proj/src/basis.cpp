#include "oam/basis.hpp"

#include <stdexcept>

#include "oam/random.hpp"

namespace oam {

namespace {

constexpr double kProjectionTol = 1e-12;

void require_frames(const ModuleDescriptor& w, const std::vector<Frame>& frames) {
  if (frames.size() != w.block_count()) throw std::invalid_argument("frames: one frame per block required");
  for (std::size_t j = 0; j < frames.size(); ++j) {
    const auto& s = w.layout()[j];
    if (frames[j].rows.rows() != s.rows || frames[j].rows.cols() != s.rows ||
        frames[j].cols.rows() != s.cols || frames[j].cols.cols() != s.cols) {
      throw std::invalid_argument("frames: frame shape does not match block");
    }
  }
}

// u ξ* as an r×n matrix.
CMatrix outer(const CVector& u, const CVector& xi) {
  CMatrix m(u.size(), xi.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t k = 0; k < xi.size(); ++k) m(i, k) = u[i] * std::conj(xi[k]);
  return m;
}

}  // namespace

std::vector<Frame> canonical_frames(const ModuleDescriptor& w) {
  std::vector<Frame> frames;
  for (const auto& s : w.layout()) frames.push_back({CMatrix::identity(s.rows), CMatrix::identity(s.cols)});
  return frames;
}

std::vector<Frame> random_frames(const ModuleDescriptor& w, Rng& rng) {
  std::vector<Frame> frames;
  for (const auto& s : w.layout()) frames.push_back({random_unitary(s.rows, rng), random_unitary(s.cols, rng)});
  return frames;
}

OrthonormalBasis OrthonormalBasis::restrict_to_block(std::size_t j) const {
  OrthonormalBasis out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (blocks[i] != j) continue;
    out.elements.push_back(elements[i]);
    out.projections.push_back(projections[i]);
    out.blocks.push_back(j);
  }
  return out;
}

OrthonormalBasis build_orthonormal_basis(const ModuleDescriptor& w, std::size_t pivot) {
  return build_orthonormal_basis(w, pivot, canonical_frames(w));
}

OrthonormalBasis build_orthonormal_basis(const ModuleDescriptor& w, std::size_t pivot,
                                         const std::vector<Frame>& frames) {
  require_frames(w, frames);
  OrthonormalBasis basis;
  for (std::size_t j = 0; j < w.block_count(); ++j) {
    const auto& s = w.layout()[j];
    if (pivot >= s.cols) throw std::invalid_argument("build_orthonormal_basis: pivot out of range");
    const CVector xi = frames[j].cols.column_vector(pivot);
    const AlgebraElement e = AlgebraElement::single_block(w.algebra(), j, rank_one(xi, xi));
    for (std::size_t i = 0; i < s.rows; ++i) {
      basis.elements.push_back(ModuleElement::from_block(w, j, outer(frames[j].rows.column_vector(i), xi)));
      basis.projections.push_back(e);
      basis.blocks.push_back(j);
    }
  }
  return basis;
}

OrthonormalBasis rebase_basis(const OrthonormalBasis& basis, std::size_t pivot) {
  if (basis.elements.empty()) throw std::invalid_argument("rebase_basis: empty basis");
  return rebase_basis(basis, pivot, canonical_frames(basis.elements.front().descriptor()));
}

OrthonormalBasis rebase_basis(const OrthonormalBasis& basis, std::size_t pivot,
                                const std::vector<Frame>& frames) {
  if (basis.elements.empty()) throw std::invalid_argument("rebase_basis: empty basis");
  const ModuleDescriptor& w = basis.elements.front().descriptor();
  require_frames(w, frames);
  const AlgebraDescriptor& alg = w.algebra();

  OrthonormalBasis out;
  std::vector<std::size_t> seen(w.block_count(), 0);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const std::size_t j = basis.blocks[k];
    const std::size_t n = alg.block_dim(j);
    if (pivot >= n) throw std::invalid_argument("rebase_basis: pivot out of range");
    const CVector xi_pivot = frames[j].cols.column_vector(pivot);
    const auto expected = AlgebraElement::single_block(alg, j, rank_one(xi_pivot, xi_pivot));
    if (distance(basis.projections[k], expected) > kProjectionTol) {
      throw std::invalid_argument("rebase_basis: basis projections are not ξ_pivot ⊗ ξ_pivot");
    }
    const std::size_t i = seen[j]++;
    if (i >= n) throw std::invalid_argument("rebase_basis: dim_A W exceeds dim H in a block");
    const CVector xi_i = frames[j].cols.column_vector(i);
    const auto shift = AlgebraElement::single_block(alg, j, rank_one(xi_pivot, xi_i));
    out.elements.push_back(module_action(basis.elements[k], shift));
    out.projections.push_back(AlgebraElement::single_block(alg, j, rank_one(xi_i, xi_i)));
    out.blocks.push_back(j);
  }
  return out;
}

BasisExpansion basis_expand(const ModuleElement& x, const OrthonormalBasis& basis) {
  BasisExpansion out{{}, ModuleElement::zero(x.descriptor())};
  for (const auto& w : basis.elements) {
    auto c = inner_product(w, x);
    out.reconstruction += module_action(w, c);
    out.coefficients.push_back(std::move(c));
  }
  return out;
}

ModuleElement module_series(const OrthonormalBasis& basis, const AlgebraElement& a) {
  if (basis.elements.empty()) throw std::invalid_argument("module_series: empty basis");
  auto s = ModuleElement::zero(basis.elements.front().descriptor());
  for (const auto& w : basis.elements) s += module_action(w, a);
  return s;
}

std::pair<ModuleElement, ModuleElement> random_orthogonal_pair(const ModuleDescriptor& w, Rng& rng) {
  if (!w.has_orthogonal_pairs()) {
    throw std::invalid_argument("random_orthogonal_pair: " + w.describe() +
                                " has no nontrivial orthogonal pairs");
  }
  const auto& layout = w.layout();
  std::vector<std::size_t> thin;
  for (std::size_t j = 0; j < layout.size(); ++j)
    if (layout[j].rows == 1) thin.push_back(j);

  auto x = ModuleElement::zero(w);
  auto y = ModuleElement::zero(w);
  std::vector<CMatrix> xs(x.parts());
  std::vector<CMatrix> ys(y.parts());

  for (std::size_t j = 0; j < layout.size(); ++j) {
    const auto [r, n] = layout[j];
    if (r < 2) continue;
    const std::size_t rank = 1 + rng.index(r - 1);
    CMatrix left = random_matrix(r, rank, rng);
    orthonormalize_columns(left);
    xs[j] = left * random_matrix(rank, n, rng);
    CMatrix g = random_matrix(r, n, rng);
    // y_j = (I - L L*) g
    ys[j] = g - left * (left.adjoint() * g);
  }
  if (thin.size() == 1) {
    // A lone 1-row block cannot be split; it stays with x only.
    xs[thin[0]] = random_matrix(1, layout[thin[0]].cols, rng);
  } else {
    const std::size_t half = (thin.size() + 1) / 2;
    for (std::size_t k = 0; k < thin.size(); ++k) {
      auto& target = k < half ? xs : ys;
      target[thin[k]] = random_matrix(1, layout[thin[k]].cols, rng);
    }
  }
  return {ModuleElement(w, std::move(xs)), ModuleElement(w, std::move(ys))};
}

}  // namespace oam
