#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "oam/basis.hpp"
#include "oam/oa_map.hpp"

namespace oam {

/// Linear map Φ : A -> G stored by its values on the matrix units E_pq of
/// each block.
class PhiTable {
 public:
  PhiTable(AlgebraDescriptor algebra, std::size_t codomain_dim);

  /// Φ(a) = Σ_j trace(a_j), codomain C.
  static PhiTable trace(const AlgebraDescriptor& algebra);

  const AlgebraDescriptor& algebra() const { return algebra_; }
  std::size_t codomain_dim() const { return codomain_dim_; }

  const GVector& at(std::size_t block, std::size_t p, std::size_t q) const;
  GVector& at(std::size_t block, std::size_t p, std::size_t q);

  GVector apply(const AlgebraElement& a) const;

  /// max over matrix units and components of |Φ(E_pq) − Ψ(E_pq)|.
  double max_entry_distance(const PhiTable& other) const;

 private:
  AlgebraDescriptor algebra_;
  std::size_t codomain_dim_;
  std::vector<std::vector<GVector>> values_;  // [block][p * n + q]
};

/// Real-linear (continuous additive) map W -> G, stored by its values on the
/// real basis {E_rc, i E_rc} of every block; coordinates follow
/// ModuleElement::coordinates().
class RealLinearMap {
 public:
  RealLinearMap() = default;
  RealLinearMap(ModuleDescriptor domain, std::size_t codomain_dim);

  GVector operator()(const ModuleElement& x) const;

  const ModuleDescriptor& domain() const { return *domain_; }
  std::size_t codomain_dim() const { return codomain_dim_; }
  /// Images of the coordinate direction k and of i times it.
  GVector& real_direction(std::size_t k) { return real_.at(k); }
  GVector& imag_direction(std::size_t k) { return imag_.at(k); }
  const GVector& real_direction(std::size_t k) const { return real_.at(k); }
  const GVector& imag_direction(std::size_t k) const { return imag_.at(k); }

 private:
  std::optional<ModuleDescriptor> domain_;
  std::size_t codomain_dim_ = 0;
  std::vector<GVector> real_;
  std::vector<GVector> imag_;
};

struct ResidualStats {
  std::size_t count = 0;
  std::optional<double> max;
  std::optional<double> mean;
};

inline constexpr double kResidualFlagThreshold = 1e-6;

struct Decomposition {
  RealLinearMap T;
  PhiTable phi;
  /// ‖f(x) − T(x) − Φ(⟨x,x⟩)‖ / (1 + ‖f(x)‖) over random samples.
  ResidualStats residual;
  /// ‖T(x) − ½(f(x) − f(−x))‖ / (1 + ‖f(x)‖) over the same samples.
  ResidualStats odd_gap;
  std::size_t eval_budget_used = 0;
  std::size_t eval_budget_limit = 0;
  /// Residual above kResidualFlagThreshold: f is not representable, most
  /// likely not orthogonally additive.
  bool residual_flagged = false;

  GVector represent(const ModuleElement& x) const { return T(x) + phi.apply(inner_product(x, x)); }
};

struct DecomposeOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  /// Use seeded random frames instead of the standard bases.
  bool random_frames = false;
};

/// Φ_{i0}(a) = S(w_k a, w_k) for a basis whose projections all equal e_{i0}.
GVector phi_local(const PairForm& S, const OrthonormalBasis& basis, std::size_t k,
                  const AlgebraElement& a);

/// Φ(a) = Σ_i Φ_i(e_i a) with e_i = ξ_i ⊗ ξ_i running over the frame of each
/// block. Costs n_j² evaluations of S per block.
PhiTable phi_assemble(const PairForm& S, const ModuleDescriptor& w, std::size_t codomain_dim,
                      const std::vector<Frame>& frames);
PhiTable phi_assemble(const PairForm& S, const ModuleDescriptor& w, std::size_t codomain_dim);

/// f(x) = T(x) + Φ(⟨x, x⟩) with Φ from the sesquilinear form of f and T
/// the real-linear extension of the odd part of f. Requires every block to
/// have orthogonal dimension >= 2.
Decomposition decompose(const OAMap& f, const DecomposeOptions& options = {});

/// Restricts f to each summand of a DirectSum module, decomposes each
/// restriction and assembles Φ = Σ_j Φ_j and T = Σ_j T_j.
Decomposition blockwise_decompose(const OAMap& f, const DecomposeOptions& options = {});

ResidualStats residual(const OAMap& f, const Decomposition& d, const std::vector<ModuleElement>& xs);

std::size_t decomposition_budget(const ModuleDescriptor& w, std::size_t samples);

}  // namespace oam
