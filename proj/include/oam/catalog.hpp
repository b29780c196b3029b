#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "oam/decomposition.hpp"

namespace oam {

class Rng;

enum class MapKind { PureQuadratic, AdditivePlusQuadratic, RankOneCubic, SumOfSquares, DiagonalCube, Perturbed };
enum class PerturbationKind { Cubic, ModuleNorm };

std::string_view to_string(MapKind k);
std::string_view to_string(PerturbationKind k);

/// T0(x) = L c + C conj(c), with c = x.coordinates(); both d × coordinate_count.
/// C = 0 gives a C-linear map, C ≠ 0 a merely real-linear one.
struct AdditiveTable {
  CMatrix linear;
  CMatrix conjugate;
};

GVector apply_additive(const AdditiveTable& t, const ModuleElement& x);

class MapSpec {
 public:
  /// f(x) = Φ0(⟨x, x⟩).
  static MapSpec pure_quadratic(const ModuleDescriptor& w, PhiTable phi0);
  /// f(x) = T0(x) + Φ0(⟨x, x⟩).
  static MapSpec additive_plus_quadratic(const ModuleDescriptor& w, AdditiveTable t0, PhiTable phi0);
  /// f(ξ) = (ξ, η0) ξ⊗ξ on Vector(n), the n×n matrix flattened row-major.
  static MapSpec rank_one_cubic(const CVector& eta0, Flavor flavor = Flavor::CompactOperator);
  /// f(ξ1, ξ2) = (ξ1, ξ1) + (ξ2, ξ2) on Pair(n).
  static MapSpec sum_of_squares(std::size_t n, Flavor flavor = Flavor::CompactOperator);
  /// f(x) = x (x*)² on Diagonal(n): coordinatewise |x_k|² conj(x_k).
  static MapSpec diagonal_cube(std::size_t n, Flavor flavor = Flavor::CompactOperator);
  /// base + ε·p(x) in codomain slot 0, p = (first coordinate)³ or ‖x‖_W.
  static MapSpec perturbed(MapSpec base, double epsilon, PerturbationKind kind);

  MapKind kind() const { return kind_; }
  const ModuleDescriptor& module() const { return module_; }
  std::size_t codomain_dim() const { return codomain_dim_; }
  const std::optional<PhiTable>& phi0() const { return phi0_; }
  const std::optional<AdditiveTable>& t0() const { return t0_; }
  const CVector& eta0() const { return eta0_; }
  const MapSpec* base() const { return base_.get(); }
  double epsilon() const { return epsilon_; }
  PerturbationKind perturbation() const { return perturbation_; }

  /// Whether f has the form T + Φ(⟨x, x⟩) with known T and Φ.
  bool representable() const;

 private:
  MapSpec(MapKind kind, ModuleDescriptor module, std::size_t codomain_dim)
      : kind_(kind), module_(std::move(module)), codomain_dim_(codomain_dim) {}

  MapKind kind_;
  ModuleDescriptor module_;
  std::size_t codomain_dim_;
  std::optional<PhiTable> phi0_;
  std::optional<AdditiveTable> t0_;
  CVector eta0_;
  std::shared_ptr<const MapSpec> base_;
  double epsilon_ = 0.0;
  PerturbationKind perturbation_ = PerturbationKind::Cubic;
};

OAMap instantiate_map(const MapSpec& spec);

struct GroundTruth {
  std::function<GVector(const ModuleElement&)> T;
  PhiTable phi;
};

/// Known (T, Φ) for representable specs.
std::optional<GroundTruth> ground_truth(const MapSpec& spec);

PhiTable random_phi_table(const AlgebraDescriptor& a, std::size_t codomain_dim, Rng& rng);
AdditiveTable random_additive_table(const ModuleDescriptor& w, std::size_t codomain_dim, bool complex_linear,
                                    Rng& rng);
/// Random T0 + Φ0(⟨x, x⟩) (T0 real-linear unless `complex_linear`).
MapSpec random_representable(const ModuleDescriptor& w, std::size_t codomain_dim, Rng& rng,
                             bool complex_linear = false);

enum class Expectation { Holds, Fails, Unconstrained };

std::string_view to_string(Expectation e);

/// Property name -> expected outcome for the catalog maps. Properties not
/// listed are expected to hold.
std::map<std::string, Expectation> expected_outcomes(const MapSpec& spec);

/// Fixed pair exhibiting non-additivity of an odd counterexample:
/// x = y = diag(1, 0, ...) for DiagonalCube, x = e1, y = e2 for RankOneCubic.
std::optional<std::pair<ModuleElement, ModuleElement>> additivity_witness(const MapSpec& spec);

}  // namespace oam
