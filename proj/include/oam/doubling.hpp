#pragma once

#include <cstddef>
#include <functional>

#include "oam/module.hpp"

namespace oam {

class Rng;

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kDoublingTol = 1e-12;

/// Max violations of the three relations between the embedding ψ(x) = [x; 0]
/// and φ(x) = [0; Ux] on sampled pairs, each normalized by 1 + ‖x‖‖y‖.
struct DoublingReport {
  std::size_t samples = 0;
  double morphism = 0.0;                 // ⟨φx, φy⟩ − ⟨x, y⟩
  double orthogonality = 0.0;            // ⟨φx, ψy⟩
  double polarized_orthogonality = 0.0;  // ⟨(φ + λψ)x, (φ − λψ)y⟩, λ ∈ {1, i}
  double tolerance = kDoublingTol;

  bool holds() const {
    return morphism <= tolerance && orthogonality <= tolerance &&
           polarized_orthogonality <= tolerance;
  }
};

struct Doubling {
  ModuleDescriptor base;     // Rectangular(m, n)
  ModuleDescriptor doubled;  // Rectangular(2m, n)
  std::function<ModuleElement(const ModuleElement&)> embed;
  std::function<ModuleElement(const ModuleElement&)> phi;
  DoublingReport report;
};

/// φ(A) = UA placed in the bottom row block of Rectangular(2m, n), V in the
/// top block. Throws std::invalid_argument unless `v` is Rectangular and U is
/// an m×m unitary to kUnitaryTol.
Doubling doubling_construction(const ModuleDescriptor& v, const CMatrix& u, Rng& rng,
                               std::size_t samples = 50);

/// max |U*U − I|.
double unitary_defect(const CMatrix& u);

}  // namespace oam
