#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "oam/catalog.hpp"

namespace oam {

inline constexpr double kDefaultPropertyTol = 1e-8;

struct PropertyResult {
  std::string name;
  std::size_t samples = 0;
  double max_violation = 0.0;
  double tolerance = kDefaultPropertyTol;
  Expectation expectation = Expectation::Holds;
  /// No admissible inputs exist (e.g. no orthogonal pairs); holds trivially.
  bool vacuous = false;

  bool holds() const { return max_violation <= tolerance; }
  /// Outcome agrees with the expectation.
  bool ok() const {
    return expectation == Expectation::Unconstrained || holds() == (expectation == Expectation::Holds);
  }
};

struct SuiteReport {
  std::vector<PropertyResult> properties;

  bool verdict() const;
  const PropertyResult& at(const std::string& name) const;
};

struct SuiteOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  double tolerance = kDefaultPropertyTol;
  /// Per-property overrides of `tolerance`.
  std::map<std::string, double> tolerances;
  std::map<std::string, Expectation> expectations;
};

/// max over constructed orthogonal pairs of ‖f(x+y) − f(x) − f(y)‖ / (1 + ‖f(x+y)‖).
/// Vacuous when the domain has no nontrivial orthogonal pairs.
PropertyResult check_orthogonal_additivity(const OAMap& f, std::size_t trials, std::uint64_t seed,
                                           double tolerance = kDefaultPropertyTol);

/// Quadratic law of the even part, additivity of the odd part, symmetry,
/// biadditivity and i-invariance of B, sesquilinearity of S, 2B = S + S~,
/// orthogonality preservation of S, the local bound on Φ_{i0} and its
/// independence of the basis element, plus orthogonal additivity of f.
/// Violations are normalized by 1 + the norms of the terms involved.
SuiteReport property_suite(const OAMap& f, const SuiteOptions& options);

/// ‖f(x+y) − f(x) − f(y)‖, unnormalized.
double additivity_gap(const OAMap& f, const ModuleElement& x, const ModuleElement& y);

/// Largest ‖S(ix, y) − iS(x, y)‖, ‖S(x, iy) + iS(x, y)‖ or
/// ‖S(x+z, y) − S(x, y) − S(z, y)‖ over random triples, unnormalized.
double sesquilinearity_defect(const OAMap& f, std::size_t samples, std::uint64_t seed);

struct HarmonicRow {
  std::size_t n;
  double phi_value;      // Φ(T_n) from the decomposition pipeline
  double partial_sum;    // H_n = Σ_{k<=n} 1/k
  double operator_norm;  // ‖T_n‖
};

/// Decomposes f(ξ1, ξ2) = (ξ1, ξ1) + (ξ2, ξ2) on Pair(N) and evaluates the
/// recovered Φ on T_n = Σ_{k<=n} (1/k) E_kk for n = 1..N.
std::vector<HarmonicRow> harmonic_demo(std::size_t N, std::uint64_t seed = 0);

}  // namespace oam
