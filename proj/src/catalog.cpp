#include "oam/catalog.hpp"

#include <cmath>
#include <stdexcept>

#include "oam/random.hpp"

namespace oam {

namespace {

void require_phi_shape(const ModuleDescriptor& w, const PhiTable& phi) {
  if (!(phi.algebra() == w.algebra())) throw std::invalid_argument("MapSpec: Φ0 algebra does not match module");
}

void require_additive_shape(const ModuleDescriptor& w, std::size_t d, const AdditiveTable& t) {
  const std::size_t c = w.coordinate_count();
  if (t.linear.rows() != d || t.linear.cols() != c || t.conjugate.rows() != d || t.conjugate.cols() != c) {
    throw std::invalid_argument("MapSpec: T0 must be codomain_dim x coordinate_count");
  }
}

GVector zero_map(std::size_t d) { return GVector(d); }

}  // namespace

std::string_view to_string(MapKind k) {
  switch (k) {
    case MapKind::PureQuadratic: return "pure_quadratic";
    case MapKind::AdditivePlusQuadratic: return "additive_plus_quadratic";
    case MapKind::RankOneCubic: return "rank_one_cubic";
    case MapKind::SumOfSquares: return "sum_of_squares";
    case MapKind::DiagonalCube: return "diagonal_cube";
    case MapKind::Perturbed: return "perturbed";
  }
  return "?";
}

std::string_view to_string(PerturbationKind k) {
  return k == PerturbationKind::Cubic ? "cubic" : "module_norm";
}

std::string_view to_string(Expectation e) {
  switch (e) {
    case Expectation::Holds: return "holds";
    case Expectation::Fails: return "fails";
    case Expectation::Unconstrained: return "unconstrained";
  }
  return "?";
}

GVector apply_additive(const AdditiveTable& t, const ModuleElement& x) {
  const CVector c = x.coordinates();
  CVector cc(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) cc[k] = std::conj(c[k]);
  CVector out = t.linear * c;
  const CVector conj_part = t.conjugate * cc;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += conj_part[k];
  return GVector(std::move(out));
}

MapSpec MapSpec::pure_quadratic(const ModuleDescriptor& w, PhiTable phi0) {
  require_phi_shape(w, phi0);
  MapSpec s(MapKind::PureQuadratic, w, phi0.codomain_dim());
  s.phi0_ = std::move(phi0);
  return s;
}

MapSpec MapSpec::additive_plus_quadratic(const ModuleDescriptor& w, AdditiveTable t0, PhiTable phi0) {
  require_phi_shape(w, phi0);
  require_additive_shape(w, phi0.codomain_dim(), t0);
  MapSpec s(MapKind::AdditivePlusQuadratic, w, phi0.codomain_dim());
  s.phi0_ = std::move(phi0);
  s.t0_ = std::move(t0);
  return s;
}

MapSpec MapSpec::rank_one_cubic(const CVector& eta0, Flavor flavor) {
  if (eta0.empty()) throw std::invalid_argument("rank_one_cubic: η0 must be nonempty");
  const std::size_t n = eta0.size();
  MapSpec s(MapKind::RankOneCubic, ModuleDescriptor::vector(n, flavor), n * n);
  s.eta0_ = eta0;
  return s;
}

MapSpec MapSpec::sum_of_squares(std::size_t n, Flavor flavor) {
  return MapSpec(MapKind::SumOfSquares, ModuleDescriptor::pair(n, flavor), 1);
}

MapSpec MapSpec::diagonal_cube(std::size_t n, Flavor flavor) {
  return MapSpec(MapKind::DiagonalCube, ModuleDescriptor::diagonal(n, flavor), n);
}

MapSpec MapSpec::perturbed(MapSpec base, double epsilon, PerturbationKind kind) {
  if (!std::isfinite(epsilon)) throw std::invalid_argument("perturbed: ε must be finite");
  MapSpec s(MapKind::Perturbed, base.module(), base.codomain_dim());
  s.base_ = std::make_shared<const MapSpec>(std::move(base));
  s.epsilon_ = epsilon;
  s.perturbation_ = kind;
  return s;
}

bool MapSpec::representable() const {
  return kind_ == MapKind::PureQuadratic || kind_ == MapKind::AdditivePlusQuadratic ||
         kind_ == MapKind::SumOfSquares;
}

OAMap instantiate_map(const MapSpec& spec) {
  const ModuleDescriptor& w = spec.module();
  const std::size_t d = spec.codomain_dim();
  switch (spec.kind()) {
    case MapKind::PureQuadratic: {
      const PhiTable phi = *spec.phi0();
      return OAMap(w, d, [phi](const ModuleElement& x) { return phi.apply(inner_product(x, x)); });
    }
    case MapKind::AdditivePlusQuadratic: {
      const PhiTable phi = *spec.phi0();
      const AdditiveTable t = *spec.t0();
      return OAMap(w, d, [phi, t](const ModuleElement& x) {
        return apply_additive(t, x) + phi.apply(inner_product(x, x));
      });
    }
    case MapKind::RankOneCubic: {
      const CVector eta = spec.eta0();
      return OAMap(w, d, [eta](const ModuleElement& x) {
        const CVector xi = x.vector_payload();
        const Complex s = dot(xi, eta);
        const CMatrix r = rank_one(xi, xi);
        CVector out(r.entries().begin(), r.entries().end());
        for (auto& z : out) z *= s;
        return GVector(std::move(out));
      });
    }
    case MapKind::SumOfSquares:
      return OAMap(w, d, [](const ModuleElement& x) {
        const auto [xi1, xi2] = x.pair_payload();
        const double v = std::pow(norm(xi1), 2) + std::pow(norm(xi2), 2);
        return GVector(CVector{Complex{v, 0.0}});
      });
    case MapKind::DiagonalCube:
      return OAMap(w, d, [](const ModuleElement& x) {
        CVector v = x.diagonal_payload();
        for (auto& z : v) z = std::norm(z) * std::conj(z);
        return GVector(std::move(v));
      });
    case MapKind::Perturbed: {
      const OAMap base = instantiate_map(*spec.base());
      const double eps = spec.epsilon();
      if (spec.perturbation() == PerturbationKind::Cubic) {
        return OAMap(w, d, [base, eps](const ModuleElement& x) {
          GVector out = base(x);
          const Complex c = x.coordinates().front();
          out[0] += eps * c * c * c;
          return out;
        });
      }
      return OAMap(w, d, [base, eps](const ModuleElement& x) {
        GVector out = base(x);
        out[0] += eps * module_norm(x);
        return out;
      });
    }
  }
  throw std::logic_error("instantiate_map: unknown kind");
}

std::optional<GroundTruth> ground_truth(const MapSpec& spec) {
  const std::size_t d = spec.codomain_dim();
  switch (spec.kind()) {
    case MapKind::PureQuadratic:
      return GroundTruth{[d](const ModuleElement&) { return zero_map(d); }, *spec.phi0()};
    case MapKind::AdditivePlusQuadratic: {
      const AdditiveTable t = *spec.t0();
      return GroundTruth{[t](const ModuleElement& x) { return apply_additive(t, x); }, *spec.phi0()};
    }
    case MapKind::SumOfSquares:
      return GroundTruth{[](const ModuleElement&) { return zero_map(1); },
                         PhiTable::trace(spec.module().algebra())};
    default:
      return std::nullopt;
  }
}

PhiTable random_phi_table(const AlgebraDescriptor& a, std::size_t codomain_dim, Rng& rng) {
  PhiTable t(a, codomain_dim);
  for (std::size_t j = 0; j < a.block_count(); ++j)
    for (std::size_t p = 0; p < a.block_dim(j); ++p)
      for (std::size_t q = 0; q < a.block_dim(j); ++q)
        t.at(j, p, q) = GVector(random_vector(codomain_dim, rng));
  return t;
}

AdditiveTable random_additive_table(const ModuleDescriptor& w, std::size_t codomain_dim, bool complex_linear,
                                    Rng& rng) {
  const std::size_t c = w.coordinate_count();
  AdditiveTable t{random_matrix(codomain_dim, c, rng), CMatrix(codomain_dim, c)};
  if (!complex_linear) t.conjugate = random_matrix(codomain_dim, c, rng);
  return t;
}

MapSpec random_representable(const ModuleDescriptor& w, std::size_t codomain_dim, Rng& rng,
                             bool complex_linear) {
  AdditiveTable t0 = random_additive_table(w, codomain_dim, complex_linear, rng);
  PhiTable phi0 = random_phi_table(w.algebra(), codomain_dim, rng);
  return MapSpec::additive_plus_quadratic(w, std::move(t0), std::move(phi0));
}

std::map<std::string, Expectation> expected_outcomes(const MapSpec& spec) {
  switch (spec.kind()) {
    case MapKind::RankOneCubic:
    case MapKind::DiagonalCube:
      return {{"odd_part_additive", Expectation::Fails}};
    case MapKind::Perturbed: {
      std::map<std::string, Expectation> out;
      for (const char* name : {"even_part_quadratic", "odd_part_additive", "B_symmetric", "B_biadditive",
                               "B_i_invariant", "S_sesquilinear", "S_polarization", "S_orthogonality_preserving",
                               "phi_local_bound", "phi_local_k_independence", "orthogonal_additivity"}) {
        out[name] = Expectation::Unconstrained;
      }
      // Generic orthogonal pairs in a block with >= 2 rows share the first coordinate.
      if (spec.epsilon() != 0.0 && spec.module().layout().front().rows >= 2) {
        out["orthogonal_additivity"] = Expectation::Fails;
      }
      return out;
    }
    default:
      return {};
  }
}

std::optional<std::pair<ModuleElement, ModuleElement>> additivity_witness(const MapSpec& spec) {
  const ModuleDescriptor& w = spec.module();
  if (spec.kind() == MapKind::DiagonalCube) {
    CVector e(w.dim1());
    e[0] = 1.0;
    const auto x = ModuleElement::from_diagonal(w, e);
    return std::make_pair(x, x);
  }
  if (spec.kind() == MapKind::RankOneCubic) {
    if (w.dim1() < 2) return std::nullopt;
    CVector e1(w.dim1());
    CVector e2(w.dim1());
    e1[0] = 1.0;
    e2[1] = 1.0;
    return std::make_pair(ModuleElement::from_vector(w, e1), ModuleElement::from_vector(w, e2));
  }
  return std::nullopt;
}

}  // namespace oam
