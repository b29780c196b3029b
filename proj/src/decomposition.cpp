#include "oam/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "oam/polarization.hpp"
#include "oam/random.hpp"

namespace oam {

namespace {

constexpr double kUniformProjectionTol = 1e-12;

void require_decomposable(const ModuleDescriptor& w) {
  if (w.min_block_orthogonal_dimension() < 2) {
    throw std::invalid_argument("decompose: " + w.describe() +
                                " has a block with dim_A < 2; the representation needs dim_A >= 2");
  }
}

ModuleElement embed_child(const ModuleDescriptor& w, std::size_t j, const ModuleElement& child) {
  return ModuleElement::from_block(w, j, child.part(0));
}

struct Sampled {
  ResidualStats residual;
  ResidualStats odd_gap;
};

void push(ResidualStats& s, double v, double& sum) {
  ++s.count;
  s.max = std::max(s.max.value_or(0.0), v);
  sum += v;
  s.mean = sum / static_cast<double>(s.count);
}

Sampled sample_residuals(const OAMap& f, const Decomposition& d, std::size_t samples, Rng& rng) {
  Sampled out;
  double res_sum = 0.0;
  double gap_sum = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto x = ModuleElement::random(f.domain(), rng);
    const GVector fx = f(x);
    const GVector tx = d.T(x);
    const double scale = 1.0 + fx.norm();
    push(out.residual, (fx - tx - d.phi.apply(inner_product(x, x))).norm() / scale, res_sum);
    const GVector odd = 0.5 * (fx - f(-x));
    push(out.odd_gap, (tx - odd).norm() / scale, gap_sum);
  }
  return out;
}

RealLinearMap extract_additive_part(const OAMap& f) {
  const ModuleDescriptor& w = f.domain();
  const OAMap odd = odd_part(f);
  RealLinearMap t(w, f.codomain_dim());
  std::size_t k = 0;
  for (std::size_t j = 0; j < w.block_count(); ++j) {
    const auto [rows, cols] = w.layout()[j];
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c, ++k) {
        const auto e = ModuleElement::from_block(w, j, CMatrix::unit(rows, cols, r, c));
        t.real_direction(k) = odd(e);
        t.imag_direction(k) = odd(kI * e);
      }
    }
  }
  return t;
}

}  // namespace

PhiTable::PhiTable(AlgebraDescriptor algebra, std::size_t codomain_dim)
    : algebra_(std::move(algebra)), codomain_dim_(codomain_dim) {
  for (auto n : algebra_.blocks()) values_.emplace_back(n * n, GVector(codomain_dim_));
}

PhiTable PhiTable::trace(const AlgebraDescriptor& algebra) {
  PhiTable t(algebra, 1);
  for (std::size_t j = 0; j < algebra.block_count(); ++j)
    for (std::size_t p = 0; p < algebra.block_dim(j); ++p) t.at(j, p, p)[0] = 1.0;
  return t;
}

const GVector& PhiTable::at(std::size_t block, std::size_t p, std::size_t q) const {
  const auto n = algebra_.block_dim(block);
  if (p >= n || q >= n) throw std::out_of_range("PhiTable::at: index out of range");
  return values_[block][p * n + q];
}

GVector& PhiTable::at(std::size_t block, std::size_t p, std::size_t q) {
  const auto n = algebra_.block_dim(block);
  if (p >= n || q >= n) throw std::out_of_range("PhiTable::at: index out of range");
  return values_[block][p * n + q];
}

GVector PhiTable::apply(const AlgebraElement& a) const {
  if (a.descriptor().blocks() != algebra_.blocks()) {
    throw std::invalid_argument("PhiTable::apply: algebra mismatch");
  }
  GVector out(codomain_dim_);
  for (std::size_t j = 0; j < algebra_.block_count(); ++j) {
    const auto n = algebra_.block_dim(j);
    const CMatrix& b = a.block(j);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        const Complex c = b(p, q);
        if (c == Complex{}) continue;
        const GVector& v = values_[j][p * n + q];
        for (std::size_t k = 0; k < codomain_dim_; ++k) out[k] += c * v[k];
      }
    }
  }
  return out;
}

double PhiTable::max_entry_distance(const PhiTable& other) const {
  if (other.algebra_.blocks() != algebra_.blocks() || other.codomain_dim_ != codomain_dim_) {
    throw std::invalid_argument("PhiTable::max_entry_distance: shape mismatch");
  }
  double m = 0.0;
  for (std::size_t j = 0; j < values_.size(); ++j)
    for (std::size_t u = 0; u < values_[j].size(); ++u)
      for (std::size_t k = 0; k < codomain_dim_; ++k)
        m = std::max(m, std::abs(values_[j][u][k] - other.values_[j][u][k]));
  return m;
}

RealLinearMap::RealLinearMap(ModuleDescriptor domain, std::size_t codomain_dim)
    : domain_(std::move(domain)),
      codomain_dim_(codomain_dim),
      real_(domain_->coordinate_count(), GVector(codomain_dim)),
      imag_(domain_->coordinate_count(), GVector(codomain_dim)) {}

GVector RealLinearMap::operator()(const ModuleElement& x) const {
  if (!domain_ || !(x.descriptor() == *domain_)) {
    throw std::invalid_argument("RealLinearMap: argument outside the domain");
  }
  const CVector c = x.coordinates();
  GVector out(codomain_dim_);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double re = c[k].real();
    const double im = c[k].imag();
    for (std::size_t i = 0; i < codomain_dim_; ++i) out[i] += re * real_[k][i] + im * imag_[k][i];
  }
  return out;
}

GVector phi_local(const PairForm& S, const OrthonormalBasis& basis, std::size_t k,
                  const AlgebraElement& a) {
  if (basis.size() < 2) {
    throw std::invalid_argument("phi_local: needs an orthonormal basis with at least two elements");
  }
  if (k >= basis.size()) throw std::out_of_range("phi_local: basis index out of range");
  for (const auto& e : basis.projections) {
    if (distance(e, basis.projections.front()) > kUniformProjectionTol) {
      throw std::invalid_argument("phi_local: basis projections are not uniform");
    }
  }
  const ModuleElement& w = basis.elements[k];
  return S(module_action(w, a), w);
}

PhiTable phi_assemble(const PairForm& S, const ModuleDescriptor& w, std::size_t codomain_dim,
                      const std::vector<Frame>& frames) {
  require_decomposable(w);
  if (frames.size() != w.block_count()) throw std::invalid_argument("phi_assemble: one frame per block");
  PhiTable table(w.algebra(), codomain_dim);
  for (std::size_t j = 0; j < w.block_count(); ++j) {
    const auto [rows, n] = w.layout()[j];
    const CMatrix& R = frames[j].rows;
    const CMatrix& Q = frames[j].cols;
    // m[i][q] = Φ_i(e_i E_iq-part) = S(u e_qᵀ, u ξ_i*), u the k-th row-frame vector.
    std::vector<std::vector<GVector>> m(n, std::vector<GVector>(n));
    for (std::size_t i = 0; i < n; ++i) {
      const CVector u = R.column_vector(i % rows);
      CMatrix w_block(rows, n);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < n; ++c) w_block(r, c) = u[r] * std::conj(Q(c, i));
      const auto wk = ModuleElement::from_block(w, j, std::move(w_block));
      for (std::size_t q = 0; q < n; ++q) {
        CMatrix x_block(rows, n);
        for (std::size_t r = 0; r < rows; ++r) x_block(r, q) = u[r];
        m[i][q] = S(ModuleElement::from_block(w, j, std::move(x_block)), wk);
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        GVector acc(codomain_dim);
        for (std::size_t i = 0; i < n; ++i) acc += std::conj(Q(p, i)) * m[i][q];
        table.at(j, p, q) = std::move(acc);
      }
    }
  }
  return table;
}

PhiTable phi_assemble(const PairForm& S, const ModuleDescriptor& w, std::size_t codomain_dim) {
  return phi_assemble(S, w, codomain_dim, canonical_frames(w));
}

std::size_t decomposition_budget(const ModuleDescriptor& w, std::size_t samples) {
  return 8 * w.algebra().unit_count() * w.orthogonal_dimension() + 8 * samples;
}

Decomposition decompose(const OAMap& f, const DecomposeOptions& options) {
  const ModuleDescriptor& w = f.domain();
  require_decomposable(w);
  const std::size_t start = f.eval_count();
  Rng rng(options.seed);
  const auto frames = options.random_frames ? random_frames(w, rng) : canonical_frames(w);

  Decomposition d{extract_additive_part(f), phi_assemble(sesquilinear_S(f), w, f.codomain_dim(), frames),
                  {}, {}, 0, decomposition_budget(w, options.samples), false};
  auto sampled = sample_residuals(f, d, options.samples, rng);
  d.residual = sampled.residual;
  d.odd_gap = sampled.odd_gap;
  d.residual_flagged = d.residual.max.value_or(0.0) > kResidualFlagThreshold;
  d.eval_budget_used = f.eval_count() - start;
  return d;
}

Decomposition blockwise_decompose(const OAMap& f, const DecomposeOptions& options) {
  const ModuleDescriptor& w = f.domain();
  if (w.kind() != ModuleKind::DirectSum) {
    throw std::invalid_argument("blockwise_decompose: module is not a direct sum");
  }
  require_decomposable(w);
  const std::size_t start = f.eval_count();
  Rng rng(options.seed);
  const GVector f0 = f(ModuleElement::zero(w));

  PhiTable phi(w.algebra(), f.codomain_dim());
  RealLinearMap t(w, f.codomain_dim());
  std::size_t offset = 0;
  for (std::size_t j = 0; j < w.block_count(); ++j) {
    const ModuleDescriptor& child = w.children()[j];
    const OAMap restricted(child, f.codomain_dim(), [f, w, j, f0](const ModuleElement& x) {
      return f(embed_child(w, j, x)) - f0;
    });
    DecomposeOptions child_options = options;
    child_options.seed = rng.next_u64();
    child_options.samples = 0;
    const Decomposition part = decompose(restricted, child_options);
    const std::size_t n = w.algebra().block_dim(j);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) phi.at(j, p, q) = part.phi.at(0, p, q);
    for (std::size_t k = 0; k < child.coordinate_count(); ++k) {
      t.real_direction(offset + k) = part.T.real_direction(k);
      t.imag_direction(offset + k) = part.T.imag_direction(k);
    }
    offset += child.coordinate_count();
  }

  Decomposition d{std::move(t), std::move(phi), {}, {}, 0, decomposition_budget(w, options.samples), false};
  auto sampled = sample_residuals(f, d, options.samples, rng);
  d.residual = sampled.residual;
  d.odd_gap = sampled.odd_gap;
  d.residual_flagged = d.residual.max.value_or(0.0) > kResidualFlagThreshold;
  d.eval_budget_used = f.eval_count() - start;
  return d;
}

ResidualStats residual(const OAMap& f, const Decomposition& d, const std::vector<ModuleElement>& xs) {
  ResidualStats s;
  double sum = 0.0;
  for (const auto& x : xs) {
    const GVector fx = f(x);
    push(s, (fx - d.represent(x)).norm() / (1.0 + fx.norm()), sum);
  }
  return s;
}

}  // namespace oam
