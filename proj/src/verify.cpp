#include "oam/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "oam/polarization.hpp"
#include "oam/random.hpp"

namespace oam {

namespace {

// Ratio below which a certificate pair is too small to estimate ‖S‖ from.
constexpr double kCertificateFloor = 1e-9;

double rel(const GVector& defect, std::initializer_list<const GVector*> terms) {
  double scale = 1.0;
  for (const auto* t : terms) scale += t->norm();
  return defect.norm() / scale;
}

void configure(PropertyResult& r, const SuiteOptions& o) {
  auto tol = o.tolerances.find(r.name);
  r.tolerance = tol == o.tolerances.end() ? o.tolerance : tol->second;
  auto ex = o.expectations.find(r.name);
  if (ex != o.expectations.end()) r.expectation = ex->second;
}

class Tracker {
 public:
  Tracker(const SuiteOptions& o, std::string name) {
    r_.name = std::move(name);
    configure(r_, o);
  }
  void record(double v) {
    ++r_.samples;
    r_.max_violation = std::max(r_.max_violation, v);
  }
  PropertyResult done(bool vacuous = false) {
    r_.vacuous = vacuous;
    return r_;
  }

 private:
  PropertyResult r_;
};

std::vector<PropertyResult> phi_local_properties(const OAMap& f, const PairForm& S, const SuiteOptions& o,
                                                 Rng& rng) {
  const ModuleDescriptor& w = f.domain();
  Tracker bound(o, "phi_local_bound");
  Tracker indep(o, "phi_local_k_independence");
  if (w.min_block_orthogonal_dimension() < 2) return {bound.done(true), indep.done(true)};

  const OrthonormalBasis full = build_orthonormal_basis(w, 0);
  struct Sample {
    GVector phi0;
    double a_norm;
    double e_norm;
  };
  std::vector<Sample> samples;
  double s_hat = 0.0;
  auto certify = [&](const ModuleElement& u, const ModuleElement& v, const GVector& s_uv) {
    const double denom = module_norm(u) * module_norm(v);
    if (denom > kCertificateFloor) s_hat = std::max(s_hat, s_uv.norm() / denom);
  };
  for (std::size_t s = 0; s < o.samples; ++s) {
    const OrthonormalBasis basis = full.restrict_to_block(s % w.block_count());
    const AlgebraElement a = random_algebra_element(w.algebra(), rng);
    const GVector p0 = phi_local(S, basis, 0, a);
    const GVector p1 = phi_local(S, basis, 1, a);
    certify(module_action(basis.elements[0], a), basis.elements[0], p0);
    certify(module_action(basis.elements[1], a), basis.elements[1], p1);
    const auto x = ModuleElement::random(w, rng);
    const auto y = ModuleElement::random(w, rng);
    certify(x, y, S(x, y));
    indep.record(rel(p0 - p1, {&p0, &p1}));
    samples.push_back({p0, operator_norm(a), operator_norm(basis.projections[0])});
  }
  for (const auto& s : samples) {
    const double allowed = s_hat * s.e_norm * s.a_norm;
    bound.record(std::max(0.0, s.phi0.norm() - allowed) / (1.0 + allowed));
  }
  return {bound.done(), indep.done()};
}

}  // namespace

bool SuiteReport::verdict() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.ok(); });
}

const PropertyResult& SuiteReport::at(const std::string& name) const {
  for (const auto& p : properties)
    if (p.name == name) return p;
  throw std::out_of_range("SuiteReport: no property " + name);
}

PropertyResult check_orthogonal_additivity(const OAMap& f, std::size_t trials, std::uint64_t seed,
                                           double tolerance) {
  SuiteOptions o;
  o.tolerance = tolerance;
  Tracker t(o, "orthogonal_additivity");
  if (!f.domain().has_orthogonal_pairs()) return t.done(true);
  Rng rng(seed);
  for (std::size_t s = 0; s < trials; ++s) {
    const auto [x, y] = random_orthogonal_pair(f.domain(), rng);
    const GVector fxy = f(x + y);
    t.record((fxy - f(x) - f(y)).norm() / (1.0 + fxy.norm()));
  }
  return t.done();
}

SuiteReport property_suite(const OAMap& f, const SuiteOptions& o) {
  const ModuleDescriptor& w = f.domain();
  Rng rng(o.seed);
  const OAMap F = even_part(f);
  const OAMap T = odd_part(f);
  const PairForm B = polarize_B(f);
  const PairForm S = sesquilinear_S(f);

  SuiteReport report;
  PropertyResult oa = check_orthogonal_additivity(f, o.samples, rng.next_u64(), o.tolerance);
  configure(oa, o);
  report.properties.push_back(oa);

  Tracker quad(o, "even_part_quadratic");
  Tracker add(o, "odd_part_additive");
  Tracker bsym(o, "B_symmetric");
  Tracker bbi(o, "B_biadditive");
  Tracker binv(o, "B_i_invariant");
  Tracker sses(o, "S_sesquilinear");
  Tracker spol(o, "S_polarization");
  Tracker sorth(o, "S_orthogonality_preserving");
  const bool pairs = w.has_orthogonal_pairs();

  for (std::size_t s = 0; s < o.samples; ++s) {
    const auto x = ModuleElement::random(w, rng);
    const auto y = ModuleElement::random(w, rng);
    const auto z = ModuleElement::random(w, rng);

    const GVector Fs = F(x + y), Fd = F(x - y), Fx = F(x), Fy = F(y);
    quad.record(rel(Fs + Fd - 2.0 * Fx - 2.0 * Fy, {&Fs, &Fd, &Fx, &Fy}));

    const GVector Ts = T(x + y), Tx = T(x), Ty = T(y);
    add.record(rel(Ts - Tx - Ty, {&Ts, &Tx, &Ty}));

    const GVector Bxy = B(x, y), Byx = B(y, x);
    bsym.record(rel(Bxy - Byx, {&Bxy, &Byx}));
    const GVector Bxzy = B(x + z, y), Bzy = B(z, y);
    bbi.record(rel(Bxzy - Bxy - Bzy, {&Bxzy, &Bxy, &Bzy}));
    const GVector Bii = B(kI * x, kI * y);
    binv.record(rel(Bii - Bxy, {&Bii, &Bxy}));

    const GVector Sxy = S(x, y), Syx = S(y, x);
    const GVector Six = S(kI * x, y), Siy = S(x, kI * y);
    const GVector Sxzy = S(x + z, y), Szy = S(z, y);
    double sv = rel(Six - kI * Sxy, {&Six, &Sxy});
    sv = std::max(sv, rel(Siy + kI * Sxy, {&Siy, &Sxy}));
    sv = std::max(sv, rel(Sxzy - Sxy - Szy, {&Sxzy, &Sxy, &Szy}));
    sses.record(sv);
    spol.record(rel(2.0 * Bxy - Sxy - Syx, {&Bxy, &Sxy, &Syx}));

    if (pairs) {
      const auto [u, v] = random_orthogonal_pair(w, rng);
      const GVector Suv = S(u, v), fu = f(u), fv = f(v);
      sorth.record(rel(Suv, {&fu, &fv}));
    }
  }
  for (auto* t : {&quad, &add, &bsym, &bbi, &binv, &sses, &spol}) report.properties.push_back(t->done());
  report.properties.push_back(sorth.done(!pairs));
  for (auto& p : phi_local_properties(f, S, o, rng)) report.properties.push_back(std::move(p));
  return report;
}

double additivity_gap(const OAMap& f, const ModuleElement& x, const ModuleElement& y) {
  return (f(x + y) - f(x) - f(y)).norm();
}

double sesquilinearity_defect(const OAMap& f, std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  const PairForm S = sesquilinear_S(f);
  double worst = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto x = ModuleElement::random(f.domain(), rng);
    const auto y = ModuleElement::random(f.domain(), rng);
    const auto z = ModuleElement::random(f.domain(), rng);
    const GVector Sxy = S(x, y);
    worst = std::max(worst, (S(kI * x, y) - kI * Sxy).norm());
    worst = std::max(worst, (S(x, kI * y) + kI * Sxy).norm());
    worst = std::max(worst, (S(x + z, y) - Sxy - S(z, y)).norm());
  }
  return worst;
}

std::vector<HarmonicRow> harmonic_demo(std::size_t N, std::uint64_t seed) {
  if (N == 0) throw std::invalid_argument("harmonic_demo: N must be >= 1");
  const MapSpec spec = MapSpec::sum_of_squares(N);
  const OAMap f = instantiate_map(spec);
  DecomposeOptions opts;
  opts.samples = 10;
  opts.seed = seed;
  const Decomposition d = decompose(f, opts);

  std::vector<HarmonicRow> rows;
  CVector diag(N);
  double h = 0.0;
  for (std::size_t n = 1; n <= N; ++n) {
    diag[n - 1] = 1.0 / static_cast<double>(n);
    h += 1.0 / static_cast<double>(n);
    const AlgebraElement tn = AlgebraElement::single_block(spec.module().algebra(), 0, CMatrix::diagonal(diag));
    rows.push_back({n, d.phi.apply(tn)[0].real(), h, operator_norm(tn)});
  }
  return rows;
}

}  // namespace oam
