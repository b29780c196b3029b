#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "oam/basis.hpp"
#include "oam/catalog.hpp"
#include "oam/doubling.hpp"
#include "oam/random.hpp"
#include "oam/verify.hpp"

using namespace oam;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const char* title, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::printf("criterion %d [%s] %s: %s\n", id, pass ? "PASS" : "FAIL", title, detail.c_str());
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

struct RoundTrip {
  double residual = 0.0;
  double phi = 0.0;
};

void absorb(RoundTrip& acc, const Decomposition& d, const PhiTable& phi0) {
  acc.residual = std::max(acc.residual, d.residual.max.value_or(0.0));
  acc.phi = std::max(acc.phi, d.phi.max_entry_distance(phi0));
}

void round_trip() {
  const auto t0 = Clock::now();
  Rng rng(1001);
  RoundTrip acc;
  for (int k = 0; k < 20; ++k) {
    const std::size_t m = 2 + rng.index(3);
    const std::size_t n = 2 + rng.index(3);
    const auto w = ModuleDescriptor::rectangular(m, n, k % 2 ? Flavor::HilbertSchmidt : Flavor::CompactOperator);
    const MapSpec spec = random_representable(w, 1 + rng.index(3), rng);
    DecomposeOptions o{100, rng.next_u64(), false};
    absorb(acc, decompose(instantiate_map(spec), o), *spec.phi0());
  }
  const double t = seconds_since(t0);
  report(1, "round-trip representation", acc.residual < 1e-9 && acc.phi < 1e-9 && t < 5.0,
         "20 maps, max residual " + fmt("%.3e", acc.residual) + ", max |Phi - Phi0| " + fmt("%.3e", acc.phi) +
             ", " + fmt("%.3f", t) + " s");
}

void blockwise() {
  const auto t0 = Clock::now();
  Rng rng(1002);
  RoundTrip acc;
  for (Flavor f : {Flavor::CompactOperator, Flavor::HilbertSchmidt}) {
    const auto w = ModuleDescriptor::direct_sum(
        {ModuleDescriptor::rectangular(2, 3, f), ModuleDescriptor::pair(3, f), ModuleDescriptor::algebra_as_module(2, f)});
    for (int k = 0; k < 3; ++k) {
      const MapSpec spec = random_representable(w, 2, rng);
      DecomposeOptions o{100, rng.next_u64(), false};
      absorb(acc, blockwise_decompose(instantiate_map(spec), o), *spec.phi0());
    }
  }
  const double t = seconds_since(t0);
  report(2, "blockwise assembly on 3-block direct sums (each flavor)", acc.residual < 1e-9 && acc.phi < 1e-9 && t < 5.0,
         "max residual " + fmt("%.3e", acc.residual) + ", max |Phi - Phi0| " + fmt("%.3e", acc.phi) + ", " +
             fmt("%.3f", t) + " s");
}

void polarization_suite() {
  Rng rng(1003);
  const std::vector<std::string> required{"even_part_quadratic", "B_symmetric",    "B_biadditive",
                                          "B_i_invariant",       "S_sesquilinear", "S_polarization",
                                          "S_orthogonality_preserving"};
  double worst = 0.0;
  std::string worst_name = required.front();
  bool pass = true;
  for (int k = 0; k < 10; ++k) {
    const std::size_t m = 2 + rng.index(3);
    const std::size_t n = 2 + rng.index(3);
    const auto w = k % 3 == 2 ? ModuleDescriptor::pair(n) : ModuleDescriptor::rectangular(m, n);
    SuiteOptions o;
    o.samples = 200;
    o.seed = rng.next_u64();
    o.tolerance = 1e-8;
    const SuiteReport r = property_suite(instantiate_map(random_representable(w, 2, rng)), o);
    for (const auto& name : required) {
      const PropertyResult& p = r.at(name);
      pass = pass && p.holds() && !p.vacuous && p.samples == 200;
      if (p.max_violation > worst) {
        worst = p.max_violation;
        worst_name = name;
      }
    }
  }
  report(3, "polarization suite", pass,
         "10 maps x 200 samples, worst " + worst_name + " " + fmt("%.3e", worst) + " (tol 1e-8)");
}

void rebase() {
  Rng rng(1004);
  double proj = 0.0;
  double orth = 0.0;
  double series = 0.0;
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = m; n <= 4; ++n) {
      const auto w = ModuleDescriptor::rectangular(m, n);
      const auto frames = random_frames(w, rng);
      const auto r = rebase_basis(build_orthonormal_basis(w, 0, frames), 0, frames);
      AlgebraElement p = AlgebraElement::zero(w.algebra());
      for (std::size_t i = 0; i < m; ++i) {
        const CVector xi = frames[0].cols.column_vector(i);
        const auto e = AlgebraElement::single_block(w.algebra(), 0, rank_one(xi, xi));
        proj = std::max(proj, distance(inner_product(r.elements[i], r.elements[i]), e));
        for (std::size_t k = i + 1; k < m; ++k)
          orth = std::max(orth, operator_norm(inner_product(r.elements[i], r.elements[k])));
        p += e;
      }
      for (int s = 0; s < 50; ++s) {
        // For m < n the series only sees the range of P = Σ ξ_i ⊗ ξ_i; a is drawn there.
        const AlgebraElement a = p * random_algebra_element(w.algebra(), rng);
        const auto sum = module_series(r, a);
        series = std::max(series, distance(inner_product(sum, sum), a.adjoint() * a) / (1.0 + operator_norm(a) * operator_norm(a)));
      }
    }
  }
  report(4, "rebased orthonormal basis and series identity", proj < 1e-12 && orth < 1e-12 && series < 1e-10,
         "projection err " + fmt("%.3e", proj) + ", orthogonality " + fmt("%.3e", orth) + ", series " +
             fmt("%.3e", series) + " (a drawn in the range of P when m < n)");
}

void diagonal_cube() {
  const MapSpec spec = MapSpec::diagonal_cube(4);
  const OAMap f = instantiate_map(spec);
  const PropertyResult oa = check_orthogonal_additivity(f, 100, 1005);
  const auto [x, y] = *additivity_witness(spec);
  const double gap = additivity_gap(f, x, y);
  report(5, "odd non-additive map x(x*)^2", !oa.vacuous && oa.samples == 100 && oa.max_violation < 1e-12 && gap >= 6.0 - 1e-9,
         "o.a. violation " + fmt("%.3e", oa.max_violation) + " on 100 disjoint-support pairs, additivity gap " +
             fmt("%.12g", gap));
}

void rank_one_cubic() {
  const MapSpec spec = MapSpec::rank_one_cubic({1.0, 0.0, 0.0});
  const OAMap f = instantiate_map(spec);
  const PropertyResult oa = check_orthogonal_additivity(f, 100, 1006);
  const auto [x, y] = *additivity_witness(spec);
  const double gap = additivity_gap(f, x, y);
  const double sesq = sesquilinearity_defect(f, 200, 1006);
  report(6, "map (xi, eta0) xi (x) xi on a vector module", oa.vacuous && gap >= 1.0 && sesq > 0.1,
         std::string("o.a. vacuous ") + (oa.vacuous ? "yes" : "no") + ", additivity gap " + fmt("%.6f", gap) +
             ", S sesquilinearity defect " + fmt("%.3e", sesq) + " (required > 0.1; f is odd so S vanishes)");
}

void harmonic() {
  const auto t0 = Clock::now();
  const auto rows = harmonic_demo(64, 1007);
  double err = 0.0;
  double norm_err = 0.0;
  double min_growth = 1e300;
  for (const auto& r : rows) {
    err = std::max(err, std::abs(r.phi_value - r.partial_sum));
    norm_err = std::max(norm_err, std::abs(r.operator_norm - 1.0));
  }
  for (std::size_t n = 1; 2 * n <= rows.size(); ++n)
    min_growth = std::min(min_growth, rows[2 * n - 1].phi_value - rows[n - 1].phi_value);
  const double t = seconds_since(t0);
  const bool pass = err < 1e-9 && std::abs(rows[3].phi_value - 25.0 / 12.0) < 1e-9 && min_growth >= 0.5 &&
                    norm_err < 1e-12 && t < 10.0;
  report(7, "harmonic growth of Phi(T_n) on Pair(64)", pass,
         "max |Phi(T_n) - H_n| " + fmt("%.3e", err) + ", Phi(T_4) " + fmt("%.12f", rows[3].phi_value) +
             ", min Phi(T_2n) - Phi(T_n) " + fmt("%.17g", min_growth) + ", max |‖T_n‖ - 1| " + fmt("%.1e", norm_err) +
             ", Phi(T_64) " + fmt("%.6f", rows.back().phi_value) + ", " + fmt("%.3f", t) + " s");
}

void doubling() {
  Rng rng(1008);
  const auto v = ModuleDescriptor::rectangular(4, 2);
  DoublingReport worst;
  bool pass = true;
  for (int k = 0; k < 10; ++k) {
    const Doubling d = doubling_construction(v, random_unitary(4, rng), rng);
    pass = pass && d.report.holds();
    worst.morphism = std::max(worst.morphism, d.report.morphism);
    worst.orthogonality = std::max(worst.orthogonality, d.report.orthogonality);
    worst.polarized_orthogonality = std::max(worst.polarized_orthogonality, d.report.polarized_orthogonality);
  }
  report(8, "doubling construction phi(A) = UA", pass,
         "10 unitaries, morphism " + fmt("%.3e", worst.morphism) + ", orthogonality " + fmt("%.3e", worst.orthogonality) +
             ", (phi +- lambda psi) for lambda in {1, i} " + fmt("%.3e", worst.polarized_orthogonality));
}

void uniqueness() {
  Rng rng(1009);
  double worst = 0.0;
  for (const auto& w : {ModuleDescriptor::rectangular(3, 4), ModuleDescriptor::pair(3, Flavor::HilbertSchmidt),
                        ModuleDescriptor::algebra_as_module(3)}) {
    const OAMap f = instantiate_map(random_representable(w, 2, rng));
    const Decomposition a = decompose(f, {50, 11, true});
    const Decomposition b = decompose(f, {50, 12, true});
    worst = std::max(worst, a.phi.max_entry_distance(b.phi));
  }
  report(9, "uniqueness across seeds and random frames", worst < 1e-9, "max table difference " + fmt("%.3e", worst));
}

}  // namespace

int main() {
  round_trip();
  blockwise();
  polarization_suite();
  rebase();
  diagonal_cube();
  rank_one_cubic();
  harmonic();
  doubling();
  uniqueness();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
