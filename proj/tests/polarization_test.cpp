#include <gtest/gtest.h>

#include "oam/catalog.hpp"
#include "oam/polarization.hpp"
#include "oam/random.hpp"
#include "support.hpp"

using namespace oam;
using oam::testing::near;

namespace {

// f(x) = ‖x‖_F² + first coordinate: even part ‖x‖², odd part the coordinate.
OAMap toy_map(const ModuleDescriptor& w) {
  return OAMap(w, 1, [](const ModuleElement& x) {
    const CVector c = x.coordinates();
    return GVector(CVector{std::pow(norm(c), 2) + c.front()});
  });
}

}  // namespace

TEST(Polarization, OddAndEvenPartsSplitTheMap) {
  Rng rng(30);
  const auto w = ModuleDescriptor::rectangular(2, 2);
  const OAMap f = toy_map(w);
  const auto x = ModuleElement::random(w, rng);
  const GVector odd = odd_part(f)(x);
  const GVector even = even_part(f)(x);
  EXPECT_TRUE(near(odd + even, f(x), 1e-14));
  EXPECT_TRUE(near(odd, GVector(CVector{x.coordinates().front()}), 1e-14));
  EXPECT_NEAR(even[0].real(), std::pow(norm(x.coordinates()), 2), 1e-12);
}

TEST(Polarization, BIsTheRealPartOfTheInnerProductForTheSquaredNorm) {
  // F(x) = ‖x‖² gives B(x, y) = Re(x, y).
  Rng rng(31);
  const auto w = ModuleDescriptor::rectangular(2, 3);
  const PairForm B = polarize_B(toy_map(w));
  const auto x = ModuleElement::random(w, rng);
  const auto y = ModuleElement::random(w, rng);
  EXPECT_NEAR(B(x, y)[0].real(), dot(x.coordinates(), y.coordinates()).real(), 1e-12);
  EXPECT_NEAR(B(x, y)[0].imag(), 0.0, 1e-12);
}

TEST(Polarization, SIsPhiOfReversedInnerProduct) {
  // For f = T + Φ(⟨·,·⟩), S(x, y) = Φ(⟨y, x⟩).
  Rng rng(32);
  const auto w = ModuleDescriptor::rectangular(3, 2);
  const MapSpec spec = random_representable(w, 2, rng);
  const OAMap f = instantiate_map(spec);
  const PairForm S = sesquilinear_S(f);
  for (int k = 0; k < 10; ++k) {
    const auto x = ModuleElement::random(w, rng);
    const auto y = ModuleElement::random(w, rng);
    EXPECT_TRUE(near(S(x, y), spec.phi0()->apply(inner_product(y, x)), 1e-12));
  }
}

TEST(Polarization, SCostsEightEvaluationsAndBFour) {
  const auto w = ModuleDescriptor::rectangular(2, 2);
  const OAMap f = toy_map(w);
  const auto x = ModuleElement::zero(w);
  polarize_B(f)(x, x);
  EXPECT_EQ(f.eval_count(), 4u);
  sesquilinear_S(f)(x, x);
  EXPECT_EQ(f.eval_count(), 12u);
}

TEST(Polarization, SVanishesForOddMaps) {
  Rng rng(33);
  const MapSpec spec = MapSpec::rank_one_cubic({1.0, 0.0, 0.0});
  const OAMap f = instantiate_map(spec);
  const PairForm S = sesquilinear_S(f);
  const auto x = ModuleElement::random(spec.module(), rng);
  const auto y = ModuleElement::random(spec.module(), rng);
  EXPECT_LT(S(x, y).norm(), 1e-12);
}

TEST(Polarization, SymmetricPolarizationOfS) {
  Rng rng(34);
  const auto w = ModuleDescriptor::pair(3);
  const OAMap f = instantiate_map(random_representable(w, 3, rng));
  const PairForm B = polarize_B(f);
  const PairForm S = sesquilinear_S(f);
  const auto x = ModuleElement::random(w, rng);
  const auto y = ModuleElement::random(w, rng);
  EXPECT_TRUE(near(2.0 * B(x, y), S(x, y) + S(y, x), 1e-10));
}
