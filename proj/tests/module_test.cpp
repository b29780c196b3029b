#include <gtest/gtest.h>

#include "oam/module.hpp"
#include "oam/random.hpp"
#include "support.hpp"

using namespace oam;
using oam::testing::near;

namespace {

std::vector<ModuleDescriptor> sample_modules() {
  std::vector<ModuleDescriptor> out;
  for (Flavor f : {Flavor::CompactOperator, Flavor::HilbertSchmidt}) {
    out.push_back(ModuleDescriptor::algebra_as_module(3, f));
    out.push_back(ModuleDescriptor::rectangular(2, 3, f));
    out.push_back(ModuleDescriptor::rectangular(4, 2, f));
    out.push_back(ModuleDescriptor::vector(3, f));
    out.push_back(ModuleDescriptor::pair(3, f));
    out.push_back(ModuleDescriptor::diagonal(4, f));
    out.push_back(ModuleDescriptor::direct_sum(
        {ModuleDescriptor::rectangular(2, 2, f), ModuleDescriptor::vector(3, f), ModuleDescriptor::pair(2, f)}));
  }
  return out;
}

}  // namespace

TEST(Module, InnerProductIsRightLinearInSecondArgument) {
  Rng rng(10);
  for (const auto& w : sample_modules()) {
    const auto x = ModuleElement::random(w, rng);
    const auto y = ModuleElement::random(w, rng);
    const auto z = ModuleElement::random(w, rng);
    const auto a = random_algebra_element(w.algebra(), rng);
    const auto b = random_algebra_element(w.algebra(), rng);
    const Complex l{0.3, -1.2};
    const auto lhs = inner_product(x, module_action(y, a) + l * module_action(z, b));
    const auto rhs = inner_product(x, y) * a + l * (inner_product(x, z) * b);
    EXPECT_TRUE(near(lhs, rhs, 1e-12)) << w.describe();
  }
}

TEST(Module, InnerProductIsHermitian) {
  Rng rng(11);
  for (const auto& w : sample_modules()) {
    const auto x = ModuleElement::random(w, rng);
    const auto y = ModuleElement::random(w, rng);
    EXPECT_TRUE(near(inner_product(x, y).adjoint(), inner_product(y, x), 1e-14)) << w.describe();
  }
}

TEST(Module, InnerProductIsPositiveDefinite) {
  Rng rng(12);
  for (const auto& w : sample_modules()) {
    const auto x = ModuleElement::random(w, rng);
    EXPECT_TRUE(is_positive(inner_product(x, x))) << w.describe();
    EXPECT_GT(module_norm(x), 0.0);
    const auto zero = ModuleElement::zero(w);
    EXPECT_EQ(module_norm(zero), 0.0);
  }
}

TEST(Module, VectorInnerProductOfUnitVectors) {
  // ⟨e1, e2⟩ is the rank-one operator e2 ⊗ e1 in transposed form.
  const auto w = ModuleDescriptor::vector(2);
  const auto e1 = ModuleElement::from_vector(w, {1.0, 0.0});
  const auto e2 = ModuleElement::from_vector(w, {0.0, 1.0});
  EXPECT_TRUE(near(inner_product(e1, e2).block(0), CMatrix::unit(2, 2, 0, 1), 0.0));
  EXPECT_TRUE(near(inner_product(e1, e2).block(0), rank_one(CVector{0.0, 1.0}, CVector{1.0, 0.0}).transpose(), 0.0));
  EXPECT_TRUE(near(inner_product(e1, e1).block(0), CMatrix::unit(2, 2, 0, 0), 0.0));
}

TEST(Module, VectorActionIsTransposedMatrixAction) {
  Rng rng(13);
  const auto w = ModuleDescriptor::vector(3);
  const CVector xi = random_vector(3, rng);
  const auto a = random_algebra_element(w.algebra(), rng);
  const CVector expected = a.block(0).transpose() * xi;
  const CVector got = module_action(ModuleElement::from_vector(w, xi), a).vector_payload();
  for (std::size_t k = 0; k < 3; ++k) EXPECT_LT(std::abs(got[k] - expected[k]), 1e-14);
}

TEST(Module, PairInnerProductTraceIsSumOfSquaredNorms) {
  const auto w = ModuleDescriptor::pair(3);
  const auto x = ModuleElement::from_pair(w, {1.0, 2.0, 0.0}, {0.0, kI, 1.0});
  EXPECT_NEAR(inner_product(x, x).block(0).trace().real(), 5.0 + 2.0, 1e-14);
}

TEST(Module, DiagonalModuleInnerProductIsCoordinatewise) {
  const auto w = ModuleDescriptor::diagonal(3);
  const auto x = ModuleElement::from_diagonal(w, {2.0, kI, 0.0});
  const auto y = ModuleElement::from_diagonal(w, {1.0, 1.0, 5.0});
  const auto ip = inner_product(x, y);
  EXPECT_EQ(ip.block(0)(0, 0), Complex(2.0, 0.0));
  EXPECT_EQ(ip.block(1)(0, 0), -kI);
  EXPECT_EQ(ip.block(2)(0, 0), Complex(0.0, 0.0));
}

TEST(Module, NormMatchesFlavor) {
  // ⟨x, x⟩ = diag(9, 16) for x = diag(3, 4) in AlgebraAsModule(2).
  const CMatrix d = CMatrix::diagonal(CVector{3.0, 4.0});
  const auto c = ModuleElement::from_matrix(ModuleDescriptor::algebra_as_module(2), d);
  const auto h = ModuleElement::from_matrix(ModuleDescriptor::algebra_as_module(2, Flavor::HilbertSchmidt), d);
  EXPECT_NEAR(module_norm(c), 4.0, 1e-12);
  EXPECT_NEAR(module_norm(h), std::sqrt(std::hypot(9.0, 16.0)), 1e-12);
}

TEST(Module, OrthogonalDimensions) {
  EXPECT_EQ(ModuleDescriptor::rectangular(3, 2).orthogonal_dimension(), 3u);
  EXPECT_EQ(ModuleDescriptor::vector(5).orthogonal_dimension(), 1u);
  EXPECT_EQ(ModuleDescriptor::pair(5).orthogonal_dimension(), 2u);
  EXPECT_EQ(ModuleDescriptor::diagonal(4).min_block_orthogonal_dimension(), 1u);
  const auto ds = ModuleDescriptor::direct_sum({ModuleDescriptor::rectangular(3, 2), ModuleDescriptor::pair(4)});
  EXPECT_EQ(ds.orthogonal_dimension(), 5u);
  EXPECT_EQ(ds.min_block_orthogonal_dimension(), 2u);
  EXPECT_EQ(ds.coordinate_count(), 14u);
  EXPECT_FALSE(ModuleDescriptor::vector(3).has_orthogonal_pairs());
  EXPECT_TRUE(ModuleDescriptor::diagonal(2).has_orthogonal_pairs());
}

TEST(Module, DescriptorValidation) {
  EXPECT_THROW(ModuleDescriptor::rectangular(0, 2), std::invalid_argument);
  EXPECT_THROW(ModuleDescriptor::direct_sum({}), std::invalid_argument);
  EXPECT_THROW(ModuleDescriptor::direct_sum({ModuleDescriptor::rectangular(2, 2),
                                             ModuleDescriptor::rectangular(2, 2, Flavor::HilbertSchmidt)}),
               std::invalid_argument);
  EXPECT_THROW(ModuleDescriptor::direct_sum({ModuleDescriptor::diagonal(2)}), std::invalid_argument);
}

TEST(Module, PayloadRoundTripsAndShapeErrors) {
  const auto w = ModuleDescriptor::pair(2);
  const auto x = ModuleElement::from_pair(w, {1.0, 2.0}, {3.0, 4.0});
  EXPECT_EQ(x.pair_payload().first, (CVector{1.0, 2.0}));
  EXPECT_EQ(x.pair_payload().second, (CVector{3.0, 4.0}));
  EXPECT_EQ(x.coordinates(), (CVector{1.0, 2.0, 3.0, 4.0}));
  EXPECT_THROW(ModuleElement::from_pair(w, {1.0}, {1.0, 2.0}), std::invalid_argument);
  EXPECT_THROW(ModuleElement::from_vector(w, {1.0, 2.0}), std::invalid_argument);
  EXPECT_THROW(ModuleElement(w, {CMatrix(3, 2)}), std::invalid_argument);
  const auto other = ModuleElement::zero(ModuleDescriptor::pair(3));
  EXPECT_THROW(inner_product(x, other), std::invalid_argument);
}

TEST(Module, OrthogonalityIsDetected) {
  const auto w = ModuleDescriptor::rectangular(2, 2);
  const auto x = ModuleElement::from_matrix(w, CMatrix::unit(2, 2, 0, 0));
  const auto y = ModuleElement::from_matrix(w, CMatrix::unit(2, 2, 1, 1));
  const auto z = ModuleElement::from_matrix(w, CMatrix::unit(2, 2, 0, 1));
  EXPECT_TRUE(is_orthogonal(x, y, 1e-14));
  EXPECT_FALSE(is_orthogonal(x, z, 1e-14));
}
