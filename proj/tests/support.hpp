#pragma once

#include <gtest/gtest.h>

#include "oam/algebra.hpp"
#include "oam/cmatrix.hpp"
#include "oam/oa_map.hpp"

namespace oam::testing {

inline ::testing::AssertionResult near(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return ::testing::AssertionFailure() << "shape mismatch";
  const double d = distance(a, b);
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "distance " << d << " > " << tol;
}

inline ::testing::AssertionResult near(const AlgebraElement& a, const AlgebraElement& b, double tol) {
  if (!(a.descriptor() == b.descriptor())) return ::testing::AssertionFailure() << "descriptor mismatch";
  double d = 0.0;
  for (std::size_t j = 0; j < a.blocks().size(); ++j) d = std::max(d, distance(a.block(j), b.block(j)));
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "block distance " << d << " > " << tol;
}

inline ::testing::AssertionResult near(const GVector& a, const GVector& b, double tol) {
  if (a.size() != b.size()) return ::testing::AssertionFailure() << "dimension mismatch";
  const double d = (a - b).norm();
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "distance " << d << " > " << tol;
}

}  // namespace oam::testing
