#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "oam/module.hpp"

namespace oam {

/// Element of the codomain G = C^d with the Euclidean norm.
class GVector {
 public:
  GVector() = default;
  explicit GVector(std::size_t d) : v_(d) {}
  explicit GVector(std::vector<Complex> v);

  std::size_t size() const { return v_.size(); }
  Complex& operator[](std::size_t k) { return v_[k]; }
  const Complex& operator[](std::size_t k) const { return v_[k]; }
  std::span<const Complex> values() const { return v_; }

  double norm() const;

  GVector& operator+=(const GVector& o);
  GVector& operator-=(const GVector& o);
  GVector& operator*=(Complex s);

  friend bool operator==(const GVector&, const GVector&) = default;

 private:
  std::vector<Complex> v_;
};

GVector operator+(GVector a, const GVector& b);
GVector operator-(GVector a, const GVector& b);
GVector operator*(Complex s, GVector a);

/// Black-box map W -> G. Copies share the evaluation counter; the counter is
/// atomic so the final count is exact under concurrent evaluation.
class OAMap {
 public:
  using Evaluator = std::function<GVector(const ModuleElement&)>;

  OAMap(ModuleDescriptor domain, std::size_t codomain_dim, Evaluator evaluate);

  GVector operator()(const ModuleElement& x) const;

  const ModuleDescriptor& domain() const { return domain_; }
  std::size_t codomain_dim() const { return codomain_dim_; }
  std::size_t eval_count() const { return counter_->load(); }

 private:
  ModuleDescriptor domain_;
  std::size_t codomain_dim_;
  Evaluator evaluate_;
  std::shared_ptr<std::atomic<std::size_t>> counter_;
};

/// Two-argument map W × W -> G (the B and S forms).
using PairForm = std::function<GVector(const ModuleElement&, const ModuleElement&)>;

}  // namespace oam
