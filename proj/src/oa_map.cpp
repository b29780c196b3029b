#include "oam/oa_map.hpp"

#include <cmath>
#include <stdexcept>

namespace oam {

GVector::GVector(std::vector<Complex> v) : v_(std::move(v)) {
  for (const auto& z : v_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("GVector: non-finite entry");
    }
  }
}

double GVector::norm() const { return oam::norm(v_); }

GVector& GVector::operator+=(const GVector& o) {
  if (o.size() != size()) throw std::invalid_argument("GVector: dimension mismatch");
  for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += o.v_[k];
  return *this;
}

GVector& GVector::operator-=(const GVector& o) {
  if (o.size() != size()) throw std::invalid_argument("GVector: dimension mismatch");
  for (std::size_t k = 0; k < v_.size(); ++k) v_[k] -= o.v_[k];
  return *this;
}

GVector& GVector::operator*=(Complex s) {
  for (auto& z : v_) z *= s;
  return *this;
}

GVector operator+(GVector a, const GVector& b) { return a += b; }
GVector operator-(GVector a, const GVector& b) { return a -= b; }
GVector operator*(Complex s, GVector a) { return a *= s; }

OAMap::OAMap(ModuleDescriptor domain, std::size_t codomain_dim, Evaluator evaluate)
    : domain_(std::move(domain)),
      codomain_dim_(codomain_dim),
      evaluate_(std::move(evaluate)),
      counter_(std::make_shared<std::atomic<std::size_t>>(0)) {
  if (codomain_dim_ == 0) throw std::invalid_argument("OAMap: codomain dimension must be >= 1");
  if (!evaluate_) throw std::invalid_argument("OAMap: empty evaluator");
}

GVector OAMap::operator()(const ModuleElement& x) const {
  if (!(x.descriptor() == domain_)) throw std::invalid_argument("OAMap: argument outside the domain");
  counter_->fetch_add(1, std::memory_order_relaxed);
  GVector out = evaluate_(x);
  if (out.size() != codomain_dim_) throw std::logic_error("OAMap: evaluator returned wrong dimension");
  return out;
}

}  // namespace oam
