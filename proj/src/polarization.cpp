#include "oam/polarization.hpp"

namespace oam {

OAMap odd_part(const OAMap& f) {
  return OAMap(f.domain(), f.codomain_dim(), [f](const ModuleElement& x) {
    return 0.5 * (f(x) - f(-x));
  });
}

OAMap even_part(const OAMap& f) {
  return OAMap(f.domain(), f.codomain_dim(), [f](const ModuleElement& x) {
    return 0.5 * (f(x) + f(-x));
  });
}

PairForm polarize_B(const OAMap& f) {
  return [f](const ModuleElement& x, const ModuleElement& y) {
    const ModuleElement sum = x + y;
    const ModuleElement diff = x - y;
    GVector acc = f(sum);
    acc += f(-sum);
    acc -= f(diff);
    acc -= f(-diff);
    return 0.125 * std::move(acc);
  };
}

PairForm sesquilinear_S(const OAMap& f) {
  return [f](const ModuleElement& x, const ModuleElement& y) {
    const ModuleElement iy = kI * y;
    const ModuleElement p1 = x + y;
    const ModuleElement pi = x + iy;
    const ModuleElement m1 = x - y;
    const ModuleElement mi = x - iy;
    GVector real_part = f(p1);
    real_part -= f(m1);
    real_part += f(-p1);
    real_part -= f(-m1);
    GVector imag_part = f(pi);
    imag_part -= f(mi);
    imag_part += f(-pi);
    imag_part -= f(-mi);
    real_part += kI * std::move(imag_part);
    return 0.125 * std::move(real_part);
  };
}

}  // namespace oam
