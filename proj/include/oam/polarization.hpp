#pragma once

#include "oam/oa_map.hpp"

namespace oam {

/// x ↦ ½(f(x) − f(−x)).
OAMap odd_part(const OAMap& f);

/// x ↦ ½(f(x) + f(−x)).
OAMap even_part(const OAMap& f);

/// B(x, y) = ⅛(f(x+y) + f(−x−y) − f(x−y) − f(−x+y)), four evaluations.
PairForm polarize_B(const OAMap& f);

/// S(x, y) = B(x, y) + i B(x, iy) in closed form:
///   ⅛( f(x+y) + i f(x+iy) − f(x−y) − i f(x−iy)
///    + f(−x−y) + i f(−x−iy) − f(−x+y) − i f(−x+iy) ),
/// eight evaluations. Linear in x and conjugate-linear in y whenever f is a
/// continuous orthogonally additive map on a module with dim_A >= 2.
PairForm sesquilinear_S(const OAMap& f);

}  // namespace oam
