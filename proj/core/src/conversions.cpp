#include "tutte/conversions.hpp"

namespace tutte {

BiPoly tutte_from_coboundary(const BiPoly& cob, unsigned rank) {
  const BiPoly shifted = compose(cob, (BiPoly::x() - 1) * (BiPoly::y() - 1), BiPoly::y());
  return exact_div(shifted, pow(BiPoly::y() - 1, rank));
}

BiPoly coboundary_from_tutte(const BiPoly& tutte, unsigned rank) {
  const BiPoly t_minus_1 = BiPoly::y() - 1;
  return subst_rational(tutte, BiPoly::x() + BiPoly::y() - 1, t_minus_1, BiPoly::y(), BiPoly(1),
                        pow(t_minus_1, rank));
}

UniPoly characteristic_from_tutte(const BiPoly& tutte, unsigned rank) {
  const BiPoly at = compose(tutte, 1 - BiPoly::x(), BiPoly(0));
  return UniPoly::from_bipoly_x(rank % 2 == 0 ? at : -at);
}

UniPoly characteristic_from_coboundary(const BiPoly& cob) {
  return UniPoly::from_bipoly_x(compose(cob, BiPoly::x(), BiPoly(0)));
}

}  // namespace tutte
