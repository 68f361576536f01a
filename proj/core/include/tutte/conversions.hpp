#pragma once

#include "tutte/bipoly.hpp"

namespace tutte {

// Coboundary polynomials are stored as BiPoly with x standing for lambda and
// y for t.

/// T(x, y) = cob((x-1)(y-1), y) / (y-1)^rank.
BiPoly tutte_from_coboundary(const BiPoly& cob, unsigned rank);

/// cob(lambda, t) = (t-1)^rank * T((lambda + t - 1)/(t - 1), t).
BiPoly coboundary_from_tutte(const BiPoly& tutte, unsigned rank);

/// chi(lambda) = (-1)^rank * T(1 - lambda, 0).
UniPoly characteristic_from_tutte(const BiPoly& tutte, unsigned rank);

/// chi(lambda) = cob(lambda, 0).
UniPoly characteristic_from_coboundary(const BiPoly& cob);

}  // namespace tutte
