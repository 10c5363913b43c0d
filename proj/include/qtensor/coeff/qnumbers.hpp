#pragma once

#include "qtensor/coeff/laurent_poly.hpp"

namespace qtensor::coeff {

/// Balanced Gaussian integer [m] = (q^m - q^-m) / (q - q^-1).
LaurentPoly qint(int m);

/// [m]! = [1][2]...[m]; throws InvalidArgument for m < 0.
LaurentPoly qfact(int m);

}  // namespace qtensor::coeff
