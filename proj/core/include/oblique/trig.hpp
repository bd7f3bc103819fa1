#pragma once

#include <cmath>

#include "oblique/errors.hpp"

namespace oblique {

/// arcsec(x) = arccos(1/x) for x >= 1.
inline double arcsec(double x) {
  if (!(x >= 1.0)) throw DomainError("arcsec: requires x >= 1");
  return std::acos(1.0 / x);
}

/// arccsc(x) = arcsin(1/x) for x >= 1.
inline double arccsc(double x) {
  if (!(x >= 1.0)) throw DomainError("arccsc: requires x >= 1");
  return std::asin(1.0 / x);
}

}  // namespace oblique
