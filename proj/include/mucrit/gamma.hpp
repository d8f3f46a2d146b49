#pragma once

#include "mucrit/fp.hpp"

namespace mucrit {

/// The six constants attached to a sumset pair with |A| = |B| = alpha at
/// index k, evaluated in F_p for a given d:
///   g0 = alpha(alpha+1)/(d-1)
///   g1 = alpha(alpha+1)(alpha+2)/((d-1)(d-2))
///   g2 = alpha^2 - (k+2)alpha + (k+1)(k+2)/3
///   g3 = alpha - (k+1)/2
///   g4 = (k+2) g0 g3 - k alpha
///   g5 = alpha^2 - (k+2) g0 g3
struct GammaNumeric {
  u64 g0 = 0, g1 = 0, g2 = 0, g3 = 0, g4 = 0, g5 = 0;
};

/// Throws std::domain_error if d-1, d-2, 2 or 3 vanish mod p.
GammaNumeric gamma_numeric(const Field& f, u64 alpha, u64 k, u64 d);

}  // namespace mucrit
