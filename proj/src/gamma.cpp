#include "mucrit/gamma.hpp"

#include <stdexcept>

namespace mucrit {

GammaNumeric gamma_numeric(const Field& f, u64 alpha, u64 k, u64 d) {
  const u64 dm1 = f.sub(f.reduce_u(d), 1);
  const u64 dm2 = f.sub(f.reduce_u(d), 2);
  if (dm1 == 0 || dm2 == 0) throw std::domain_error("gamma constants need d-1 and d-2 invertible");
  if (f.modulus() <= 3) throw std::domain_error("gamma constants need p > 3");
  const u64 a = f.reduce_u(alpha);
  const u64 kk = f.reduce_u(k);
  GammaNumeric g;
  g.g0 = f.div(f.mul(a, f.add(a, 1)), dm1);
  g.g1 = f.div(f.mul(f.mul(a, f.add(a, 1)), f.add(a, 2)), f.mul(dm1, dm2));
  const u64 kp1 = f.add(kk, 1), kp2 = f.add(kk, 2);
  g.g2 = f.add(f.sub(f.mul(a, a), f.mul(kp2, a)), f.div(f.mul(kp1, kp2), 3));
  g.g3 = f.sub(a, f.div(kp1, 2));
  const u64 g03 = f.mul(f.mul(kp2, g.g0), g.g3);
  g.g4 = f.sub(g03, f.mul(kk, a));
  g.g5 = f.sub(f.mul(a, a), g03);
  return g;
}

}  // namespace mucrit
