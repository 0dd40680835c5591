#pragma once

#include "s3c/random.hpp"
#include "s3c/render.hpp"

namespace s3c::test {

inline Poly M(int a, int b, int c, int d, int s = 0, GQ k = GQ(1)) { return Poly::monomial({a, b, c, d, s}, k); }
inline GQ Q(long p, long q = 1) { return GQ(Rational(p, q)); }
inline GQ I(long p = 1, long q = 1) { return GQ(Rational(0), Rational(p, q)); }

}  // namespace s3c::test
