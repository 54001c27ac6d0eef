#pragma once

// Independent reference implementations used only by the tests.

#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

// ---------------------------------------------------------------------------
// Index calculus by literal enumeration in exact rational arithmetic.
// s = sp / sq with sp > sq > 0.

struct Frac {
  long long num;
  long long den;  // > 0
};

inline Frac make(long long a, long long b) {
  if (b < 0) a = -a, b = -b;
  const long long g = std::gcd(a < 0 ? -a : a, b);
  return {a / g, b / g};
}

inline long long floor_of(Frac f) {
  long long q = f.num / f.den;
  if (f.num % f.den != 0 && f.num < 0) --q;
  return q;
}

inline long long bracket_plus(Frac f) {  // [r]_+ for r >= 0
  return f.num % f.den == 0 ? f.num / f.den : floor_of(f) + 1;
}

struct Indices {
  int n;
  long long sp, sq;
  bool l3_uses_plus = false;  // reading switch for [2(s-1)]

  long long s_plus() const { return bracket_plus(make(sp, sq)); }

  // [((a / 2) + k)(s - 1)]_+ with the half-integer written as a / 2.
  long long term(long long a, long long k) const {
    return bracket_plus(make((a + 2 * k) * (sp - sq), 2 * sq));
  }

  long long l1(long long k) const { return k + term(n, k); }
  long long l2(long long k) const {
    const long long a = n == 1 ? n + 3 : (n == 2 ? n + 1 : n);
    return k + 1 + term(a, k);
  }
  long long l3(long long k) const {
    const Frac two_s1 = make(2 * (sp - sq), sq);
    const long long b = l3_uses_plus ? bracket_plus(two_s1) : floor_of(two_s1);
    return 2 + b + k * s_plus();
  }
  long long l4(long long k) const { return k + 1 + term(n + 1 + 2, k); }
  long long nu(long long k) const {
    if (n == 2) return (k + 1) * (s_plus() - 1);
    if (n == 3 || n == 4) return k * (s_plus() - 1);
    return 0;
  }
  long long l5(long long k) const { return l3(k) + nu(k); }

  long long N0() const {
    const long long k0 = n / 2 + 2;
    for (long long k = 0;; ++k) {
      if (k / s_plus() >= k0 && k >= l1(k0) && k >= l2(k0) && k >= l3(k0)) return k;
    }
  }

  std::optional<long long> N1(long long N) const {
    std::optional<long long> best;
    const long long lo = n / 2 + 2;
    for (long long k = lo; k <= N / s_plus(); ++k) {
      if (l1(k) <= N && l2(k) <= N && l3(k) <= N) best = k;
    }
    return best;
  }

  std::optional<long long> N2(long long N) const {
    std::optional<long long> best;
    for (long long k = 0; k <= N / s_plus(); ++k) {
      if (l4(k) <= N && l5(k) <= N) best = k;
    }
    return best;
  }
};

// ---------------------------------------------------------------------------
// Viscous Burgers u_t + (u^2/2)_x = u_xx on the circle with u(x, 0) = A sin x,
// solved through the Cole-Hopf transform:
//   u = 4 sum_k k I_k(b) e^{-k^2 t} sin(kx) / (I_0(b) + 2 sum_k I_k(b) e^{-k^2 t} cos(kx)),
// b = A / 2.

inline double cole_hopf(double A, double x, double t, int terms = 60) {
  const double b = 0.5 * A;
  double num = 0.0;
  double den = std::cyl_bessel_i(0.0, b);
  for (int k = 1; k <= terms; ++k) {
    const double ik = std::cyl_bessel_i(static_cast<double>(k), b) * std::exp(-double(k) * k * t);
    num += 4.0 * k * ik * std::sin(k * x);
    den += 2.0 * ik * std::cos(k * x);
  }
  return num / den;
}

}  // namespace oracle
