#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "indideal/errors.hpp"

namespace indideal {

// Exact integer type for all coefficients and Betti numbers. Family counts
// overflow 64-bit words well within desk scale (path coefficients do so
// around n = 70), so everything numeric is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

// C(a, b) with the usual convention that out-of-range arguments give 0.
inline BigInt binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt r = 1;
  for (long long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;  // exact: r is C(a-b+i, i) after this step
  }
  return r;
}

// n * C(n - d*k, k) / (n - d*k), asserting exact divisibility.
inline BigInt cyclic_selection_count(long long n, long long d, long long k) {
  if (k == 0) return 1;
  long long m = n - d * k;
  if (m <= 0) throw InternalError("cyclic_selection_count: nonpositive denominator");
  BigInt num = BigInt(n) * binomial(m, k);
  BigInt q = num / m;
  if (q * m != num)
    throw InternalError("cyclic_selection_count: coefficient not integral");
  return q;
}

}  // namespace indideal
