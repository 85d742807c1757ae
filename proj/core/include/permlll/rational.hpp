#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace permlll {

// Exact rational arithmetic for small-scale probability computations:
// event probabilities, enumeration oracles, and exact bound checks.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// n * (n-1) * ... * (n-r+1); equals 1 for r == 0.
inline BigInt falling_factorial(unsigned n, unsigned r) {
  BigInt f = 1;
  for (unsigned i = 0; i < r; ++i) f *= BigInt(n - i);
  return f;
}

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt b = 1;
  for (long long i = 0; i < k; ++i) {
    b *= BigInt(n - i);
    b /= BigInt(i + 1);
  }
  return b;
}

}  // namespace permlll
