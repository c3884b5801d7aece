#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace sdual {

/// Arbitrary precision integer used for every count and coordinate.
using Int = boost::multiprecision::cpp_int;
/// Exact rational scratch type (linear solving, Hilbert polynomials).
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised for inputs that are well formed but have no formula behind them.
class Unsupported : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal identity failed; the computation is not trustworthy.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

/// Nonnegative gcd; gcd(a, 0) = |a|.
inline Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Binomial coefficient C(n, k) for n >= 0; zero when k < 0 or k > n.
inline Int binomial(const Int& n, long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Int factorial(long n) {
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Exact conversion to a machine integer; throws DomainError on overflow.
inline long to_long(const Int& x, const char* what = "value") {
  if (x > Int(std::numeric_limits<long>::max()) || x < Int(std::numeric_limits<long>::min()))
    throw DomainError(std::string(what) + " does not fit in a machine integer: " + x.str());
  return static_cast<long>(x);
}

}  // namespace sdual
