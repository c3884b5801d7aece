#pragma once

// Poincare series P(t) = Q(t) / (1 - t)^(D+1) of powers of a determinant
// bundle on a moduli space of dimension D whose canonical bundle is the
// (-3 delta)-th power. Q is then an integer palindrome of degree D + 1 - 3 delta.

#include "sdual/integer.hpp"
#include "sdual/linsolve.hpp"

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sdual::series {

/// Dense polynomial in t with integer coefficients; index = degree.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long> coeffs) : c_(coeffs.begin(), coeffs.end()) { trim(); }

  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  /// Coefficient of t^k, zero outside the support.
  Int operator[](long k) const {
    return (k < 0 || k > degree()) ? Int(0) : c_[static_cast<std::size_t>(k)];
  }

  const std::vector<Int>& coefficients() const { return c_; }

  Int at_one() const {
    Int s = 0;
    for (const auto& x : c_) s += x;
    return s;
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    if (p.c_.empty()) return os << '0';
    bool first = true;
    for (std::size_t k = 0; k < p.c_.size(); ++k) {
      Int a = p.c_[k];
      if (a == 0) continue;
      if (!first) os << (a < 0 ? " - " : " + ");
      else if (a < 0) os << '-';
      if (a < 0) a = -a;
      if (a != 1 || k == 0) os << a;
      if (k >= 1) os << 't';
      if (k >= 2) os << '^' << k;
      first = false;
    }
    return os;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

/// Dense polynomial with rational coefficients in the variable k.
class RationalPolynomial {
public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational operator[](long k) const {
    return (k < 0 || k > degree()) ? Rational(0) : c_[static_cast<std::size_t>(k)];
  }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational operator()(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

private:
  std::vector<Rational> c_;
};

/// Q(t) / (1 - t)^(dim + 1) with the symmetry exponent 3 delta.
struct PoincareSeries {
  IntPolynomial numerator;
  long dim = 0;
  long delta = 1;
};

/// Number of monomials of degree k in dim + 1 variables, C(k + dim, dim).
inline Int free_coefficient(long k, long dim) {
  return k < 0 ? Int(0) : binomial(Int(k + dim), dim);
}

/// Coefficient of t^k in the expansion of the series.
inline Int coefficient(const PoincareSeries& s, long k) {
  if (k < 0) throw DomainError("coefficient: k must be nonnegative");
  Int sum = 0;
  const long top = std::min(k, s.numerator.degree());
  for (long j = 0; j <= top; ++j) sum += s.numerator[j] * free_coefficient(k - j, s.dim);
  return sum;
}

/// The first n coefficients of the series.
inline std::vector<Int> expand(const PoincareSeries& s, long n) {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0L)));
  for (long k = 0; k < n; ++k) out.push_back(coefficient(s, k));
  return out;
}

/// Q_k = Q_{length - k} for every k, and no support beyond `length`.
inline bool is_palindromic(const IntPolynomial& p, long length) {
  if (length < 0) return p.degree() < 0;
  if (p.degree() > length) return false;
  for (long k = 0; k <= length; ++k)
    if (p[k] != p[length - k]) return false;
  return true;
}

/// Recovers numerator coefficients Q_0..Q_{count-1} from a coefficient stream
/// h(0), h(1), ... by applying (1 - t)^m with m = dim + 1: Q_k = sum_i (-1)^i C(m, i) h(k - i).
inline std::vector<Int> numerator_from_stream(const std::vector<Int>& h, long dim, long count) {
  const long m = dim + 1;
  std::vector<Int> q;
  for (long k = 0; k < count; ++k) {
    Int acc = 0;
    for (long i = 0; i <= std::min(k, m); ++i) {
      if (k - i >= static_cast<long>(h.size()))
        throw DomainError("numerator_from_stream: coefficient stream too short");
      Int term = binomial(Int(m), i) * h[static_cast<std::size_t>(k - i)];
      if (i % 2 == 0) acc += term;
      else acc -= term;
    }
    q.push_back(acc);
  }
  return q;
}

/// Not enough constraints to pin down the numerator.
class InsufficientData : public std::runtime_error {
public:
  InsufficientData(const std::string& msg, std::vector<long> free_degrees)
      : std::runtime_error(msg), free_degrees_(std::move(free_degrees)) {}
  /// Numerator degrees (up to the palindrome) left undetermined.
  const std::vector<long>& free_degrees() const { return free_degrees_; }

private:
  std::vector<long> free_degrees_;
};

/// Constraints contradict each other or force a non-integral numerator.
class InconsistentConstraints : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Sample {
  long k = 0;
  Int h0;
};

struct Reconstruction {
  PoincareSeries series;
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;

  /// Equations beyond those needed, all of which were checked consistent.
  std::size_t redundant() const { return equations - rank; }
};

/// Solves for the palindromic numerator of degree D + 1 - 3 delta from
/// Q_0 = 1, Q(1) = q_at_1 and sampled section counts h0(k).
inline Reconstruction reconstruct(long dim, long delta, const Int& q_at_1,
                                  const std::vector<Sample>& samples) {
  if (dim < 0) throw DomainError("reconstruct: D must be nonnegative");
  if (delta < 1) throw DomainError("reconstruct: delta must be positive");
  const long length = dim + 1 - 3 * delta;
  if (length < 0)
    throw DomainError("reconstruct: D + 1 - 3 delta = " + std::to_string(length) + " is negative");
  std::set<long> seen;
  for (const auto& s : samples) {
    if (s.k < 0) throw DomainError("reconstruct: sample degree must be nonnegative");
    if (!seen.insert(s.k).second)
      throw DomainError("reconstruct: duplicate sample at k = " + std::to_string(s.k));
  }

  // Unknowns p_0..p_half with Q_j = p_{min(j, length - j)}.
  const long half = length / 2;
  const auto unknowns = static_cast<std::size_t>(half + 1);
  auto slot = [&](long j) { return static_cast<std::size_t>(std::min(j, length - j)); };

  linsolve::Matrix a;
  std::vector<Rational> b;
  auto equation = [&](auto&& weight, const Int& rhs) {
    linsolve::Row row(unknowns, Rational(0));
    for (long j = 0; j <= length; ++j) row[slot(j)] += Rational(weight(j));
    a.push_back(std::move(row));
    b.emplace_back(rhs);
  };

  equation([](long j) { return Int(j == 0 ? 1 : 0); }, Int(1));
  equation([](long) { return Int(1); }, q_at_1);
  for (const auto& s : samples)
    equation([&](long j) { return j <= s.k ? free_coefficient(s.k - j, dim) : Int(0); }, s.h0);

  const linsolve::Solution sol = linsolve::solve(a, b, unknowns);
  if (sol.status == linsolve::Status::inconsistent)
    throw InconsistentConstraints("reconstruct: inconsistent constraints (" +
                                  std::to_string(sol.equations) + " equations, rank " +
                                  std::to_string(sol.rank) + ")");
  if (sol.status == linsolve::Status::underdetermined) {
    std::vector<long> free(sol.free_columns.begin(), sol.free_columns.end());
    std::ostringstream msg;
    msg << "reconstruct: insufficient data, " << free.size()
        << " degree(s) of freedom remain at numerator degree(s)";
    for (long f : free) msg << ' ' << f;
    throw InsufficientData(msg.str(), std::move(free));
  }

  std::vector<Int> coeffs(static_cast<std::size_t>(length + 1));
  for (long j = 0; j <= length; ++j) {
    const Rational& v = sol.x[slot(j)];
    if (boost::multiprecision::denominator(v) != 1)
      throw InconsistentConstraints("reconstruct: inconsistent constraints, non-integral Q_" +
                                    std::to_string(j) + " = " + to_string(v));
    coeffs[static_cast<std::size_t>(j)] = boost::multiprecision::numerator(v);
  }
  Reconstruction r;
  r.series = PoincareSeries{IntPolynomial(std::move(coeffs)), dim, delta};
  r.equations = sol.equations;
  r.unknowns = sol.unknowns;
  r.rank = sol.rank;
  if (r.series.numerator.degree() != length || !is_palindromic(r.series.numerator, length))
    throw InvariantViolation("reconstruct: numerator is not a palindrome of degree " +
                             std::to_string(length));
  return r;
}

/// h(k) = sum_j Q_j C(k - j + D, D) as a degree-D polynomial in k.
inline RationalPolynomial hilbert_polynomial(const PoincareSeries& s) {
  const long dim = s.dim;
  std::vector<Rational> total(static_cast<std::size_t>(dim + 1), Rational(0));
  const Rational inv_fact = Rational(1) / Rational(factorial(dim));
  for (long j = 0; j <= s.numerator.degree(); ++j) {
    if (s.numerator[j] == 0) continue;
    // C(k - j + D, D) = prod_{i=1..D} (k - j + i) / D!
    std::vector<Rational> p{Rational(1)};
    for (long i = 1; i <= dim; ++i) {
      std::vector<Rational> next(p.size() + 1, Rational(0));
      const Rational shift(i - j);
      for (std::size_t e = 0; e < p.size(); ++e) {
        next[e + 1] += p[e];
        next[e] += shift * p[e];
      }
      p = std::move(next);
    }
    const Rational w = Rational(s.numerator[j]) * inv_fact;
    for (std::size_t e = 0; e < p.size(); ++e) total[e] += w * p[e];
  }
  return RationalPolynomial(std::move(total));
}

}  // namespace sdual::series
