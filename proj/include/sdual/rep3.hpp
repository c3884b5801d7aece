#pragma once

// Characters of polynomial GL(3) representations.
//
// A character is a finitely supported map from monomial exponent triples to
// integer multiplicities. Symmetric and exterior powers go through Adams
// operations and Newton's identities; Schur decompositions are obtained by
// peeling off leading weights.

#include "sdual/integer.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace sdual::rep3 {

/// Exponent triple of a monomial x1^e0 x2^e1 x3^e2.
struct Weight {
  std::array<long, 3> e{0, 0, 0};

  long degree() const { return e[0] + e[1] + e[2]; }
  bool dominant() const { return e[0] >= e[1] && e[1] >= e[2]; }

  /// Graded lexicographic order: total degree first, then exponents.
  friend std::strong_ordering operator<=>(const Weight& x, const Weight& y) {
    if (auto c = x.degree() <=> y.degree(); c != 0) return c;
    return x.e <=> y.e;
  }
  friend bool operator==(const Weight&, const Weight&) = default;

  friend Weight operator+(const Weight& x, const Weight& y) {
    return {{x.e[0] + y.e[0], x.e[1] + y.e[1], x.e[2] + y.e[2]}};
  }
};

/// Partition with at most three rows, lambda1 >= lambda2 >= lambda3 >= 0.
class Partition {
public:
  Partition() = default;
  Partition(long a, long b = 0, long c = 0) : parts_{a, b, c} {
    if (c < 0 || b < c || a < b)
      throw DomainError("invalid partition (" + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(c) + "): parts must be weakly decreasing and nonnegative");
  }

  long operator[](std::size_t i) const { return parts_[i]; }
  const std::array<long, 3>& parts() const { return parts_; }
  long size() const { return parts_[0] + parts_[1] + parts_[2]; }

  /// SL(3) label (lambda1 - lambda3, lambda2 - lambda3).
  std::pair<long, long> sl3() const { return {parts_[0] - parts_[2], parts_[1] - parts_[2]}; }

  friend auto operator<=>(const Partition&, const Partition&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << '(' << p[0] << ',' << p[1] << ',' << p[2] << ')';
  }

private:
  std::array<long, 3> parts_{0, 0, 0};
};

class Character {
public:
  using Terms = std::map<Weight, Int>;

  Character() = default;

  static Character trivial() {
    Character c;
    c.terms_.emplace(Weight{}, 1);
    return c;
  }

  /// Adds m copies of the weight w (m may be negative).
  void add(const Weight& w, const Int& m) {
    if (m == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, m);
    if (!inserted) {
      it->second += m;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Int multiplicity(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Int(0) : it->second;
  }

  /// Invariant under all permutations of the three variables.
  bool is_symmetric() const {
    for (const auto& [w, m] : terms_) {
      const auto& e = w.e;
      for (const Weight& p : {Weight{{e[1], e[0], e[2]}}, Weight{{e[0], e[2], e[1]}}})
        if (multiplicity(p) != m) return false;
    }
    return true;
  }

  /// No negative multiplicities.
  bool is_genuine() const {
    for (const auto& [w, m] : terms_)
      if (m < 0) return false;
    return true;
  }

  /// The common total degree, or nothing if the character mixes degrees.
  std::optional<long> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const long d = terms_.begin()->first.degree();
    if (terms_.rbegin()->first.degree() != d) return std::nullopt;
    return d;
  }

  Character& operator+=(const Character& o) {
    for (const auto& [w, m] : o.terms_) add(w, m);
    return *this;
  }
  Character& operator-=(const Character& o) {
    for (const auto& [w, m] : o.terms_) add(w, -m);
    return *this;
  }
  friend Character operator+(Character x, const Character& y) { return x += y; }
  friend Character operator-(Character x, const Character& y) { return x -= y; }
  friend Character operator*(const Int& s, const Character& x) {
    Character r;
    if (s == 0) return r;
    for (const auto& [w, m] : x.terms_) r.terms_.emplace(w, s * m);
    return r;
  }
  friend bool operator==(const Character&, const Character&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Character& x) {
    os << '{';
    bool first = true;
    for (const auto& [w, m] : x.terms_) {
      os << (first ? "" : ", ") << m << "*x^(" << w.e[0] << ',' << w.e[1] << ',' << w.e[2] << ')';
      first = false;
    }
    return os << '}';
  }

private:
  Terms terms_;
};

/// Sum of multiplicities.
inline Int char_dim(const Character& x) {
  Int d = 0;
  for (const auto& [w, m] : x.terms()) d += m;
  return d;
}

/// Weyl dimension formula for GL(3).
inline Int weyl_dim(const Partition& p) {
  return Int(p[0] - p[1] + 1) * (p[1] - p[2] + 1) * (p[0] - p[2] + 2) / 2;
}

/// Schur polynomial s_lambda(x1, x2, x3), enumerated by Gelfand-Tsetlin patterns.
inline Character schur_char(const Partition& p) {
  Character c;
  const long total = p.size();
  for (long m1 = p[1]; m1 <= p[0]; ++m1)
    for (long m2 = p[2]; m2 <= p[1]; ++m2)
      for (long b = m2; b <= m1; ++b) c.add(Weight{{b, m1 + m2 - b, total - m1 - m2}}, 1);
  return c;
}

/// The standard representation E.
inline Character standard() { return schur_char(Partition(1)); }

/// E*, represented by its SL(3) partner Lambda^2 E (same dimension and SL(3) type).
inline Character dual_standard() { return schur_char(Partition(1, 1)); }

/// S^a E; zero for a < 0.
inline Character sym(long a) { return a < 0 ? Character{} : schur_char(Partition(a)); }

inline Character tensor(const Character& x, const Character& y) {
  Character r;
  for (const auto& [w, m] : x.terms())
    for (const auto& [v, n] : y.terms()) r.add(w + v, m * n);
  return r;
}

/// Adams operation psi^k: every weight is scaled by k.
inline Character adams(const Character& x, long k) {
  Character r;
  for (const auto& [w, m] : x.terms()) r.add(Weight{{k * w.e[0], k * w.e[1], k * w.e[2]}}, m);
  return r;
}

namespace detail {

// Newton's identity n p_n = sum_{i=1..n} sign(i) psi^i(x) p_{n-i}, with sign
// constantly +1 for symmetric powers and (-1)^(i-1) for exterior powers.
inline Character newton_power(const Character& x, long n, bool alternating, const char* name) {
  if (n < 0) return {};
  if (!x.is_genuine())
    throw DomainError(std::string(name) + ": virtual characters are not accepted");
  std::vector<Character> powers{Character::trivial()};
  std::vector<Character> psi;
  powers.reserve(n + 1);
  for (long k = 1; k <= n; ++k) {
    psi.push_back(adams(x, k));
    Character acc;
    for (long i = 1; i <= k; ++i) {
      Character term = tensor(psi[i - 1], powers[k - i]);
      if (alternating && i % 2 == 0)
        acc -= term;
      else
        acc += term;
    }
    Character next;
    for (const auto& [w, m] : acc.terms()) {
      if (m % k != 0)
        throw InvariantViolation(std::string(name) + ": non-integral multiplicity at degree " +
                                 std::to_string(k));
      next.add(w, m / k);
    }
    if (!next.is_genuine())
      throw InvariantViolation(std::string(name) + ": negative multiplicity at degree " +
                               std::to_string(k));
    powers.push_back(std::move(next));
  }
  return std::move(powers.back());
}

}  // namespace detail

/// Character of S^n(V); zero for n < 0.
inline Character sym_power(const Character& x, long n) {
  return detail::newton_power(x, n, false, "sym_power");
}

/// Character of Lambda^n(V); zero for n < 0.
inline Character ext_power(const Character& x, long n) {
  return detail::newton_power(x, n, true, "ext_power");
}

/// Signed combination of Schur characters.
class SchurDecomposition {
public:
  using Parts = std::map<Partition, Int>;

  SchurDecomposition() = default;
  explicit SchurDecomposition(Parts parts) {
    for (auto& [p, m] : parts) add(p, m);
  }

  void add(const Partition& p, const Int& m) {
    if (m == 0) return;
    auto [it, inserted] = parts_.try_emplace(p, m);
    if (!inserted) {
      it->second += m;
      if (it->second == 0) parts_.erase(it);
    }
  }

  const Parts& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  Int coefficient(const Partition& p) const {
    auto it = parts_.find(p);
    return it == parts_.end() ? Int(0) : it->second;
  }

  /// True when some coefficient is negative.
  bool is_virtual() const {
    for (const auto& [p, m] : parts_)
      if (m < 0) return true;
    return false;
  }

  Int dim() const {
    Int d = 0;
    for (const auto& [p, m] : parts_) d += m * weyl_dim(p);
    return d;
  }

  Character recompose() const {
    Character c;
    for (const auto& [p, m] : parts_) c += m * schur_char(p);
    return c;
  }

  SchurDecomposition& operator+=(const SchurDecomposition& o) {
    for (const auto& [p, m] : o.parts_) add(p, m);
    return *this;
  }
  SchurDecomposition& operator-=(const SchurDecomposition& o) {
    for (const auto& [p, m] : o.parts_) add(p, -m);
    return *this;
  }
  friend SchurDecomposition operator-(SchurDecomposition x, const SchurDecomposition& y) {
    return x -= y;
  }
  friend bool operator==(const SchurDecomposition&, const SchurDecomposition&) = default;

  friend std::ostream& operator<<(std::ostream& os, const SchurDecomposition& d) {
    os << '{';
    bool first = true;
    for (auto it = d.parts_.rbegin(); it != d.parts_.rend(); ++it) {
      os << (first ? "" : ", ") << it->first << ':' << it->second;
      first = false;
    }
    return os << '}';
  }

private:
  Parts parts_;
};

/// Expresses a symmetric character in the Schur basis by repeatedly removing
/// the graded-lex leading weight.
inline SchurDecomposition decompose(Character x) {
  if (!x.is_symmetric()) throw DomainError("decompose: character is not S3-symmetric");
  SchurDecomposition out;
  while (!x.empty()) {
    const auto& [lead, m] = *x.terms().rbegin();
    if (!lead.dominant())
      throw InvariantViolation("decompose: leading weight is not dominant");
    const Partition p(lead.e[0], lead.e[1], lead.e[2]);
    const Int coeff = m;
    out.add(p, coeff);
    x -= coeff * schur_char(p);
  }
  return out;
}

}  // namespace sdual::rep3
