#pragma once

// Grothendieck ring of the projective plane, K(P2) = Z[eta]/(eta^3).
//
// A class is stored by its (rank, c1, chi) triple. Internally products are
// taken in the basis [O], eta = [O_line], eta^2 = [O_point], where each basis
// element has Euler characteristic 1.

#include "sdual/integer.hpp"

#include <ostream>

namespace sdual::kring {

/// Coordinates of a class in the basis [O], eta, eta^2.
struct BasisCoords {
  Int a;  // [O]
  Int b;  // eta
  Int c;  // eta^2

  friend bool operator==(const BasisCoords&, const BasisCoords&) = default;
};

/// An element of K(P2) as (rank, c1, chi).
struct KClass {
  Int rank;
  Int c1;
  Int chi;

  friend bool operator==(const KClass&, const KClass&) = default;

  friend KClass operator+(const KClass& x, const KClass& y) {
    return {x.rank + y.rank, x.c1 + y.c1, x.chi + y.chi};
  }
  friend KClass operator-(const KClass& x, const KClass& y) {
    return {x.rank - y.rank, x.c1 - y.c1, x.chi - y.chi};
  }
  friend KClass operator-(const KClass& x) { return {-x.rank, -x.c1, -x.chi}; }
  friend KClass operator*(const Int& s, const KClass& x) {
    return {s * x.rank, s * x.c1, s * x.chi};
  }

  friend std::ostream& operator<<(std::ostream& os, const KClass& x) {
    return os << '(' << x.rank << ',' << x.c1 << ',' << x.chi << ')';
  }
};

/// Rank, first and second Chern class.
struct ChernData {
  Int rank;
  Int c1;
  Int c2;

  friend bool operator==(const ChernData&, const ChernData&) = default;
};

/// [O], the ring unit.
inline KClass unit() { return {1, 0, 1}; }
/// eta = [O_line].
inline KClass eta() { return {0, 1, 1}; }
/// eta^2 = [O_point].
inline KClass point() { return {0, 0, 1}; }

inline BasisCoords to_basis(const KClass& x) { return {x.rank, x.c1, x.chi - x.rank - x.c1}; }

inline KClass from_basis(const BasisCoords& v) { return {v.a, v.b, v.a + v.b + v.c}; }

/// Ring product, truncated at eta^3.
inline KClass mul(const KClass& x, const KClass& y) {
  const BasisCoords p = to_basis(x);
  const BasisCoords q = to_basis(y);
  return from_basis({p.a * q.a, p.a * q.b + q.a * p.b, p.a * q.c + q.a * p.c + p.b * q.b});
}

/// Class of the dual bundle: (r, -c1, chi - 3 c1).
inline KClass dual(const KClass& x) { return {x.rank, -x.c1, x.chi - 3 * x.c1}; }

/// Euler characteristic of a class; each basis element contributes 1.
inline Int chi(const KClass& x) { return x.chi; }

/// <x, y> = chi(x . y).
inline Int euler_pair(const KClass& x, const KClass& y) { return chi(mul(x, y)); }

struct OrthGenerator {
  KClass u;   // generator of the classes orthogonal to c with positive c1
  Int delta;  // gcd(rank, c1)
};

/// The primitive class u = (0, r/delta, -c1/delta) with <c, u> = 0.
inline OrthGenerator orth_generator(const KClass& c) {
  if (c.rank <= 0)
    throw DomainError("orth_generator: rank must be positive, got " + c.rank.str());
  Int delta = gcd(c.rank, c.c1);
  return {KClass{0, c.rank / delta, -c.c1 / delta}, delta};
}

/// Expected dimension of the moduli space of sheaves of class c: 1 - <c*, c>.
inline Int moduli_dim(const KClass& c) { return 1 - euler_pair(dual(c), c); }

/// Riemann-Roch on the plane: chi = r + (c1^2 + 3 c1)/2 - c2.
inline KClass chern_to_chi(const ChernData& d) {
  return {d.rank, d.c1, d.rank + (d.c1 * d.c1 + 3 * d.c1) / 2 - d.c2};
}

/// Inverse of chern_to_chi; c1^2 + 3 c1 is always even so c2 is integral.
inline ChernData chi_to_chern(const KClass& c) {
  return {c.rank, c.c1, (c.c1 * c.c1 + 3 * c.c1) / 2 + c.rank - c.chi};
}

}  // namespace sdual::kring
