#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "burau/rational.hpp"

namespace burau {

/// Thrown when two operands live over different coefficient rings.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class RingKind { Integers, Rationals, IntegersMod };

/// Coefficient ring of the Laurent polynomials: Z, Q or Z/pZ.
///
/// Z/pZ accepts composite p. Nothing in this library divides by a
/// coefficient outside of Q, so non-field quotients are safe.
class CoefficientRing {
 public:
  static CoefficientRing integers() { return CoefficientRing(RingKind::Integers, 0); }
  static CoefficientRing rationals() { return CoefficientRing(RingKind::Rationals, 0); }
  static CoefficientRing integers_mod(std::int64_t p);

  CoefficientRing() = default;

  RingKind kind() const { return kind_; }
  std::int64_t modulus() const { return modulus_; }

  /// Canonical representative of `value` in this ring (0..p-1 mod p).
  /// Throws std::domain_error for a non-integer outside Q.
  Rational reduce(const Rational& value) const;

  /// "Z", "Q" or "Z/7Z".
  std::string name() const;
  static CoefficientRing parse(std::string_view name);

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  CoefficientRing(RingKind kind, std::int64_t modulus) : kind_(kind), modulus_(modulus) {}

  RingKind kind_ = RingKind::Integers;
  std::int64_t modulus_ = 0;
};

/// Laurent polynomial in q with coefficients in a CoefficientRing.
///
/// Terms are kept sorted by exponent, with no zero coefficients and every
/// coefficient reduced into the ring, so equality is structural.
class LaurentPoly {
 public:
  using Term = std::pair<int, Rational>;

  explicit LaurentPoly(CoefficientRing ring = CoefficientRing::integers()) : ring_(ring) {}

  static LaurentPoly constant(CoefficientRing ring, const Rational& c);
  static LaurentPoly monomial(CoefficientRing ring, const Rational& c, int exponent);
  /// Builds from (exponent, coefficient) pairs in any order; repeats are summed.
  static LaurentPoly from_terms(CoefficientRing ring, std::vector<Term> terms);

  const CoefficientRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int exponent) const;

  /// (coefficient, exponent) when this is a single term.
  std::optional<std::pair<Rational, int>> as_monomial() const;
  /// (min exponent, max exponent); empty for the zero polynomial.
  std::optional<std::pair<int, int>> degree_span() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Multiplication by q^k.
  LaurentPoly shifted(int k) const;
  /// Scalar multiple.
  LaurentPoly scaled(const Rational& c) const;
  /// The substitution q -> q^{-1}.
  LaurentPoly bar() const;

  /// Substitutes q := q0. q0 must be invertible in the ring when negative
  /// exponents occur.
  Rational evaluate(const Rational& q0) const;

  /// Coefficientwise reduction of an integer polynomial into Z/pZ.
  LaurentPoly reduce_mod(std::int64_t p) const;

  /// Descending-exponent rendering, e.g. "-q^2 + 1" or "3/2*q^-1".
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text, CoefficientRing ring);

 private:
  void require_same_ring(const LaurentPoly& other) const;
  void canonicalize();

  CoefficientRing ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace burau
