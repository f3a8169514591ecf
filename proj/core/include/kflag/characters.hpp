#pragma once

#include <map>
#include <optional>
#include <string>

#include "kflag/numbers.hpp"
#include "kflag/root_system.hpp"

namespace kflag {

/// Element of the group ring of the weight lattice: a finite sum of terms
/// c * e^{lambda} with exact integer coefficients, stored sparsely and keyed
/// by exponent in lexicographic order. The zero polynomial has no terms.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly constant(int rank, Int c);
  static LaurentPoly one(int rank) { return constant(rank, 1); }
  static LaurentPoly monomial(const Weight& exponent, Int coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Weight, Int>& terms() const { return terms_; }
  Int coeff(const Weight& exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Int& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Int& c) { return a *= c; }
  LaurentPoly operator-() const;

  /// The involution sending e^{lambda} to e^{-lambda}.
  LaurentPoly star() const;

  void add_term(const Weight& exponent, const Int& coeff);

  bool operator==(const LaurentPoly&) const = default;

 private:
  std::map<Weight, Int> terms_;
};

/// Thrown when an exact quotient was required but does not exist. Carries the
/// remainder state at the point the division got stuck.
class not_divisible_error : public std::runtime_error {
 public:
  not_divisible_error(std::string what, LaurentPoly remainder)
      : std::runtime_error(std::move(what)), remainder_(std::move(remainder)) {}
  const LaurentPoly& remainder() const { return remainder_; }

 private:
  LaurentPoly remainder_;
};

/// Exact quotient p / q in the Laurent polynomial ring. Cancels leading terms
/// in lexicographic order; candidate quotient exponents are confined to the
/// componentwise difference of the Newton polytope bounding boxes of p and q,
/// which makes failure (non-divisibility) detectable after finitely many
/// steps. Throws not_divisible_error when q does not divide p, and
/// validation_error when q is zero.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& p, const LaurentPoly& q);

/// A formal quotient of Laurent polynomials, kept unreduced. Localization
/// produces these; equality is decided by cross multiplication.
struct RationalChar {
  LaurentPoly num;
  LaurentPoly den;

  RationalChar(LaurentPoly n, LaurentPoly d);
  bool is_zero() const { return num.is_zero(); }
};

RationalChar frac_from_poly(int rank, LaurentPoly p);
RationalChar frac_add(const RationalChar& a, const RationalChar& b);
RationalChar frac_sub(const RationalChar& a, const RationalChar& b);
RationalChar frac_mul(const RationalChar& a, const RationalChar& b);
RationalChar frac_neg(const RationalChar& a);
RationalChar frac_star(const RationalChar& a);
bool frac_eq(const RationalChar& a, const RationalChar& b);
/// Clears the denominator; throws not_divisible_error when the quotient is
/// not a Laurent polynomial.
LaurentPoly frac_to_poly(const RationalChar& a);

}  // namespace kflag
