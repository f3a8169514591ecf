#pragma once

#include <map>

#include "kflag/bott_samelson.hpp"

namespace kflag {

/// Applies a Weyl group element to every exponent.
LaurentPoly weyl_apply(const WeylElement& w, const LaurentPoly& p);
RationalChar weyl_apply(const WeylElement& w, const RationalChar& c);

/// Coefficient of the structure sheaf basis on the fixed-point basis,
/// computed from a word for v by the subword sum
///   b^v = sum over subsets with product 1 of
///         prod_{alpha > 0} (1 - e^{-alpha}) / prod_i (1 - e^{-beta_i}),
/// where beta_i = alpha_at(word, eps, i) runs over every position. The sum
/// collapses to a Laurent polynomial; the division is exact by construction.
/// Works for non-reduced words as well. Finite type only.
LaurentPoly b_coeff(const RootSystem& rs, const Word& v_word);

/// Coefficient of psi^v in the expansion of sigma^w, via
/// a^w_v = b^{v * w^{-1}} with * the Demazure product.
LaurentPoly a_coeff(const RootSystem& rs, const WeylElement& w, const WeylElement& v);

/// Independent expansion of sigma^w over the psi basis by back substitution
/// along the length order: coefficients are peeled off at each v using the
/// triangularity of psi. Returns a total map over the group; entries are
/// zero polynomials where psi^v does not contribute.
std::map<WeylElement, LaurentPoly> expand_sigma(const RootSystem& rs, const WeylElement& w);

/// Element of the twisted group algebra over rational characters: a finite
/// sum of terms c * delta_w with multiplication
/// (c delta_w)(d delta_v) = c * w(d) delta_{wv}.
class QWElement {
 public:
  QWElement() = default;

  static QWElement unit(const RootSystem& rs);
  static QWElement basis(const WeylElement& w, RationalChar c);

  const std::map<WeylElement, RationalChar>& coeffs() const { return coeffs_; }
  /// Coefficient of delta_w, zero when absent.
  RationalChar coeff(int rank, const WeylElement& w) const;

  void add_term(const WeylElement& w, const RationalChar& c);

 private:
  std::map<WeylElement, RationalChar> coeffs_;
};

QWElement qw_mul(const RootSystem& rs, const QWElement& a, const QWElement& b);

/// y_i = (delta_1 - e^{-alpha_i} delta_{r_i}) / (1 - e^{-alpha_i}).
QWElement y_generator(const RootSystem& rs, int i);

/// Product of the y_i along the canonical word of w; the result does not
/// depend on the choice of reduced word.
QWElement y_element(const RootSystem& rs, const WeylElement& w);

}  // namespace kflag
