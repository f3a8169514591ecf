#include "kflag/basis_change.hpp"

#include <algorithm>

namespace kflag {

LaurentPoly weyl_apply(const WeylElement& w, const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term(w.apply(e), c);
  return out;
}

RationalChar weyl_apply(const WeylElement& w, const RationalChar& c) {
  return RationalChar(weyl_apply(w, c.num), weyl_apply(w, c.den));
}

LaurentPoly b_coeff(const RootSystem& rs, const Word& v_word) {
  check_word(rs, v_word);
  const int n = static_cast<int>(v_word.size());
  const LaurentPoly numerator = weyl_denominator(rs);
  const WeylElement id = identity_element(rs);

  // Factor multisets of the surviving subword terms, and their multiset lcm.
  std::vector<std::map<Weight, int>> terms;
  std::map<Weight, int> lcm;
  for (const Epsilon& eps : all_epsilons(n)) {
    if (!(bs_product(rs, v_word, eps) == id)) continue;
    std::map<Weight, int> factors;
    for (int i = 1; i <= n; ++i) ++factors[-alpha_at(rs, v_word, eps, i)];
    for (const auto& [gamma, mult] : factors) {
      auto [it, inserted] = lcm.emplace(gamma, mult);
      if (!inserted) it->second = std::max(it->second, mult);
    }
    terms.push_back(std::move(factors));
  }

  LaurentPoly den = LaurentPoly::one(rs.rank());
  for (const auto& [gamma, mult] : lcm) {
    LaurentPoly factor = LaurentPoly::one(rs.rank()) - LaurentPoly::monomial(gamma);
    for (int k = 0; k < mult; ++k) den *= factor;
  }
  LaurentPoly num;
  for (const auto& factors : terms) {
    LaurentPoly cofactor = LaurentPoly::one(rs.rank());
    for (const auto& [gamma, mult] : lcm) {
      auto it = factors.find(gamma);
      int missing = mult - (it == factors.end() ? 0 : it->second);
      LaurentPoly factor = LaurentPoly::one(rs.rank()) - LaurentPoly::monomial(gamma);
      for (int k = 0; k < missing; ++k) cofactor *= factor;
    }
    num += cofactor;
  }
  return exact_div(numerator * num, den);
}

LaurentPoly a_coeff(const RootSystem& rs, const WeylElement& w, const WeylElement& v) {
  WeylElement target = hecke_product(rs, v, inverse(rs, w));
  return b_coeff(rs, target.canonical_word());
}

std::map<WeylElement, LaurentPoly> expand_sigma(const RootSystem& rs, const WeylElement& w) {
  const std::vector<WeylElement> elements = all_elements(rs);
  const auto psis = all_psi_fns(rs);
  const FixedPointFn target = sigma(rs, w);

  std::map<WeylElement, LaurentPoly> coeffs;
  for (const WeylElement& v : elements) {
    // Elements are length-sorted, so every u < v in Bruhat order is done.
    LaurentPoly residue = target.at(v);
    for (const auto& [u, c] : coeffs) residue -= c * psis.at(u).at(v);
    coeffs.emplace(v, exact_div(residue, psis.at(v).at(v)));
  }
  return coeffs;
}

QWElement QWElement::unit(const RootSystem& rs) {
  return basis(identity_element(rs), frac_from_poly(rs.rank(), LaurentPoly::one(rs.rank())));
}

QWElement QWElement::basis(const WeylElement& w, RationalChar c) {
  QWElement out;
  out.add_term(w, c);
  return out;
}

RationalChar QWElement::coeff(int rank, const WeylElement& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? frac_from_poly(rank, LaurentPoly::zero()) : it->second;
}

void QWElement::add_term(const WeylElement& w, const RationalChar& c) {
  if (c.is_zero()) return;
  auto it = coeffs_.find(w);
  if (it == coeffs_.end()) {
    coeffs_.emplace(w, c);
    return;
  }
  it->second = frac_add(it->second, c);
  if (it->second.is_zero()) coeffs_.erase(it);
}

QWElement qw_mul(const RootSystem& rs, const QWElement& a, const QWElement& b) {
  QWElement out;
  for (const auto& [w, c] : a.coeffs())
    for (const auto& [v, d] : b.coeffs())
      out.add_term(mul(rs, w, v), frac_mul(c, weyl_apply(w, d)));
  return out;
}

QWElement y_generator(const RootSystem& rs, int i) {
  LaurentPoly x = LaurentPoly::monomial(-rs.simple_root(i));
  LaurentPoly den = LaurentPoly::one(rs.rank()) - x;
  QWElement out;
  out.add_term(identity_element(rs), RationalChar(LaurentPoly::one(rs.rank()), den));
  out.add_term(simple_reflection(rs, i), RationalChar(-x, den));
  return out;
}

QWElement y_element(const RootSystem& rs, const WeylElement& w) {
  QWElement acc = QWElement::unit(rs);
  for (int letter : w.canonical_word()) acc = qw_mul(rs, acc, y_generator(rs, letter));
  return acc;
}

}  // namespace kflag
