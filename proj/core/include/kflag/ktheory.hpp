#pragma once

#include <map>
#include <string>
#include <vector>

#include "kflag/hecke.hpp"

namespace kflag {

/// A function from Weyl group elements to characters, the localization model
/// of an equivariant K-theory class. Stored totally on a finite set of
/// elements; lookups of missing elements are errors rather than zeros.
struct FixedPointFn {
  std::map<WeylElement, LaurentPoly> values;

  const LaurentPoly& at(const WeylElement& w) const;
  bool operator==(const FixedPointFn&) const = default;
};

/// psi^w evaluated through the subword expansion: e^{rho_shift(word)} times
/// the coefficient of u_w in r_element(word). The word may be any word, over
/// any generalized Cartan matrix; when it is a reduced word of v this is the
/// value of the w-th fixed-point basis element at v.
LaurentPoly psi(const RootSystem& rs, const WeylElement& w, const Word& word);

/// psi'^w(v) = star(psi^{w^{-1}}(v^{-1})), the opposite-convention basis.
LaurentPoly psi_prime(const RootSystem& rs, const WeylElement& w, const WeylElement& v);

/// psi^w as a total function on the Weyl group. Finite type only.
FixedPointFn psi_fn(const RootSystem& rs, const WeylElement& w);

/// Every psi^w at once; one subword expansion per group element. Finite type.
std::map<WeylElement, FixedPointFn> all_psi_fns(const RootSystem& rs);

/// Demazure operator at i: (D_i f)(v) = (f(v) - e^{-v(alpha_i)} f(v r_i))
/// divided exactly by (1 - e^{-v(alpha_i)}). The division failing means f is
/// not in the image of K-theory; the not_divisible_error propagates.
FixedPointFn demazure(const RootSystem& rs, int i, const FixedPointFn& f);

/// Product of (1 - e^{-alpha}) over the positive roots. Finite type only.
LaurentPoly weyl_denominator(const RootSystem& rs);

/// Structure sheaf classes: sigma^1(v) vanishes away from the identity and
/// is weyl_denominator at it; sigma^w folds Demazure operators along the
/// canonical word of w.
FixedPointFn sigma(const RootSystem& rs, const WeylElement& w);

/// Cohomological analogue of psi via the nil graded limit: the coefficient
/// of u_w in nil_r_element(word). The word must be reduced.
Poly xi(const RootSystem& rs, const WeylElement& w, const Word& word);

struct AxiomReport {
  bool passed = true;
  long checks = 0;
  std::vector<std::string> violations;

  void record(bool ok, const std::string& label);
};

/// Exhaustively checks the defining properties of the psi basis over the
/// whole Weyl group: support on Bruhat intervals, diagonal normalization,
/// the Demazure recursion, and the value of psi at the identity element.
AxiomReport verify_psi_axioms(const RootSystem& rs);

/// exp(lambda) as a polynomial in the simple roots, truncated above total
/// degree max_deg. lambda must lie in the root lattice.
PolyQ exp_truncated(const RootSystem& rs, const Weight& lambda, std::int64_t max_deg);

/// Applies exp_truncated to every term of a character and sums.
PolyQ low_degree_expansion(const RootSystem& rs, const LaurentPoly& p, std::int64_t max_deg);

}  // namespace kflag
