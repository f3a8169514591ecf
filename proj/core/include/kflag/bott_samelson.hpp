#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kflag/ktheory.hpp"

namespace kflag {

/// A vertex of the {0,1}-cube indexing the torus fixed points of the
/// desingularized space attached to a word: bit i-1 says whether position i
/// of the word is selected. Ordered lexicographically; leq() is the
/// componentwise (subword) order.
struct Epsilon {
  std::vector<std::uint8_t> bits;

  Epsilon() = default;
  explicit Epsilon(std::vector<std::uint8_t> b);
  static Epsilon zeros(int n) { return Epsilon(std::vector<std::uint8_t>(n, 0)); }
  static Epsilon ones(int n) { return Epsilon(std::vector<std::uint8_t>(n, 1)); }

  int size() const { return static_cast<int>(bits.size()); }
  bool at(int i) const { return bits[i - 1] != 0; }  // 1-based
  int count() const;
  bool leq(const Epsilon& o) const;
  std::vector<int> positions() const;  // selected positions, increasing
  std::string to_string() const;       // "01101"

  friend auto operator<=>(const Epsilon&, const Epsilon&) = default;
};

/// All 2^n vertices in lexicographic order.
std::vector<Epsilon> all_epsilons(int n);

/// A function on cube vertices with character values, the localization model
/// of a class on the desingularized space.
struct BSFn {
  std::map<Epsilon, LaurentPoly> values;

  const LaurentPoly& at(const Epsilon& eps) const;
  bool operator==(const BSFn&) const = default;
};

/// Product of the reflections at the selected positions k <= i, in word
/// order. Note the position i itself participates when selected.
WeylElement v_partial(const RootSystem& rs, const Word& word, const Epsilon& eps, int i);

/// alpha_i(eps) = v_i(eps) applied to the simple root of the letter at
/// position i.
Weight alpha_at(const RootSystem& rs, const Word& word, const Epsilon& eps, int i);

/// Image of the vertex in the flag variety: the product over all selected
/// positions.
WeylElement bs_product(const RootSystem& rs, const Word& word, const Epsilon& eps);

/// Demazure product of the letters at the selected positions.
WeylElement bs_demazure_product(const RootSystem& rs, const Word& word, const Epsilon& eps);

/// The fixed-point basis of the desingularized space:
/// mu_eps(eps') = prod_{i selected in eps'} e^{alpha_i(eps')} *
///                prod_{i selected in eps} (e^{-alpha_i(eps')} - 1)
/// when eps <= eps', and zero otherwise.
LaurentPoly mu(const RootSystem& rs, const Word& word, const Epsilon& eps,
               const Epsilon& eps_prime);

/// Euler characteristic of f over the closed subvariety at eps, by
/// localization: sum over eps' <= eps of f(eps') divided by
/// prod_{i selected in eps} (1 - e^{alpha_i(eps')}). The common denominator
/// is the multiset least common multiple of the per-vertex factor multisets,
/// which keeps the unreduced fraction small.
RationalChar euler_char(const RootSystem& rs, const Word& word, const Epsilon& eps, const BSFn& f);

/// Pullback of a flag-variety class through the resolution: value at eps is
/// the value of f at bs_product(word, eps).
BSFn pullback(const RootSystem& rs, const Word& word, const FixedPointFn& f);

/// The duality instance used everywhere downstream: the Euler characteristic
/// over the vertex eps of star(pullback(psi^w)) equals 1 when the Demazure
/// product at eps is w and 0 otherwise. Returns whether that holds.
bool euler_delta_check(const RootSystem& rs, const Word& word, const WeylElement& w,
                       const Epsilon& eps);

/// Reconstructs the pullback of psi^w at eps' as the sum of star(mu_eps)
/// over the vertices whose Demazure product is w.
LaurentPoly psi_from_mu(const RootSystem& rs, const Word& word, const WeylElement& w,
                        const Epsilon& eps_prime);

}  // namespace kflag
