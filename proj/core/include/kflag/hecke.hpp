#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "kflag/characters.hpp"
#include "kflag/weyl.hpp"

namespace kflag {

/// Sparse polynomial in the simple roots with coefficients C, exponents
/// stored as non-negative multidegrees. Used for the nil graded limit and
/// for truncated exponential expansions.
template <class C>
class PolyT {
 public:
  using Exponent = std::vector<std::int64_t>;

  PolyT() = default;

  static PolyT constant(int rank, C c) {
    PolyT p;
    if (!(c == C(0))) p.terms_.emplace(Exponent(rank, 0), std::move(c));
    return p;
  }
  static PolyT one(int rank) { return constant(rank, C(1)); }
  static PolyT monomial(Exponent e, C c) {
    PolyT p;
    if (!(c == C(0))) p.terms_.emplace(std::move(e), std::move(c));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, C>& terms() const { return terms_; }
  C coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(const Exponent& e, const C& c) {
    if (c == C(0)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == C(0)) terms_.erase(it);
    }
  }

  PolyT& operator+=(const PolyT& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  PolyT& operator-=(const PolyT& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, C(0) - c);
    return *this;
  }
  PolyT& operator*=(const PolyT& o) {
    PolyT out;
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        Exponent e(e1);
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
        out.add_term(e, c1 * c2);
      }
    terms_ = std::move(out.terms_);
    return *this;
  }
  PolyT& operator*=(const C& c) {
    if (c == C(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
  }
  friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
  friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
  friend PolyT operator*(PolyT a, const PolyT& b) { return a *= b; }
  friend PolyT operator*(PolyT a, const C& c) { return a *= c; }
  PolyT operator-() const {
    PolyT out(*this);
    for (auto& [e, c] : out.terms_) c = C(0) - c;
    return out;
  }

  /// Terms whose total degree is exactly d.
  PolyT homogeneous_component(std::int64_t d) const {
    PolyT out;
    for (const auto& [e, c] : terms_) {
      std::int64_t total = 0;
      for (auto x : e) total += x;
      if (total == d) out.terms_.emplace(e, c);
    }
    return out;
  }

  /// Drops terms of total degree greater than d.
  PolyT truncate(std::int64_t d) const {
    PolyT out;
    for (const auto& [e, c] : terms_) {
      std::int64_t total = 0;
      for (auto x : e) total += x;
      if (total <= d) out.terms_.emplace(e, c);
    }
    return out;
  }

  bool operator==(const PolyT&) const = default;

 private:
  std::map<Exponent, C> terms_;
};

using Poly = PolyT<Int>;
using PolyQ = PolyT<Rational>;

/// A weight in the root lattice as a degree-one polynomial in the simple
/// roots. Throws unsupported_error when the weight has non-integral
/// simple-root coordinates.
Poly linear_form(const RootSystem& rs, const Weight& w);

/// Element of the 0-Hecke algebra over the character ring: a finite sum of
/// terms (Laurent polynomial) * u_w, where u_w u_v = u_{w * v} under the
/// Demazure product and scalars are central.
class HeckeElement {
 public:
  HeckeElement() = default;  // zero

  static HeckeElement unit(const RootSystem& rs);
  static HeckeElement basis(const WeylElement& w, LaurentPoly c);

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<WeylElement, LaurentPoly>& coeffs() const { return coeffs_; }
  LaurentPoly coeff(const WeylElement& w) const;

  void add_term(const WeylElement& w, const LaurentPoly& c);
  HeckeElement& operator+=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }

  bool operator==(const HeckeElement&) const = default;

 private:
  std::map<WeylElement, LaurentPoly> coeffs_;
};

HeckeElement hecke_mul(const RootSystem& rs, const HeckeElement& a, const HeckeElement& b);

/// h_i(x) = 1 + (x - 1) u_i.
HeckeElement h_factor(const RootSystem& rs, int i, const LaurentPoly& x);

/// R(word) = product over positions j of h_{i_j}(e^{-beta_j}). Defined for
/// every word, reduced or not, over any generalized Cartan matrix.
HeckeElement r_element(const RootSystem& rs, const Word& word);

/// Order of r_i r_j read off the Cartan matrix: 2, 3, 4, 6, or 0 when the
/// product has infinite order.
int braid_order(const RootSystem& rs, int i, int j);

/// Checks the defining exchange relation for the pair (i, j) at scalar
/// arguments x, y; for the order-3 case this is
/// h_i(x) h_j(xy) h_i(y) = h_j(y) h_i(xy) h_j(x), with the published
/// analogues for orders 2, 4 and 6. Throws unsupported_error when r_i r_j
/// has infinite order.
bool exchange_relation_holds(const RootSystem& rs, int i, int j, const LaurentPoly& x,
                             const LaurentPoly& y);

/// Element of the nil graded limit: coefficients are polynomials in the
/// simple roots and u_w u_v is u_{wv} when lengths add, zero otherwise.
class NilCoxeterElement {
 public:
  NilCoxeterElement() = default;

  static NilCoxeterElement unit(const RootSystem& rs);
  static NilCoxeterElement basis(const WeylElement& w, Poly c);

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<WeylElement, Poly>& coeffs() const { return coeffs_; }
  Poly coeff(const WeylElement& w) const;

  void add_term(const WeylElement& w, const Poly& c);
  NilCoxeterElement& operator+=(const NilCoxeterElement& o);

  bool operator==(const NilCoxeterElement&) const = default;

 private:
  std::map<WeylElement, Poly> coeffs_;
};

NilCoxeterElement nil_mul(const RootSystem& rs, const NilCoxeterElement& a,
                          const NilCoxeterElement& b);

/// Product over positions j of (1 + beta_j u_{i_j}).
NilCoxeterElement nil_r_element(const RootSystem& rs, const Word& word);

}  // namespace kflag
