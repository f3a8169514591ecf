#include "kflag/hecke.hpp"

#include <sstream>

namespace kflag {

namespace {

WeylElement mul_gen(const RootSystem& rs, const WeylElement& w, int i) {
  detail::ElemCore c = w.core();
  c.mult_right(rs, i);
  return finalize_element(rs, std::move(c));
}

}  // namespace

Poly linear_form(const RootSystem& rs, const Weight& w) {
  RootCoords rc = rs.to_root_coords(w);
  if (!rc.integral) {
    std::ostringstream os;
    os << "weight is not in the root lattice";
    throw unsupported_error(os.str());
  }
  Poly out;
  for (int k = 0; k < rs.rank(); ++k) {
    if (rc.coords[k] == 0) continue;
    Poly::Exponent e(rs.rank(), 0);
    e[k] = 1;
    out.add_term(e, Int(numerator(rc.coords[k])));
  }
  return out;
}

HeckeElement HeckeElement::unit(const RootSystem& rs) {
  return basis(identity_element(rs), LaurentPoly::one(rs.rank()));
}

HeckeElement HeckeElement::basis(const WeylElement& w, LaurentPoly c) {
  HeckeElement out;
  out.add_term(w, c);
  return out;
}

LaurentPoly HeckeElement::coeff(const WeylElement& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? LaurentPoly::zero() : it->second;
}

void HeckeElement::add_term(const WeylElement& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [w, c] : o.coeffs_) add_term(w, c);
  return *this;
}

HeckeElement hecke_mul(const RootSystem& rs, const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out;
  for (const auto& [w, p] : a.coeffs())
    for (const auto& [v, q] : b.coeffs()) out.add_term(hecke_product(rs, w, v), p * q);
  return out;
}

HeckeElement h_factor(const RootSystem& rs, int i, const LaurentPoly& x) {
  HeckeElement out = HeckeElement::unit(rs);
  out.add_term(simple_reflection(rs, i), x - LaurentPoly::one(rs.rank()));
  return out;
}

HeckeElement r_element(const RootSystem& rs, const Word& word) {
  check_word(rs, word);
  const std::vector<Weight> betas = beta_sequence(rs, word);
  HeckeElement acc = HeckeElement::unit(rs);
  for (std::size_t j = 0; j < word.size(); ++j) {
    // Multiply by h_i(x) = 1 + (x - 1) u_i on the right, term by term.
    const LaurentPoly xm1 =
        LaurentPoly::monomial(-betas[j]) - LaurentPoly::one(rs.rank());
    HeckeElement next = acc;
    for (const auto& [w, p] : acc.coeffs()) {
      WeylElement target = w.core().right_ascent(word[j]) ? mul_gen(rs, w, word[j]) : w;
      next.add_term(target, p * xm1);
    }
    acc = std::move(next);
  }
  return acc;
}

int braid_order(const RootSystem& rs, int i, int j) {
  if (i < 1 || i > rs.rank() || j < 1 || j > rs.rank() || i == j)
    throw validation_error("braid order requires two distinct generator indices");
  switch (rs.cartan().at(i, j) * rs.cartan().at(j, i)) {
    case 0:
      return 2;
    case 1:
      return 3;
    case 2:
      return 4;
    case 3:
      return 6;
    default:
      return 0;
  }
}

bool exchange_relation_holds(const RootSystem& rs, int i, int j, const LaurentPoly& x,
                             const LaurentPoly& y) {
  const int m = braid_order(rs, i, j);
  auto chain = [&rs](std::initializer_list<std::pair<int, LaurentPoly>> factors) {
    HeckeElement acc = HeckeElement::unit(rs);
    for (const auto& [gen, arg] : factors) acc = hecke_mul(rs, acc, h_factor(rs, gen, arg));
    return acc;
  };
  switch (m) {
    case 2:
      return chain({{i, x}, {j, y}}) == chain({{j, y}, {i, x}});
    case 3:
      return chain({{i, x}, {j, x * y}, {i, y}}) == chain({{j, y}, {i, x * y}, {j, x}});
    case 4: {
      LaurentPoly xy = x * y, xyy = x * y * y;
      return chain({{i, x}, {j, xy}, {i, xyy}, {j, y}}) ==
             chain({{j, y}, {i, xyy}, {j, xy}, {i, x}});
    }
    case 6: {
      LaurentPoly xy = x * y, x2y = x * x * y, x3y = x * x * x * y, x3y2 = x * x * x * y * y;
      return chain({{i, x}, {j, x3y}, {i, x2y}, {j, x3y2}, {i, xy}, {j, y}}) ==
             chain({{j, y}, {i, xy}, {j, x3y2}, {i, x2y}, {j, x3y}, {i, x}});
    }
    default:
      throw unsupported_error("no exchange relation: the braid order of the pair is infinite");
  }
}

NilCoxeterElement NilCoxeterElement::unit(const RootSystem& rs) {
  return basis(identity_element(rs), Poly::one(rs.rank()));
}

NilCoxeterElement NilCoxeterElement::basis(const WeylElement& w, Poly c) {
  NilCoxeterElement out;
  out.add_term(w, c);
  return out;
}

Poly NilCoxeterElement::coeff(const WeylElement& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Poly() : it->second;
}

void NilCoxeterElement::add_term(const WeylElement& w, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

NilCoxeterElement& NilCoxeterElement::operator+=(const NilCoxeterElement& o) {
  for (const auto& [w, c] : o.coeffs_) add_term(w, c);
  return *this;
}

NilCoxeterElement nil_mul(const RootSystem& rs, const NilCoxeterElement& a,
                          const NilCoxeterElement& b) {
  NilCoxeterElement out;
  for (const auto& [w, p] : a.coeffs())
    for (const auto& [v, q] : b.coeffs()) {
      WeylElement wv = mul(rs, w, v);
      if (wv.length() == w.length() + v.length()) out.add_term(wv, p * q);
    }
  return out;
}

NilCoxeterElement nil_r_element(const RootSystem& rs, const Word& word) {
  check_word(rs, word);
  NilCoxeterElement acc = NilCoxeterElement::unit(rs);
  detail::ElemCore prefix = detail::ElemCore::identity(rs.rank());
  for (int letter : word) {
    // Column `letter` of the prefix action matrix holds the simple-root
    // coordinates of beta_j, integral for any generalized Cartan matrix.
    Poly beta;
    for (int k = 0; k < rs.rank(); ++k) {
      std::int64_t c = prefix.root.at(k, letter - 1);
      if (c == 0) continue;
      Poly::Exponent e(rs.rank(), 0);
      e[k] = 1;
      beta.add_term(e, Int(c));
    }
    NilCoxeterElement next = acc;
    for (const auto& [w, p] : acc.coeffs()) {
      if (!w.core().right_ascent(letter)) continue;
      next.add_term(mul_gen(rs, w, letter), p * beta);
    }
    acc = std::move(next);
    prefix.mult_right(rs, letter);
  }
  return acc;
}

}  // namespace kflag
