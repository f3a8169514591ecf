#include "kflag/characters.hpp"

#include <algorithm>

#include "kflag/errors.hpp"

namespace kflag {

LaurentPoly LaurentPoly::constant(int rank, Int c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(Weight::zero(rank), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::monomial(const Weight& exponent, Int coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exponent, std::move(coeff));
  return p;
}

Int LaurentPoly::coeff(const Weight& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const Weight& exponent, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  terms_ = std::move(out.terms_);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::star() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

namespace {

struct Box {
  std::vector<std::int64_t> lo, hi;
};

Box support_box(const LaurentPoly& p) {
  Box b;
  const int rank = p.terms().begin()->first.rank();
  b.lo.assign(rank, 0);
  b.hi.assign(rank, 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (int k = 0; k < rank; ++k) {
      std::int64_t x = e.coords()[k];
      if (first || x < b.lo[k]) b.lo[k] = x;
      if (first || x > b.hi[k]) b.hi[k] = x;
    }
    first = false;
  }
  return b;
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw validation_error("division by the zero polynomial");
  if (p.is_zero()) return LaurentPoly::zero();

  // Every exponent of an exact quotient lies in the componentwise difference
  // of the support boxes, because Newton polytopes add under multiplication.
  const Box pb = support_box(p), qb = support_box(q);
  const int rank = p.terms().begin()->first.rank();

  const auto& q_lead = *q.terms().rbegin();
  LaurentPoly quotient, rem(p);
  while (!rem.is_zero()) {
    const auto& r_lead = *rem.terms().rbegin();
    std::vector<std::int64_t> exp(rank);
    bool in_box = true;
    for (int k = 0; k < rank; ++k) {
      exp[k] = r_lead.first.coords()[k] - q_lead.first.coords()[k];
      if (exp[k] < pb.lo[k] - qb.lo[k] || exp[k] > pb.hi[k] - qb.hi[k]) in_box = false;
    }
    if (!in_box || r_lead.second % q_lead.second != 0)
      throw not_divisible_error("polynomial quotient is not exact", rem);
    Int c = r_lead.second / q_lead.second;
    Weight e{std::move(exp)};
    quotient.add_term(e, c);
    rem -= LaurentPoly::monomial(e, c) * q;
  }
  return quotient;
}

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  try {
    return exact_div(p, q);
  } catch (const not_divisible_error&) {
    return std::nullopt;
  }
}

RationalChar::RationalChar(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw validation_error("rational character with zero denominator");
}

RationalChar frac_from_poly(int rank, LaurentPoly p) {
  return RationalChar(std::move(p), LaurentPoly::one(rank));
}

RationalChar frac_add(const RationalChar& a, const RationalChar& b) {
  return RationalChar(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalChar frac_sub(const RationalChar& a, const RationalChar& b) {
  return RationalChar(a.num * b.den - b.num * a.den, a.den * b.den);
}

RationalChar frac_mul(const RationalChar& a, const RationalChar& b) {
  return RationalChar(a.num * b.num, a.den * b.den);
}

RationalChar frac_neg(const RationalChar& a) { return RationalChar(-a.num, a.den); }

RationalChar frac_star(const RationalChar& a) { return RationalChar(a.num.star(), a.den.star()); }

bool frac_eq(const RationalChar& a, const RationalChar& b) {
  return a.num * b.den == b.num * a.den;
}

LaurentPoly frac_to_poly(const RationalChar& a) { return exact_div(a.num, a.den); }

}  // namespace kflag
