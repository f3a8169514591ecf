#include "kflag/ktheory.hpp"

#include <sstream>

namespace kflag {

namespace {

WeylElement mul_gen(const RootSystem& rs, const WeylElement& w, int i) {
  detail::ElemCore c = w.core();
  c.mult_right(rs, i);
  return finalize_element(rs, std::move(c));
}

}  // namespace

const LaurentPoly& FixedPointFn::at(const WeylElement& w) const {
  auto it = values.find(w);
  if (it == values.end())
    throw validation_error("fixed point function has no value at " + w.to_string());
  return it->second;
}

LaurentPoly psi(const RootSystem& rs, const WeylElement& w, const Word& word) {
  HeckeElement r = r_element(rs, word);
  LaurentPoly c = r.coeff(w);
  if (c.is_zero()) return c;
  return LaurentPoly::monomial(rho_shift(rs, word)) * c;
}

LaurentPoly psi_prime(const RootSystem& rs, const WeylElement& w, const WeylElement& v) {
  WeylElement wi = inverse(rs, w), vi = inverse(rs, v);
  return psi(rs, wi, vi.canonical_word()).star();
}

FixedPointFn psi_fn(const RootSystem& rs, const WeylElement& w) {
  FixedPointFn f;
  for (const WeylElement& v : all_elements(rs)) f.values.emplace(v, psi(rs, w, v.canonical_word()));
  return f;
}

std::map<WeylElement, FixedPointFn> all_psi_fns(const RootSystem& rs) {
  const std::vector<WeylElement> elements = all_elements(rs);
  std::map<WeylElement, FixedPointFn> out;
  for (const WeylElement& w : elements) out.emplace(w, FixedPointFn{});
  for (const WeylElement& v : elements) {
    HeckeElement r = r_element(rs, v.canonical_word());
    LaurentPoly shift = LaurentPoly::monomial(rho_shift(rs, v.canonical_word()));
    for (const WeylElement& w : elements) {
      LaurentPoly c = r.coeff(w);
      out.at(w).values.emplace(v, c.is_zero() ? c : shift * c);
    }
  }
  return out;
}

FixedPointFn demazure(const RootSystem& rs, int i, const FixedPointFn& f) {
  if (i < 1 || i > rs.rank())
    throw validation_error("generator index " + std::to_string(i) + " out of range");
  FixedPointFn out;
  for (const auto& [v, fv] : f.values) {
    WeylElement vri = mul_gen(rs, v, i);
    auto it = f.values.find(vri);
    if (it == f.values.end())
      throw validation_error("domain of the fixed point function is not closed under r_" +
                             std::to_string(i));
    LaurentPoly neg_v_alpha = LaurentPoly::monomial(-v.apply(rs.simple_root(i)));
    LaurentPoly num = fv - neg_v_alpha * it->second;
    LaurentPoly den = LaurentPoly::one(rs.rank()) - neg_v_alpha;
    out.values.emplace(v, exact_div(num, den));
  }
  return out;
}

LaurentPoly weyl_denominator(const RootSystem& rs) {
  LaurentPoly product = LaurentPoly::one(rs.rank());
  for (const Weight& alpha : rs.positive_roots())
    product *= LaurentPoly::one(rs.rank()) - LaurentPoly::monomial(-alpha);
  return product;
}

FixedPointFn sigma(const RootSystem& rs, const WeylElement& w) {
  LaurentPoly product = weyl_denominator(rs);
  FixedPointFn f;
  for (const WeylElement& v : all_elements(rs))
    f.values.emplace(v, v.is_identity() ? product : LaurentPoly::zero());
  for (int letter : w.canonical_word()) f = demazure(rs, letter, f);
  return f;
}

Poly xi(const RootSystem& rs, const WeylElement& w, const Word& word) {
  return nil_r_element(rs, word).coeff(w);
}

void AxiomReport::record(bool ok, const std::string& label) {
  ++checks;
  if (!ok) {
    passed = false;
    violations.push_back(label);
  }
}

AxiomReport verify_psi_axioms(const RootSystem& rs) {
  AxiomReport report;
  const std::vector<WeylElement> elements = all_elements(rs);
  const auto psis = all_psi_fns(rs);

  for (const auto& [w, fn] : psis) {
    // Support: psi^w(v) = 0 unless w <= v in Bruhat order.
    for (const auto& [v, value] : fn.values) {
      if (!bruhat_leq(rs, w, v))
        report.record(value.is_zero(),
                      "support: psi^{" + w.to_string() + "}(" + v.to_string() + ") != 0");
    }

    // Diagonal: psi^w(w) = product of (1 - e^beta) over inversions of w^{-1}.
    LaurentPoly diag = LaurentPoly::one(rs.rank());
    for (const Weight& beta : inversion_set(rs, inverse(rs, w)))
      diag *= LaurentPoly::one(rs.rank()) - LaurentPoly::monomial(beta);
    report.record(fn.at(w) == diag, "diagonal: psi^{" + w.to_string() + "}(" + w.to_string() + ")");

    // Demazure recursion: D_i psi^w = psi^w + psi^{w r_i} when w r_i < w,
    // and 0 when w r_i > w.
    for (int i = 1; i <= rs.rank(); ++i) {
      FixedPointFn image = demazure(rs, i, fn);
      if (right_descent(rs, w, i)) {
        FixedPointFn expected;
        const FixedPointFn& shorter = psis.at(mul_gen(rs, w, i));
        for (const auto& [v, value] : fn.values)
          expected.values.emplace(v, value + shorter.at(v));
        report.record(image == expected, "recursion: D_" + std::to_string(i) + " psi^{" +
                                             w.to_string() + "} with descent");
      } else {
        bool all_zero = true;
        for (const auto& [v, value] : image.values) all_zero = all_zero && value.is_zero();
        report.record(all_zero, "recursion: D_" + std::to_string(i) + " psi^{" + w.to_string() +
                                    "} with ascent");
      }
    }
  }

  // Identity basis element: psi^1(v) = e^{rho - v(rho)}.
  const FixedPointFn& unit_fn = psis.at(identity_element(rs));
  for (const WeylElement& v : elements) {
    LaurentPoly expected = LaurentPoly::monomial(rs.rho() - v.apply(rs.rho()));
    report.record(unit_fn.at(v) == expected, "identity value at " + v.to_string());
  }
  return report;
}

PolyQ exp_truncated(const RootSystem& rs, const Weight& lambda, std::int64_t max_deg) {
  PolyQ linear;
  {
    Poly l = linear_form(rs, lambda);
    for (const auto& [e, c] : l.terms()) linear.add_term(e, Rational(c));
  }
  PolyQ out = PolyQ::one(rs.rank());
  PolyQ power = PolyQ::one(rs.rank());
  Rational factorial = 1;
  for (std::int64_t k = 1; k <= max_deg; ++k) {
    power = (power * linear).truncate(max_deg);
    factorial *= k;
    PolyQ scaled = power;
    scaled *= Rational(1) / factorial;
    out += scaled;
  }
  return out;
}

PolyQ low_degree_expansion(const RootSystem& rs, const LaurentPoly& p, std::int64_t max_deg) {
  PolyQ out;
  for (const auto& [e, c] : p.terms()) {
    PolyQ term = exp_truncated(rs, e, max_deg);
    term *= Rational(c);
    out += term;
  }
  return out;
}

}  // namespace kflag
