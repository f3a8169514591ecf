#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kflag/ktheory.hpp"

using namespace kflag;

namespace {

LaurentPoly e(const Weight& w) { return LaurentPoly::monomial(w); }

}  // namespace

TEST_CASE("identity basis element: psi^1(v) = e^{rho - v rho}") {
  RootSystem rs("B2");
  auto id = identity_element(rs);
  for (const auto& v : all_elements(rs)) {
    CHECK(psi(rs, id, v.canonical_word()) == e(rs.rho() - v.apply(rs.rho())));
  }
}

TEST_CASE("simple reflection values in rank one") {
  RootSystem rs("A1");
  auto r1 = simple_reflection(rs, 1);
  auto one = LaurentPoly::one(1);
  CHECK(psi(rs, r1, {1}) == one - e(rs.simple_root(1)));
  CHECK(psi(rs, r1, {}).is_zero());
  // psi^{r1}(r1) = 1 - e^{alpha_1}: the diagonal value.
  CHECK(psi(rs, r1, {1}) == one - e(rs.simple_root(1)));
}

TEST_CASE("support: psi^w(v) vanishes unless w <= v") {
  RootSystem rs("B2");
  auto elems = all_elements(rs);
  for (const auto& w : elems)
    for (const auto& v : elems) {
      bool zero = psi(rs, w, v.canonical_word()).is_zero();
      CHECK(zero == !bruhat_leq(rs, w, v));
    }
}

TEST_CASE("diagonal: psi^w(w) is the inversion-set product") {
  RootSystem rs("B2");
  auto one = LaurentPoly::one(2);
  for (const auto& w : all_elements(rs)) {
    LaurentPoly expect = one;
    for (const auto& beta : inversion_set(rs, inverse(rs, w))) expect *= one - e(beta);
    CHECK(psi(rs, w, w.canonical_word()) == expect);
  }
}

TEST_CASE("values are independent of the chosen word") {
  RootSystem rs("A3");
  auto v = element_from_word(rs, {2, 3, 2, 1, 2});
  auto w = element_from_word(rs, {3, 2});
  auto reference = psi(rs, w, v.canonical_word());
  for (const auto& word : reduced_words(rs, v)) CHECK(psi(rs, w, word) == reference);
  // Non-reduced words representing the same element give the same value.
  Word padded = v.canonical_word();
  padded.insert(padded.begin(), padded.front());
  padded.insert(padded.begin(), padded.front());
  CHECK(element_from_word(rs, padded) == v);
  CHECK(psi(rs, w, padded) == reference);
}

TEST_CASE("golden value in rank three") {
  RootSystem rs("A3");
  auto w = element_from_word(rs, {3, 2});
  auto a1 = rs.simple_root(1), a2 = rs.simple_root(2), a3 = rs.simple_root(3);
  auto value = psi(rs, w, {2, 3, 2, 1, 2});
  LaurentPoly expect;
  expect.add_term(a1 * 2 + a2 * 4 + a3 * 3, 1);
  expect.add_term(a1 + a2 * 2 + a3, 1);
  expect.add_term(a1 * 2 + a2 * 3 + a3 * 2, -1);
  expect.add_term(a1 + a2 * 3 + a3 * 2, -1);
  CHECK(value == expect);
}

TEST_CASE("basis functions as whole tables") {
  RootSystem rs("A2");
  auto w = simple_reflection(rs, 1);
  auto f = psi_fn(rs, w);
  CHECK(f.values.size() == 6);
  for (const auto& v : all_elements(rs)) CHECK(f.at(v) == psi(rs, w, v.canonical_word()));

  auto table = all_psi_fns(rs);
  CHECK(table.size() == 6);
  for (const auto& [u, fn] : table) CHECK(fn == psi_fn(rs, u));

  FixedPointFn partial;
  partial.values.emplace(identity_element(rs), LaurentPoly::one(2));
  CHECK_THROWS_AS(partial.at(w), validation_error);
}

TEST_CASE("Demazure operators: recursion on the psi basis") {
  RootSystem rs("B2");
  for (const auto& w : all_elements(rs)) {
    auto fw = psi_fn(rs, w);
    for (int i = 1; i <= 2; ++i) {
      auto image = demazure(rs, i, fw);
      FixedPointFn expect;
      if (right_descent(rs, w, i)) {
        auto lower = psi_fn(rs, mul(rs, w, simple_reflection(rs, i)));
        for (const auto& [v, val] : fw.values) expect.values[v] = val + lower.values.at(v);
      } else {
        for (const auto& [v, val] : fw.values) expect.values[v] = LaurentPoly::zero();
      }
      CHECK(image == expect);
    }
  }
}

TEST_CASE("Demazure operators are idempotent-like: D_i D_i = D_i") {
  RootSystem rs("A2");
  auto f = sigma(rs, element_from_word(rs, {1, 2}));
  for (int i = 1; i <= 2; ++i) {
    auto once = demazure(rs, i, f);
    CHECK(demazure(rs, i, once) == once);
  }
}

TEST_CASE("Demazure division failure is reported for non-classes") {
  RootSystem rs("A1");
  // The indicator function of the identity is not a K-class: the divided
  // difference leaves a remainder.
  FixedPointFn f;
  f.values.emplace(identity_element(rs), LaurentPoly::one(1));
  f.values.emplace(simple_reflection(rs, 1), LaurentPoly::zero());
  CHECK_THROWS_AS(demazure(rs, 1, f), not_divisible_error);

  FixedPointFn missing;
  missing.values.emplace(identity_element(rs), LaurentPoly::one(1));
  CHECK_THROWS_AS(demazure(rs, 1, missing), validation_error);
}

TEST_CASE("structure sheaf values") {
  RootSystem a1("A1");
  auto id1 = identity_element(a1);
  auto s = sigma(a1, simple_reflection(a1, 1));
  // The full flag variety of rank one: sigma^{r1} is the class of the whole
  // space, constantly one.
  CHECK(s.at(id1) == LaurentPoly::one(1));
  CHECK(s.at(simple_reflection(a1, 1)) == LaurentPoly::one(1));

  auto point = sigma(a1, id1);
  CHECK(point.at(id1) == weyl_denominator(a1));
  CHECK(point.at(simple_reflection(a1, 1)).is_zero());

  RootSystem a2("A2");
  auto w0 = longest_element(a2);
  auto top = sigma(a2, w0);
  for (const auto& v : all_elements(a2)) CHECK(top.at(v) == LaurentPoly::one(2));
}

TEST_CASE("weyl denominator") {
  RootSystem rs("A2");
  auto one = LaurentPoly::one(2);
  auto expect = (one - e(-rs.simple_root(1))) * (one - e(-rs.simple_root(2))) *
                (one - e(-(rs.simple_root(1) + rs.simple_root(2))));
  CHECK(weyl_denominator(rs) == expect);
}

TEST_CASE("axiom sweep passes on small types") {
  for (const char* type : {"A1", "A2", "B2"}) {
    CAPTURE(type);
    auto report = verify_psi_axioms(RootSystem(type));
    CHECK(report.passed);
    CHECK(report.violations.empty());
    CHECK(report.checks > 0);
  }
}

TEST_CASE("nil-limit values via the graded coefficient") {
  RootSystem rs("A2");
  auto w = element_from_word(rs, {1, 2});
  auto p = xi(rs, w, {1, 2});
  CHECK(p == Poly::monomial({2, 0}, 1) + Poly::monomial({1, 1}, 1));
  CHECK(xi(rs, w, {2, 1}).is_zero());
  CHECK(xi(rs, identity_element(rs), {1, 2}) == Poly::one(2));
}

TEST_CASE("truncated exponentials") {
  RootSystem rs("A2");
  auto a1 = rs.simple_root(1);
  auto p = exp_truncated(rs, a1, 3);
  CHECK(p.coeff({0, 0}) == Rational(1));
  CHECK(p.coeff({1, 0}) == Rational(1));
  CHECK(p.coeff({2, 0}) == Rational(1, 2));
  CHECK(p.coeff({3, 0}) == Rational(1, 6));
  CHECK(p.coeff({4, 0}) == Rational(0));

  // exp(a1)exp(-a1) = 1 up to the truncation order.
  auto q = (p * exp_truncated(rs, -a1, 3)).truncate(3);
  CHECK(q == PolyQ::one(2));

  auto sum = low_degree_expansion(rs, LaurentPoly::one(2) - LaurentPoly::monomial(a1), 2);
  // 1 - exp(a1) = -a1 - a1^2/2 - ...
  CHECK(sum.coeff({0, 0}) == Rational(0));
  CHECK(sum.coeff({1, 0}) == Rational(-1));
  CHECK(sum.coeff({2, 0}) == Rational(-1, 2));
}

TEST_CASE("graded limit matches the lowest-degree expansion of the exact values") {
  RootSystem rs("A2");
  for (const auto& w : all_elements(rs)) {
    for (const auto& v : all_elements(rs)) {
      auto value = psi(rs, w, v.canonical_word());
      auto expansion = low_degree_expansion(rs, value, w.length());
      // Everything below degree l(w) cancels...
      for (std::int64_t d = 0; d < w.length(); ++d)
        CHECK(expansion.homogeneous_component(d).is_zero());
      // ...and degree l(w) is the nil-limit value up to the parity sign.
      auto graded = xi(rs, w, v.canonical_word());
      PolyQ expect;
      for (const auto& [exp, c] : graded.terms())
        expect.add_term(exp, (w.length() % 2 == 0) ? Rational(c) : -Rational(c));
      CHECK(expansion.homogeneous_component(w.length()) == expect);
    }
  }
}
