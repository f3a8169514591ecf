#include "kflag/bott_samelson.hpp"

#include <algorithm>

namespace kflag {

namespace {

void check_cube(const RootSystem& rs, const Word& word, const Epsilon& eps) {
  check_word(rs, word);
  if (eps.size() != static_cast<int>(word.size()))
    throw validation_error("cube vertex has " + std::to_string(eps.size()) +
                           " bits but the word has " + std::to_string(word.size()) + " letters");
}

}  // namespace

Epsilon::Epsilon(std::vector<std::uint8_t> b) : bits(std::move(b)) {
  for (auto x : bits)
    if (x > 1) throw validation_error("cube vertex bits must be 0 or 1");
}

int Epsilon::count() const {
  return static_cast<int>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

bool Epsilon::leq(const Epsilon& o) const {
  if (bits.size() != o.bits.size())
    throw validation_error("cube vertices of different dimensions are incomparable");
  for (std::size_t k = 0; k < bits.size(); ++k)
    if (bits[k] > o.bits[k]) return false;
  return true;
}

std::vector<int> Epsilon::positions() const {
  std::vector<int> out;
  for (int i = 1; i <= size(); ++i)
    if (at(i)) out.push_back(i);
  return out;
}

std::string Epsilon::to_string() const {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

std::vector<Epsilon> all_epsilons(int n) {
  if (n < 0 || n > 30) throw validation_error("cube dimension out of range");
  std::vector<Epsilon> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<std::uint8_t> bits(n);
    for (int k = 0; k < n; ++k) bits[k] = (mask >> (n - 1 - k)) & 1;
    out.emplace_back(std::move(bits));
  }
  return out;
}

const LaurentPoly& BSFn::at(const Epsilon& eps) const {
  auto it = values.find(eps);
  if (it == values.end())
    throw validation_error("cube function has no value at " + eps.to_string());
  return it->second;
}

WeylElement v_partial(const RootSystem& rs, const Word& word, const Epsilon& eps, int i) {
  check_cube(rs, word, eps);
  if (i < 0 || i > static_cast<int>(word.size()))
    throw validation_error("position " + std::to_string(i) + " out of range");
  detail::ElemCore c = detail::ElemCore::identity(rs.rank());
  for (int k = 1; k <= i; ++k)
    if (eps.at(k)) c.mult_right(rs, word[k - 1]);
  return finalize_element(rs, std::move(c));
}

Weight alpha_at(const RootSystem& rs, const Word& word, const Epsilon& eps, int i) {
  check_cube(rs, word, eps);
  if (i < 1 || i > static_cast<int>(word.size()))
    throw validation_error("position " + std::to_string(i) + " out of range");
  // Apply the selected reflections at positions k <= i to the letter's
  // simple root, rightmost reflection first.
  Weight w = rs.simple_root(word[i - 1]);
  for (int k = i; k >= 1; --k)
    if (eps.at(k)) w = rs.reflect(word[k - 1], w);
  return w;
}

WeylElement bs_product(const RootSystem& rs, const Word& word, const Epsilon& eps) {
  return v_partial(rs, word, eps, static_cast<int>(word.size()));
}

WeylElement bs_demazure_product(const RootSystem& rs, const Word& word, const Epsilon& eps) {
  check_cube(rs, word, eps);
  detail::ElemCore c = detail::ElemCore::identity(rs.rank());
  for (int k = 1; k <= static_cast<int>(word.size()); ++k)
    if (eps.at(k) && c.right_ascent(word[k - 1])) c.mult_right(rs, word[k - 1]);
  return finalize_element(rs, std::move(c));
}

LaurentPoly mu(const RootSystem& rs, const Word& word, const Epsilon& eps,
               const Epsilon& eps_prime) {
  check_cube(rs, word, eps);
  check_cube(rs, word, eps_prime);
  if (!eps.leq(eps_prime)) return LaurentPoly::zero();
  LaurentPoly out = LaurentPoly::one(rs.rank());
  for (int i : eps_prime.positions())
    out *= LaurentPoly::monomial(alpha_at(rs, word, eps_prime, i));
  for (int i : eps.positions()) {
    Weight a = alpha_at(rs, word, eps_prime, i);
    out *= LaurentPoly::monomial(-a) - LaurentPoly::one(rs.rank());
  }
  return out;
}

RationalChar euler_char(const RootSystem& rs, const Word& word, const Epsilon& eps,
                        const BSFn& f) {
  check_cube(rs, word, eps);
  const std::vector<int> denominator_positions = eps.positions();

  struct Term {
    const LaurentPoly* value;
    std::map<Weight, int> factors;  // gamma -> multiplicity of (1 - e^gamma)
  };
  std::vector<Term> terms;
  std::map<Weight, int> lcm;
  for (const auto& [eps_prime, value] : f.values) {
    if (!eps_prime.leq(eps) || value.is_zero()) continue;
    Term t;
    t.value = &value;
    for (int i : denominator_positions) ++t.factors[alpha_at(rs, word, eps_prime, i)];
    for (const auto& [gamma, mult] : t.factors) {
      auto [it, inserted] = lcm.emplace(gamma, mult);
      if (!inserted) it->second = std::max(it->second, mult);
    }
    terms.push_back(std::move(t));
  }

  LaurentPoly den = LaurentPoly::one(rs.rank());
  for (const auto& [gamma, mult] : lcm) {
    LaurentPoly factor = LaurentPoly::one(rs.rank()) - LaurentPoly::monomial(gamma);
    for (int k = 0; k < mult; ++k) den *= factor;
  }

  LaurentPoly num = LaurentPoly::zero();
  for (const Term& t : terms) {
    LaurentPoly cofactor = LaurentPoly::one(rs.rank());
    for (const auto& [gamma, mult] : lcm) {
      auto it = t.factors.find(gamma);
      int missing = mult - (it == t.factors.end() ? 0 : it->second);
      LaurentPoly factor = LaurentPoly::one(rs.rank()) - LaurentPoly::monomial(gamma);
      for (int k = 0; k < missing; ++k) cofactor *= factor;
    }
    num += *t.value * cofactor;
  }
  return RationalChar(std::move(num), std::move(den));
}

BSFn pullback(const RootSystem& rs, const Word& word, const FixedPointFn& f) {
  check_word(rs, word);
  BSFn out;
  for (const Epsilon& eps : all_epsilons(static_cast<int>(word.size())))
    out.values.emplace(eps, f.at(bs_product(rs, word, eps)));
  return out;
}

bool euler_delta_check(const RootSystem& rs, const Word& word, const WeylElement& w,
                       const Epsilon& eps) {
  BSFn pulled = pullback(rs, word, psi_fn(rs, w));
  for (auto& [e, value] : pulled.values) value = value.star();
  LaurentPoly chi = frac_to_poly(euler_char(rs, word, eps, pulled));
  bool expect_one = bs_demazure_product(rs, word, eps) == w;
  return chi == (expect_one ? LaurentPoly::one(rs.rank()) : LaurentPoly::zero());
}

LaurentPoly psi_from_mu(const RootSystem& rs, const Word& word, const WeylElement& w,
                        const Epsilon& eps_prime) {
  check_cube(rs, word, eps_prime);
  LaurentPoly out;
  for (const Epsilon& eps : all_epsilons(static_cast<int>(word.size()))) {
    if (!(bs_demazure_product(rs, word, eps) == w)) continue;
    out += mu(rs, word, eps, eps_prime).star();
  }
  return out;
}

}  // namespace kflag
