#include "kflag/verify.hpp"

#include <random>
#include <sstream>

namespace kflag {

namespace {

constexpr std::size_t kMaxStoredFailures = 25;

// A non-reduced word for v: its canonical word behind an extra r_i r_i pair.
Word doubled_word(const WeylElement& v) {
  Word w = v.canonical_word();
  if (w.empty()) return Word{1, 1};
  w.insert(w.begin(), 2, w.front());
  return w;
}

std::vector<Word> words_up_to(int rank, int max_len) {
  std::vector<Word> out;
  for (int len = 1; len <= max_len; ++len) {
    Word w(len, 1);
    for (;;) {
      out.push_back(w);
      int pos = len - 1;
      while (pos >= 0 && w[pos] == rank) w[pos--] = 1;
      if (pos < 0) break;
      ++w[pos];
    }
  }
  return out;
}

}  // namespace

void SuiteReport::record(bool ok, const std::string& label) {
  ++checks;
  if (ok) return;
  passed = false;
  if (failures.size() < kMaxStoredFailures)
    failures.push_back(label);
  else if (failures.size() == kMaxStoredFailures)
    failures.push_back("... more failures suppressed");
}

std::vector<std::string> suite_names() {
  return {"prop1",     "thm2-independence", "prop2-relations", "bs-delta",
          "eq6-delta", "theorem5",          "qw-oracle"};
}

SuiteReport run_basis_axiom_suite(const RootSystem& rs) {
  SuiteReport report;
  report.suite = "prop1";
  AxiomReport ax = verify_psi_axioms(rs);
  report.passed = ax.passed;
  report.checks = ax.checks;
  for (const auto& v : ax.violations) {
    if (report.failures.size() >= kMaxStoredFailures) {
      report.failures.push_back("... more failures suppressed");
      break;
    }
    report.failures.push_back(v);
  }
  return report;
}

SuiteReport run_word_independence_suite(const RootSystem& rs) {
  SuiteReport report;
  report.suite = "thm2-independence";
  const std::vector<WeylElement> elements = all_elements(rs);
  for (const WeylElement& v : elements) {
    std::vector<Word> words = reduced_words(rs, v);
    words.push_back(doubled_word(v));

    const Word& reference = words.front();
    HeckeElement ref_r = r_element(rs, reference);
    const Weight ref_shift = rho_shift(rs, reference);
    for (std::size_t k = 1; k < words.size(); ++k) {
      const Word& word = words[k];
      report.record(rho_shift(rs, word) == ref_shift,
                    "rho shift differs for word " + format_word(word));
      HeckeElement r = r_element(rs, word);
      for (const WeylElement& w : elements) {
        report.record(r.coeff(w) == ref_r.coeff(w),
                      "psi^{" + w.to_string() + "} differs between words " +
                          format_word(reference) + " and " + format_word(word));
      }
    }
  }
  return report;
}

SuiteReport run_exchange_suite(unsigned trials) {
  SuiteReport report;
  report.suite = "prop2-relations";
  const std::vector<std::string> battery = {"A1xA1", "A2", "B2", "G2"};
  for (std::size_t t = 0; t < battery.size(); ++t) {
    RootSystem rs(battery[t]);
    std::mt19937_64 rng(0xC0FFEE5EEDULL + t);
    std::uniform_int_distribution<std::int64_t> coord(-2, 2);
    for (unsigned trial = 0; trial < trials; ++trial) {
      std::vector<std::int64_t> xe(rs.rank()), ye(rs.rank());
      for (auto& c : xe) c = coord(rng);
      for (auto& c : ye) c = coord(rng);
      LaurentPoly x = LaurentPoly::monomial(Weight(xe));
      LaurentPoly y = LaurentPoly::monomial(Weight(ye));
      for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
        std::ostringstream label;
        label << battery[t] << " pair (" << i << "," << j << ") trial " << trial;
        report.record(exchange_relation_holds(rs, i, j, x, y), label.str());
      }
    }
  }
  return report;
}

SuiteReport run_orthogonality_suite(const RootSystem& rs, int max_word_len) {
  SuiteReport report;
  report.suite = "bs-delta";
  for (const Word& word : words_up_to(rs.rank(), max_word_len)) {
    const int n = static_cast<int>(word.size());
    const std::vector<Epsilon> cube = all_epsilons(n);
    for (const Epsilon& eps : cube) {
      BSFn f;
      for (const Epsilon& other : cube) f.values.emplace(other, mu(rs, word, eps, other));
      for (const Epsilon& eps_prime : cube) {
        std::ostringstream label;
        label << "word " << format_word(word) << ", mu at " << eps.to_string()
              << ", Euler characteristic over " << eps_prime.to_string();
        try {
          LaurentPoly chi = frac_to_poly(euler_char(rs, word, eps_prime, f));
          LaurentPoly expected =
              eps == eps_prime ? LaurentPoly::one(rs.rank()) : LaurentPoly::zero();
          report.record(chi == expected, label.str());
        } catch (const not_divisible_error&) {
          report.record(false, label.str() + " (quotient not polynomial)");
        }
      }
    }
  }
  return report;
}

SuiteReport run_pullback_delta_suite(const RootSystem& rs) {
  SuiteReport report;
  report.suite = "eq6-delta";
  const auto psis = all_psi_fns(rs);
  const WeylElement w0 = longest_element(rs);
  for (const Word& word : reduced_words(rs, w0)) {
    const int n = static_cast<int>(word.size());
    const std::vector<Epsilon> cube = all_epsilons(n);
    std::map<Epsilon, WeylElement> demazure_at;
    for (const Epsilon& eps : cube) demazure_at.emplace(eps, bs_demazure_product(rs, word, eps));
    for (const auto& [w, fn] : psis) {
      BSFn pulled = pullback(rs, word, fn);
      for (auto& [eps, value] : pulled.values) value = value.star();
      for (const Epsilon& eps : cube) {
        std::ostringstream label;
        label << "word " << format_word(word) << ", w = " << w.to_string()
              << ", vertex " << eps.to_string();
        try {
          LaurentPoly chi = frac_to_poly(euler_char(rs, word, eps, pulled));
          LaurentPoly expected = demazure_at.at(eps) == w ? LaurentPoly::one(rs.rank())
                                                          : LaurentPoly::zero();
          report.record(chi == expected, label.str());
        } catch (const not_divisible_error&) {
          report.record(false, label.str() + " (quotient not polynomial)");
        }
      }
    }
  }
  return report;
}

SuiteReport run_sheaf_expansion_suite(const RootSystem& rs) {
  SuiteReport report;
  report.suite = "theorem5";
  const std::vector<WeylElement> elements = all_elements(rs);
  const WeylElement w0 = longest_element(rs);
  for (const WeylElement& w : elements) {
    std::map<WeylElement, LaurentPoly> expansion = expand_sigma(rs, w);
    for (const WeylElement& v : elements) {
      std::ostringstream label;
      label << "coefficient of psi^{" << v.to_string() << "} in sigma^{" << w.to_string() << "}";
      report.record(expansion.at(v) == a_coeff(rs, w, v), label.str());
      if (w == w0)
        report.record(expansion.at(v) == LaurentPoly::one(rs.rank()),
                      label.str() + " should be 1");
    }
  }
  report.record(b_coeff(rs, w0.canonical_word()) == LaurentPoly::one(rs.rank()),
                "longest-element coefficient is 1");
  return report;
}

SuiteReport run_twisted_algebra_suite(const RootSystem& rs) {
  SuiteReport report;
  report.suite = "qw-oracle";
  const RationalChar denom = frac_from_poly(rs.rank(), weyl_denominator(rs));
  const WeylElement id = identity_element(rs);
  for (const WeylElement& v : all_elements(rs)) {
    RationalChar lhs = frac_from_poly(rs.rank(), b_coeff(rs, v.canonical_word()));
    RationalChar rhs = frac_mul(y_element(rs, v).coeff(rs.rank(), id), denom);
    report.record(frac_eq(lhs, rhs), "coefficient mismatch at " + v.to_string());
  }
  return report;
}

SuiteReport run_suite(const RootSystem* rs, const std::string& name, const SuiteOptions& opts) {
  if (name == "prop2-relations") return run_exchange_suite(opts.trials);
  if (rs == nullptr) throw validation_error("suite '" + name + "' needs a root system");
  if (name == "prop1") return run_basis_axiom_suite(*rs);
  if (name == "thm2-independence") return run_word_independence_suite(*rs);
  if (name == "bs-delta") return run_orthogonality_suite(*rs, opts.max_word_len);
  if (name == "eq6-delta") return run_pullback_delta_suite(*rs);
  if (name == "theorem5") return run_sheaf_expansion_suite(*rs);
  if (name == "qw-oracle") return run_twisted_algebra_suite(*rs);
  throw validation_error("unknown suite '" + name + "'");
}

}  // namespace kflag
