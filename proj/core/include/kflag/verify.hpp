#pragma once

#include <string>
#include <vector>

#include "kflag/basis_change.hpp"
#include "kflag/serialize.hpp"

namespace kflag {

struct SuiteOptions {
  int max_word_len = 5;  // word length bound for the orthogonality sweep
  unsigned trials = 100;  // random argument pairs per exchange relation
};

struct SuiteReport {
  std::string suite;
  bool passed = true;
  long checks = 0;
  std::vector<std::string> failures;  // capped, with a trailing ellipsis entry

  void record(bool ok, const std::string& label);
};

/// The suite identifiers accepted by run_suite, in canonical order:
/// prop1, thm2-independence, prop2-relations, bs-delta, eq6-delta,
/// theorem5, qw-oracle.
std::vector<std::string> suite_names();

/// Dispatches by suite name. rs may be null only for prop2-relations, which
/// runs over its own fixed battery of rank-2 systems.
SuiteReport run_suite(const RootSystem* rs, const std::string& name,
                      const SuiteOptions& opts = {});

/// Exhaustive fixed-point basis axioms over the whole Weyl group.
SuiteReport run_basis_axiom_suite(const RootSystem& rs);

/// psi values agree across every reduced word of every element, and across
/// one doubled-letter non-reduced word per element.
SuiteReport run_word_independence_suite(const RootSystem& rs);

/// Exchange relations for braid orders 2, 3, 4, 6 at random monomial
/// arguments, on A1xA1, A2, B2 and G2, both generator orders. Deterministic
/// seeding.
SuiteReport run_exchange_suite(unsigned trials);

/// Orthogonality of the cube fixed-point basis under the localized Euler
/// characteristic, for every word up to the length bound.
SuiteReport run_orthogonality_suite(const RootSystem& rs, int max_word_len);

/// Euler characteristic of star(pullback(psi^w)) over every vertex is the
/// indicator of the Demazure product, for every reduced word of the longest
/// element and every w.
SuiteReport run_pullback_delta_suite(const RootSystem& rs);

/// The triangular expansion of sigma^w over the psi basis matches the
/// closed-form coefficients for every w and v, the longest row is all ones,
/// and the longest-element coefficient is exactly one.
SuiteReport run_sheaf_expansion_suite(const RootSystem& rs);

/// The closed-form coefficient agrees with the twisted group algebra
/// computation for every element.
SuiteReport run_twisted_algebra_suite(const RootSystem& rs);

}  // namespace kflag
