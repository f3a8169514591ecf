#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kflag/root_system.hpp"

namespace kflag {

/// A word in the simple reflections, as 1-based generator indices.
/// Words are not assumed reduced unless an operation says so.
using Word = std::vector<int>;

namespace detail {

struct SquareMat {
  int n = 0;
  std::vector<std::int64_t> a;  // row-major

  static SquareMat identity(int n);
  std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  SquareMat operator*(const SquareMat& o) const;
  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;
  bool operator==(const SquareMat&) const = default;
};

SquareMat gen_fund_mat(const RootSystem& rs, int i);
SquareMat gen_root_mat(const RootSystem& rs, int i);

/// Group element as its action matrices (and their inverses) in the
/// fundamental-weight and simple-root bases. The simple-root matrices make
/// sign tests exact for every generalized Cartan matrix: column i of `root`
/// holds the simple-root coordinates of w(alpha_i), which are all >= 0 or
/// all <= 0.
struct ElemCore {
  SquareMat fund, inv_fund, root, inv_root;

  static ElemCore identity(int rank);
  bool is_identity() const;
  bool right_ascent(int i) const;  // l(w r_i) > l(w)
  bool left_ascent(int i) const;   // l(r_i w) > l(w)
  void mult_right(const RootSystem& rs, int i);
  void mult_left(const RootSystem& rs, int i);
  bool operator==(const ElemCore&) const = default;
};

}  // namespace detail

/// An element of the Weyl group attached to a RootSystem. Equality and
/// ordering go through the canonical word: the lexicographically smallest
/// reduced word, computed by repeatedly splitting off the smallest left
/// descent. Ordering is by length, then lexicographic on the word, which
/// refines the Bruhat order and makes map iteration deterministic.
class WeylElement {
 public:
  int rank() const { return core_.root.n; }
  int length() const { return static_cast<int>(word_.size()); }
  const Word& canonical_word() const { return word_; }
  bool is_identity() const { return word_.empty(); }

  Weight apply(const Weight& w) const;
  std::vector<std::int64_t> apply_root_coords(const std::vector<std::int64_t>& c) const;

  /// Internal representation; exposed for the algorithms in this library.
  const detail::ElemCore& core() const { return core_; }

  bool operator==(const WeylElement& o) const { return rank() == o.rank() && word_ == o.word_; }
  bool operator<(const WeylElement& o) const;

  std::string to_string() const;  // "e" for the identity, else "1 2 1"

 private:
  friend WeylElement finalize_element(const RootSystem& rs, detail::ElemCore core);
  WeylElement(detail::ElemCore core, Word word) : core_(std::move(core)), word_(std::move(word)) {}

  detail::ElemCore core_;
  Word word_;
};

/// Builds the WeylElement for a core by extracting its canonical word.
WeylElement finalize_element(const RootSystem& rs, detail::ElemCore core);

void check_word(const RootSystem& rs, const Word& word);

WeylElement identity_element(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int i);
WeylElement element_from_word(const RootSystem& rs, const Word& word);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);
WeylElement mul(const RootSystem& rs, const WeylElement& a, const WeylElement& b);

bool right_descent(const RootSystem& rs, const WeylElement& w, int i);
bool left_descent(const RootSystem& rs, const WeylElement& w, int i);

/// Bruhat order, decided by the subword criterion: scan a reduced word of v
/// right to left, multiplying the descent letters into a running copy of u.
bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& v);
/// Same scan over a caller-chosen reduced word of v.
bool bruhat_leq_via_word(const RootSystem& rs, const WeylElement& u, const Word& v_word);

/// Demazure product: fold the canonical word of v into u, keeping only the
/// length-increasing letters.
WeylElement hecke_product(const RootSystem& rs, const WeylElement& u, const WeylElement& v);

/// The positive roots sent to negative roots by w, in positive_roots() order.
/// Its size is length(w). Finite type only.
std::vector<Weight> inversion_set(const RootSystem& rs, const WeylElement& w);

/// beta_j = r_{i_1} ... r_{i_{j-1}} (alpha_{i_j}) for each position j of the
/// word. Defined for every word over any generalized Cartan matrix.
std::vector<Weight> beta_sequence(const RootSystem& rs, const Word& word);

/// Sum of beta_sequence(word), which equals rho - (product of the word)(rho).
Weight rho_shift(const RootSystem& rs, const Word& word);

/// The whole Weyl group, sorted by (length, canonical word). Finite type only.
std::vector<WeylElement> all_elements(const RootSystem& rs);

/// Every reduced word of w, in lexicographic order.
std::vector<Word> reduced_words(const RootSystem& rs, const WeylElement& w);

WeylElement longest_element(const RootSystem& rs);

}  // namespace kflag
