#include "kflag/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace kflag {

namespace detail {

SquareMat SquareMat::identity(int n) {
  SquareMat m;
  m.n = n;
  m.a.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

SquareMat SquareMat::operator*(const SquareMat& o) const {
  SquareMat out;
  out.n = n;
  out.a.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      std::int64_t x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += x * o.at(k, j);
    }
  return out;
}

std::vector<std::int64_t> SquareMat::apply(const std::vector<std::int64_t>& v) const {
  std::vector<std::int64_t> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += at(i, j) * v[j];
  return out;
}

SquareMat gen_fund_mat(const RootSystem& rs, int i) {
  // r_i(lambda) = lambda - lambda(h_i) alpha_i changes coordinate k by
  // -a_{ki} lambda_i, so only column i differs from the identity.
  const int n = rs.rank();
  SquareMat m = SquareMat::identity(n);
  for (int k = 0; k < n; ++k) m.at(k, i - 1) -= rs.cartan().entries[k][i - 1];
  return m;
}

SquareMat gen_root_mat(const RootSystem& rs, int i) {
  // In the simple-root basis r_i(alpha_j) = alpha_j - a_{ij} alpha_i, so only
  // row i differs from the identity.
  const int n = rs.rank();
  SquareMat m = SquareMat::identity(n);
  for (int j = 0; j < n; ++j) m.at(i - 1, j) -= rs.cartan().entries[i - 1][j];
  return m;
}

ElemCore ElemCore::identity(int rank) {
  ElemCore c;
  c.fund = c.inv_fund = c.root = c.inv_root = SquareMat::identity(rank);
  return c;
}

bool ElemCore::is_identity() const { return root == SquareMat::identity(root.n); }

bool ElemCore::right_ascent(int i) const {
  // w(alpha_i) in the simple-root basis is column i of `root`.
  for (int k = 0; k < root.n; ++k)
    if (root.at(k, i - 1) < 0) return false;
  return true;
}

bool ElemCore::left_ascent(int i) const {
  for (int k = 0; k < root.n; ++k)
    if (inv_root.at(k, i - 1) < 0) return false;
  return true;
}

void ElemCore::mult_right(const RootSystem& rs, int i) {
  SquareMat f = gen_fund_mat(rs, i), r = gen_root_mat(rs, i);
  fund = fund * f;
  root = root * r;
  inv_fund = f * inv_fund;
  inv_root = r * inv_root;
}

void ElemCore::mult_left(const RootSystem& rs, int i) {
  SquareMat f = gen_fund_mat(rs, i), r = gen_root_mat(rs, i);
  fund = f * fund;
  root = r * root;
  inv_fund = inv_fund * f;
  inv_root = inv_root * r;
}

}  // namespace detail

Weight WeylElement::apply(const Weight& w) const {
  if (w.rank() != rank()) throw validation_error("weight rank does not match element rank");
  return Weight(core_.fund.apply(w.coords()));
}

std::vector<std::int64_t> WeylElement::apply_root_coords(
    const std::vector<std::int64_t>& c) const {
  return core_.root.apply(c);
}

bool WeylElement::operator<(const WeylElement& o) const {
  if (length() != o.length()) return length() < o.length();
  return word_ < o.word_;
}

std::string WeylElement::to_string() const {
  if (word_.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (k) os << ' ';
    os << word_[k];
  }
  return os.str();
}

WeylElement finalize_element(const RootSystem& rs, detail::ElemCore core) {
  Word word;
  detail::ElemCore c = core;
  while (!c.is_identity()) {
    int descent = 0;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (!c.left_ascent(i)) {
        descent = i;
        break;
      }
    }
    word.push_back(descent);
    c.mult_left(rs, descent);
  }
  return WeylElement(std::move(core), std::move(word));
}

void check_word(const RootSystem& rs, const Word& word) {
  for (int letter : word)
    if (letter < 1 || letter > rs.rank())
      throw validation_error("word letter " + std::to_string(letter) + " out of range 1.." +
                             std::to_string(rs.rank()));
}

WeylElement identity_element(const RootSystem& rs) {
  return finalize_element(rs, detail::ElemCore::identity(rs.rank()));
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  return element_from_word(rs, Word{i});
}

WeylElement element_from_word(const RootSystem& rs, const Word& word) {
  check_word(rs, word);
  detail::ElemCore c = detail::ElemCore::identity(rs.rank());
  for (int letter : word) c.mult_right(rs, letter);
  return finalize_element(rs, std::move(c));
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  detail::ElemCore c;
  c.fund = w.core().inv_fund;
  c.inv_fund = w.core().fund;
  c.root = w.core().inv_root;
  c.inv_root = w.core().root;
  return finalize_element(rs, std::move(c));
}

WeylElement mul(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  detail::ElemCore c;
  c.fund = a.core().fund * b.core().fund;
  c.root = a.core().root * b.core().root;
  c.inv_fund = b.core().inv_fund * a.core().inv_fund;
  c.inv_root = b.core().inv_root * a.core().inv_root;
  return finalize_element(rs, std::move(c));
}

bool right_descent(const RootSystem& rs, const WeylElement& w, int i) {
  if (i < 1 || i > rs.rank())
    throw validation_error("generator index " + std::to_string(i) + " out of range");
  return !w.core().right_ascent(i);
}

bool left_descent(const RootSystem& rs, const WeylElement& w, int i) {
  if (i < 1 || i > rs.rank())
    throw validation_error("generator index " + std::to_string(i) + " out of range");
  return !w.core().left_ascent(i);
}

bool bruhat_leq_via_word(const RootSystem& rs, const WeylElement& u, const Word& v_word) {
  check_word(rs, v_word);
  detail::ElemCore c = u.core();
  for (auto it = v_word.rbegin(); it != v_word.rend(); ++it)
    if (!c.right_ascent(*it)) c.mult_right(rs, *it);
  return c.is_identity();
}

bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
  return bruhat_leq_via_word(rs, u, v.canonical_word());
}

WeylElement hecke_product(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
  detail::ElemCore c = u.core();
  for (int letter : v.canonical_word())
    if (c.right_ascent(letter)) c.mult_right(rs, letter);
  return finalize_element(rs, std::move(c));
}

std::vector<Weight> inversion_set(const RootSystem& rs, const WeylElement& w) {
  std::vector<Weight> out;
  const auto& roots = rs.positive_roots();
  const auto& coords = rs.positive_root_coords();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    auto image = w.apply_root_coords(coords[k]);
    if (std::any_of(image.begin(), image.end(), [](std::int64_t x) { return x < 0; }))
      out.push_back(roots[k]);
  }
  return out;
}

std::vector<Weight> beta_sequence(const RootSystem& rs, const Word& word) {
  check_word(rs, word);
  std::vector<Weight> betas;
  betas.reserve(word.size());
  detail::ElemCore prefix = detail::ElemCore::identity(rs.rank());
  for (int letter : word) {
    betas.emplace_back(prefix.fund.apply(rs.simple_root(letter).coords()));
    prefix.mult_right(rs, letter);
  }
  return betas;
}

Weight rho_shift(const RootSystem& rs, const Word& word) {
  Weight total = Weight::zero(rs.rank());
  for (const Weight& beta : beta_sequence(rs, word)) total += beta;
  return total;
}

std::vector<WeylElement> all_elements(const RootSystem& rs) {
  if (!rs.finite_type())
    throw unsupported_error("cannot enumerate the Weyl group of a non-finite Cartan matrix");
  std::map<std::vector<std::int64_t>, detail::ElemCore> seen;
  std::deque<detail::ElemCore> queue;
  detail::ElemCore e = detail::ElemCore::identity(rs.rank());
  seen.emplace(e.root.a, e);
  queue.push_back(e);
  while (!queue.empty()) {
    detail::ElemCore c = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rs.rank(); ++i) {
      if (!c.right_ascent(i)) continue;
      detail::ElemCore child = c;
      child.mult_right(rs, i);
      if (seen.emplace(child.root.a, child).second) queue.push_back(child);
    }
  }
  std::vector<WeylElement> out;
  out.reserve(seen.size());
  for (auto& [key, core] : seen) out.push_back(finalize_element(rs, core));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void reduced_words_rec(const RootSystem& rs, const detail::ElemCore& core,
                       std::map<std::vector<std::int64_t>, std::vector<Word>>& memo) {
  if (memo.count(core.root.a)) return;
  std::vector<Word> words;
  if (core.is_identity()) {
    words.push_back({});
  } else {
    for (int i = 1; i <= rs.rank(); ++i) {
      if (core.right_ascent(i)) continue;
      detail::ElemCore child = core;
      child.mult_right(rs, i);
      reduced_words_rec(rs, child, memo);
      for (Word w : memo.at(child.root.a)) {
        w.push_back(i);
        words.push_back(std::move(w));
      }
    }
    std::sort(words.begin(), words.end());
  }
  memo.emplace(core.root.a, std::move(words));
}

}  // namespace

std::vector<Word> reduced_words(const RootSystem& rs, const WeylElement& w) {
  std::map<std::vector<std::int64_t>, std::vector<Word>> memo;
  reduced_words_rec(rs, w.core(), memo);
  return memo.at(w.core().root.a);
}

WeylElement longest_element(const RootSystem& rs) {
  if (!rs.finite_type())
    throw unsupported_error("the longest element requires a finite-type Cartan matrix");
  detail::ElemCore c = detail::ElemCore::identity(rs.rank());
  for (;;) {
    int ascent = 0;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (c.right_ascent(i)) {
        ascent = i;
        break;
      }
    }
    if (ascent == 0) break;
    c.mult_right(rs, ascent);
  }
  return finalize_element(rs, std::move(c));
}

}  // namespace kflag
