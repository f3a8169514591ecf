#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "kflag/errors.hpp"
#include "kflag/numbers.hpp"

namespace kflag {

/// An integral weight, stored in the fundamental-weight basis: coordinate i
/// is the pairing of the weight with the i-th simple coroot. Simple-root
/// indices throughout the library are 1-based to match the word notation
/// accepted by the command line tool.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  static Weight zero(int rank) { return Weight(std::vector<std::int64_t>(rank, 0)); }

  int rank() const { return static_cast<int>(coords_.size()); }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  /// Pairing with the i-th simple coroot, 1 <= i <= rank().
  std::int64_t pairing(int i) const;

  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;
  Weight operator*(std::int64_t c) const;

  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// A generalized Cartan matrix. entries[i][j] is the pairing of the j-th
/// simple root with the i-th simple coroot, so column j holds the
/// fundamental-weight coordinates of the simple root alpha_j.
struct CartanMatrix {
  std::vector<std::vector<std::int64_t>> entries;

  int rank() const { return static_cast<int>(entries.size()); }
  std::int64_t at(int i, int j) const { return entries[i - 1][j - 1]; }

  /// Checks the generalized Cartan matrix axioms: square, diagonal 2,
  /// non-positive integers off the diagonal, and a_ij = 0 iff a_ji = 0.
  /// Throws validation_error naming the offending entry.
  void validate() const;

  /// Named types "A1", "B3", "G2", ..., plus products joined with 'x'
  /// ("A1xA1", "A2xG2") mapped to block-diagonal matrices.
  static CartanMatrix of_type(const std::string& name);
};

struct RootCoords {
  std::vector<Rational> coords;
  bool integral = false;
};

/// A root datum built from a generalized Cartan matrix, with the
/// simply-connected weight lattice (the fundamental weights form a basis).
/// Construction validates the matrix and decides finite type exactly, by
/// symmetrizing and testing positive definiteness over the rationals.
/// Positive roots are enumerated only in finite type; everything that acts
/// through words and reflections works for any generalized Cartan matrix.
class RootSystem {
 public:
  explicit RootSystem(CartanMatrix m);
  explicit RootSystem(const std::string& type) : RootSystem(CartanMatrix::of_type(type)) {}

  int rank() const { return cartan_.rank(); }
  const CartanMatrix& cartan() const { return cartan_; }
  bool finite_type() const { return finite_; }

  /// alpha_i in fundamental-weight coordinates (column i of the Cartan matrix).
  Weight simple_root(int i) const;
  Weight fundamental_weight(int i) const;
  /// Sum of the fundamental weights, i.e. (1, ..., 1).
  Weight rho() const { return rho_; }

  /// Simple reflection r_i applied to a weight.
  Weight reflect(int i, const Weight& w) const;

  /// All positive roots, sorted by height (sum of simple-root coordinates)
  /// and then lexicographically on those coordinates.
  /// Throws unsupported_error unless the matrix is of finite type.
  const std::vector<Weight>& positive_roots() const;
  /// Simple-root coordinates of positive_roots()[k], in the same order.
  const std::vector<std::vector<std::int64_t>>& positive_root_coords() const;
  bool is_positive_root(const Weight& w) const;

  /// Expresses a weight in the simple-root basis. Finite type only.
  RootCoords to_root_coords(const Weight& w) const;

 private:
  void check_index(int i) const;

  CartanMatrix cartan_;
  bool finite_ = false;
  Weight rho_;
  std::vector<Weight> pos_roots_;
  std::vector<std::vector<std::int64_t>> pos_root_coords_;
  std::set<Weight> pos_root_set_;
};

}  // namespace kflag
