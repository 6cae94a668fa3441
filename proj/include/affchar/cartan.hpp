#pragma once

// Cartan data for D_n, D_n^(1) and C_{n-1}, the invariant form on affine
// weights, and the root subsets used by the minimal-affinization formulas.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "affchar/types.hpp"

namespace affchar {

enum class CartanKind { FiniteD, AffineD, FiniteC };

/// A Cartan matrix together with its node labels.
/// entry(i, j) = <alpha_i^vee, alpha_j>, indexed by node label.
class RankData {
 public:
  /// D_n on nodes {1..n}; D_n^(1) on {0..n}; C_{n-1} on {1..n-1}. All require n >= 4.
  RankData(int n, CartanKind kind);

  int n() const { return n_; }
  CartanKind kind() const { return kind_; }
  const std::vector<int>& nodes() const { return nodes_; }
  int entry(int i, int j) const { return matrix_[index(i)][index(j)]; }

 private:
  int index(int node) const { return kind_ == CartanKind::AffineD ? node : node - 1; }

  int n_;
  CartanKind kind_;
  std::vector<int> nodes_;
  std::vector<std::vector<int>> matrix_;
};

/// Finite root system of type D_r or C_r, in the coordinates the rest of the
/// library uses: weights on fundamental weights, roots on simple roots.
/// The invariant form is normalized so that short roots have square length 2.
class RootSystem {
 public:
  static const RootSystem& type_d(int rank);
  static const RootSystem& type_c(int rank);

  int rank() const { return rank_; }
  char type() const { return type_; }
  int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }
  int symmetrizer(int i) const { return sym_[i - 1]; }

  /// Sorted by height, then lexicographically.
  const std::vector<RootCoords>& positive_roots() const { return positive_; }
  const std::vector<FiniteWeight>& positive_root_weights() const { return positive_w_; }
  bool is_positive_root(const RootCoords& r) const { return positive_set_.count(r) != 0; }
  const RootCoords& highest_root() const { return positive_.back(); }

  FiniteWeight to_weight(const RootCoords& r) const;
  /// Inverse of to_weight; empty when w is not in the root lattice.
  std::optional<RootCoords> to_root(const FiniteWeight& w) const;

  /// (r, w) for r in the root lattice; integral.
  std::int64_t form(const RootCoords& r, const FiniteWeight& w) const;
  Rational form(const FiniteWeight& a, const FiniteWeight& b) const;

  FiniteWeight rho() const;
  bool is_dominant(const FiniteWeight& w) const;
  FiniteWeight reflect(const FiniteWeight& w, int i) const;
  FiniteWeight dominant_representative(const FiniteWeight& w) const;
  /// a >= b in dominance order: a - b is a nonnegative integer combination of simple roots.
  bool dominates(const FiniteWeight& a, const FiniteWeight& b) const;
  /// Orbit of a dominant weight, sorted.
  std::vector<FiniteWeight> orbit(const FiniteWeight& dominant) const;

 private:
  RootSystem(int rank, char type);

  int rank_;
  char type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sym_;
  std::vector<std::vector<Rational>> inverse_;
  // inverse_ scaled to integers by the lcm of its denominators
  std::vector<std::vector<std::int64_t>> inverse_scaled_;
  std::int64_t inverse_scale_ = 1;
  std::vector<RootCoords> positive_;
  std::vector<FiniteWeight> positive_w_;
  std::set<RootCoords> positive_set_;
};

/// Which equivalence class of minimal affinizations: s in {1, n-1, n}.
enum class Family { One, SpinNm1, SpinN };

int family_node(Family s, int n);
Family family_from_node(int node, int n);
/// Parses "1", "n-1", "n" (or the resolved integer node).
Family parse_family(const std::string& text, int n);
std::string family_label(Family s);

void require_rank(int n);

/// Positive roots of D_n from the interval enumeration; n(n-1) roots.
std::vector<RootCoords> positive_roots(int n);
/// alpha_p + ... + alpha_q, with alpha_{n-1} replaced by alpha_n when q = n.
RootCoords alpha_interval(int n, int p, int q);
/// I_s: {1..n-3}, {n-1} or {n}.
std::vector<int> node_block(Family s, int n);
/// Union over r != s of positive roots supported away from I_r.
std::vector<RootCoords> delta_plus_s(int n, Family s);

/// Indices with strictly positive coordinate.
std::set<int> support(const FiniteWeight& w);
/// Support of a positive root; throws on a root with a negative coordinate.
std::set<int> support(const RootCoords& r);

/// Coefficients of theta^vee on alpha_i^vee, i = 0..n (a_0 = 1).
std::vector<int> marks(int n);
/// <alpha_i^vee, x> for i in {0..n}; independent of x.delta.
int pairing(int i, const AffineWeight& x);
/// alpha_i as an affine weight, i in {0..n}; alpha_0 = delta - theta.
AffineWeight simple_root(int n, int i);
/// Finite root beta + k delta, written as an affine weight.
AffineWeight root_weight(const AffineRoot& r);
/// The invariant form with (alpha, alpha) = 2 on real roots.
Rational bilinear(const AffineWeight& x, const AffineWeight& y);
/// Positivity of beta + k delta: k > 0, or k = 0 and beta in Delta_+.
bool is_positive(const AffineRoot& r);

}  // namespace affchar
