#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the library's Freudenthal, Demazure, branching or reduction code; inputs and
// outputs cross the boundary only as plain weights and characters.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "affchar/affinization.hpp"
#include "affchar/spbranch.hpp"

namespace oracle {

using affchar::CharElem;
using affchar::FiniteWeight;
using affchar::Rational;

// Weights in doubled epsilon coordinates: D_n half-spin weights become integral.
using Eps = std::vector<int>;
using EpsChar = std::map<Eps, std::int64_t>;

inline Eps eps_d(const FiniteWeight& w) {
  const int n = w.rank();
  Eps e(n, 0);
  for (int i = 1; i <= n - 2; ++i)
    for (int k = 0; k < i; ++k) e[k] += 2 * w.node(i);
  for (int k = 0; k < n; ++k) {
    e[k] += w.node(n);
    e[k] += (k == n - 1 ? -1 : 1) * w.node(n - 1);
  }
  return e;
}

// C_r with varpi_i = e_1 + ... + e_i; doubled to share the Eps type.
inline Eps eps_c(const FiniteWeight& w) {
  const int r = w.rank();
  Eps e(r, 0);
  for (int i = 1; i <= r; ++i)
    for (int k = 0; k < i; ++k) e[k] += 2 * w.node(i);
  return e;
}

struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;
  int det;
};

// Type D: even number of sign changes; type C: all sign patterns.
inline std::vector<SignedPerm> weyl_group(int rank, char type) {
  std::vector<SignedPerm> out;
  std::vector<int> perm(rank);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = i + 1; j < rank; ++j)
        if (perm[i] > perm[j]) ++inversions;
    for (int mask = 0; mask < (1 << rank); ++mask) {
      const int negs = __builtin_popcount(mask);
      if (type == 'D' && negs % 2) continue;
      SignedPerm g{perm, std::vector<int>(rank), 0};
      for (int k = 0; k < rank; ++k) g.sign[k] = (mask >> k) & 1 ? -1 : 1;
      g.det = ((inversions + (type == 'C' ? negs : 0)) % 2) ? -1 : 1;
      out.push_back(std::move(g));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline Eps act(const SignedPerm& g, const Eps& v) {
  Eps out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[g.perm[k]] = g.sign[k] * v[k];
  return out;
}

inline EpsChar alternant(const std::vector<SignedPerm>& group, const Eps& v) {
  EpsChar a;
  for (const auto& g : group) a[act(g, v)] += g.det;
  for (auto it = a.begin(); it != a.end();) it = it->second == 0 ? a.erase(it) : std::next(it);
  return a;
}

inline EpsChar multiply(const EpsChar& f, const EpsChar& g) {
  EpsChar out;
  for (const auto& [a, x] : f)
    for (const auto& [b, y] : g) {
      Eps s(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
      out[s] += x * y;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline Eps rho_d(int n) {
  Eps r(n);
  for (int k = 0; k < n; ++k) r[k] = 2 * (n - 1 - k);
  return r;
}

inline Eps rho_c(int r) {
  Eps v(r);
  for (int k = 0; k < r; ++k) v[k] = 2 * (r - k);
  return v;
}

/// Weyl character formula as an identity: ch(mu) * A_rho == A_{mu + rho}.
inline bool weyl_formula_holds(const CharElem& ch, const FiniteWeight& mu, char type) {
  const int r = mu.rank();
  const auto group = weyl_group(r, type);
  auto to_eps = [&](const FiniteWeight& w) { return type == 'D' ? eps_d(w) : eps_c(w); };
  const Eps rho = type == 'D' ? rho_d(r) : rho_c(r);
  EpsChar f;
  for (const auto& [w, c] : ch.terms()) f[to_eps(w.finite)] += c;
  Eps shifted = to_eps(mu);
  for (int k = 0; k < r; ++k) shifted[k] += rho[k];
  return multiply(f, alternant(group, rho)) == alternant(group, shifted);
}

/// prod_{i<j} (l_i^2 - l_j^2) / (r_i^2 - r_j^2), l = mu + rho in epsilon coordinates.
inline std::int64_t dim_d(const FiniteWeight& mu) {
  const int n = mu.rank();
  Eps l = eps_d(mu);
  const Eps r = rho_d(n);
  for (int k = 0; k < n; ++k) l[k] += r[k];
  Rational d(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      d *= Rational(std::int64_t(l[i]) * l[i] - std::int64_t(l[j]) * l[j],
                    std::int64_t(r[i]) * r[i] - std::int64_t(r[j]) * r[j]);
  return d.numerator();
}

/// Semistandard tableaux count with entries in 1..letters.
inline std::int64_t hook_content(const std::vector<int>& shape, int letters) {
  std::vector<int> cols(shape.empty() ? 0 : shape[0], 0);
  for (int row : shape)
    for (int c = 0; c < row; ++c) ++cols[c];
  Rational v(1);
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (int j = 0; j < shape[i]; ++j) {
      const int hook = (shape[i] - j - 1) + (cols[j] - static_cast<int>(i) - 1) + 1;
      v *= Rational(letters + j - static_cast<int>(i), hook);
    }
  return v.numerator();
}

/// All semistandard fillings by brute force; returns the content vectors.
inline std::vector<std::vector<int>> ssyt_contents(const std::vector<int>& shape, int letters) {
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (int j = 0; j < shape[i]; ++j) cells.emplace_back(static_cast<int>(i), j);
  std::vector<std::vector<int>> grid(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) grid[i].assign(shape[i], 0);
  std::vector<std::vector<int>> out;
  auto fill = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      std::vector<int> content(letters, 0);
      for (const auto& row : grid)
        for (int v : row) ++content[v - 1];
      out.push_back(content);
      return;
    }
    const auto [i, j] = cells[k];
    for (int v = 1; v <= letters; ++v) {
      if (j > 0 && grid[i][j - 1] > v) continue;
      if (i > 0 && grid[i - 1][j] >= v) continue;
      grid[i][j] = v;
      self(self, k + 1);
    }
    grid[i][j] = 0;
  };
  fill(fill, 0);
  return out;
}

/// Affine length as the inversion count over beta + k delta, 0 <= k <= bound.
inline int inversion_length(const affchar::ExtendedWeylWord& w, int bound) {
  const int n = w.n();
  int count = 0;
  std::vector<affchar::RootCoords> roots = affchar::positive_roots(n);
  const std::size_t positive = roots.size();
  for (std::size_t a = 0; a < positive; ++a) roots.push_back(-roots[a]);
  for (int k = 0; k <= bound; ++k)
    for (const auto& beta : roots) {
      const affchar::AffineRoot r{beta, k};
      if (!affchar::is_positive(r)) continue;
      if (!affchar::is_positive(affchar::act_root(w, r))) ++count;
    }
  return count;
}

/// Random commutation and braid moves; stays a reduced word of the same element.
inline std::vector<int> braid_shuffle(const std::vector<int>& word, int n, std::mt19937_64& rng, int moves) {
  const affchar::RankData affine(n, affchar::CartanKind::AffineD);
  std::vector<int> w = word;
  if (w.size() < 2) return w;
  std::uniform_int_distribution<std::size_t> pos(0, w.size() - 2);
  for (int m = 0; m < moves; ++m) {
    const std::size_t p = pos(rng);
    const int a = w[p], b = w[p + 1];
    if (a == b) continue;
    if (affine.entry(a, b) == 0) {
      std::swap(w[p], w[p + 1]);
    } else if (p + 2 < w.size() && w[p + 2] == a) {
      w[p] = b;
      w[p + 1] = a;
      w[p + 2] = b;
    }
  }
  return w;
}

/// Non-regular exactly when lambda_{n-2} = 0 while the support reaches {1..n-3}, n-1 and n.
inline bool regular(const FiniteWeight& lambda) {
  const int n = lambda.rank();
  bool low = false;
  for (int i = 1; i <= n - 3; ++i) low = low || lambda.node(i) > 0;
  return !(lambda.node(n - 2) == 0 && low && lambda.node(n - 1) > 0 && lambda.node(n) > 0);
}

inline std::vector<FiniteWeight> box(int n, int max_entry) {
  std::vector<FiniteWeight> out;
  FiniteWeight w(n);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(w);
      return;
    }
    for (int v = 0; v <= max_entry; ++v) {
      w[i] = v;
      self(self, i + 1);
    }
    w[i] = 0;
  };
  rec(rec, 0);
  return out;
}

inline std::vector<FiniteWeight> regular_box(int n, int max_entry) {
  std::vector<FiniteWeight> out;
  for (const auto& w : box(n, max_entry))
    if (regular(w)) out.push_back(w);
  return out;
}

inline CharElem random_affine(std::mt19937_64& rng, int n, int max_terms) {
  std::uniform_int_distribution<int> count(1, max_terms), coord(-3, 3), level(-2, 2), delta(-4, 4), coef(-5, 5);
  CharElem f(n, affchar::Lattice::Affine);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    FiniteWeight w(n);
    for (int i = 0; i < n; ++i) w[i] = coord(rng);
    f.add_term(affchar::AffineWeight(w, level(rng), Rational(delta(rng), 2)), coef(rng));
  }
  return f;
}

inline std::string serialize(const CharElem& f) {
  std::string out;
  for (const auto& [w, c] : f.sorted_terms()) out += w.str() + ":" + std::to_string(c) + ";";
  return out;
}

}  // namespace oracle
