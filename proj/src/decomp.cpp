#include "affchar/decomp.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>
#include <unordered_map>

namespace affchar {

namespace {

struct DominantEntry {
  FiniteWeight weight;
  RootCoords depth;  // highest weight minus weight, on simple roots
  std::int64_t mult = 0;
};

int height(const RootCoords& r) { return std::accumulate(r.begin(), r.end(), 0); }

// Dominant weights below mu (reached by subtracting positive roots while
// staying dominant) with their multiplicities, ordered by depth.
std::vector<DominantEntry> dominant_multiplicities(const RootSystem& rs, const FiniteWeight& mu) {
  std::vector<DominantEntry> entries{{mu, RootCoords(rs.rank()), 1}};
  std::unordered_map<FiniteWeight, std::size_t, CoordsHash<WeightTag>> index{{mu, 0}};
  for (std::size_t k = 0; k < entries.size(); ++k) {
    for (std::size_t a = 0; a < rs.positive_roots().size(); ++a) {
      FiniteWeight w = entries[k].weight - rs.positive_root_weights()[a];
      if (!rs.is_dominant(w) || index.count(w)) continue;
      index.emplace(w, entries.size());
      entries.push_back({w, entries[k].depth + rs.positive_roots()[a], 0});
    }
  }
  std::stable_sort(entries.begin() + 1, entries.end(), [](const DominantEntry& a, const DominantEntry& b) {
    return height(a.depth) < height(b.depth);
  });
  index.clear();
  for (std::size_t k = 0; k < entries.size(); ++k) index.emplace(entries[k].weight, k);

  auto mult_of = [&](const FiniteWeight& w) -> std::int64_t {
    auto it = index.find(rs.dominant_representative(w));
    return it == index.end() ? 0 : entries[it->second].mult;
  };

  // Freudenthal: ((mu+rho,mu+rho) - (nu+rho,nu+rho)) m(nu) = 2 sum_{a>0} sum_{k>=1} (nu + k a, a) m(nu + k a),
  // with the left factor written as (mu - nu, mu + nu + 2 rho).
  const FiniteWeight rho = rs.rho();
  for (std::size_t k = 1; k < entries.size(); ++k) {
    const FiniteWeight& nu = entries[k].weight;
    std::int64_t rhs = 0;
    for (std::size_t a = 0; a < rs.positive_roots().size(); ++a) {
      const RootCoords& alpha = rs.positive_roots()[a];
      const FiniteWeight& alpha_w = rs.positive_root_weights()[a];
      FiniteWeight up = nu + alpha_w;
      while (true) {
        const std::int64_t m = mult_of(up);
        if (m == 0) break;
        rhs += m * rs.form(alpha, up);
        up += alpha_w;
      }
    }
    const std::int64_t gap = rs.form(entries[k].depth, mu + nu + 2 * rho);
    if (gap <= 0 || (2 * rhs) % gap != 0)
      throw VerificationFailure("Freudenthal recursion produced a non-integral multiplicity at " + nu.str());
    entries[k].mult = 2 * rhs / gap;
  }
  return entries;
}

using CacheKey = std::tuple<char, int, FiniteWeight>;

}  // namespace

CharElem irreducible_character(const RootSystem& rs, const FiniteWeight& mu) {
  if (mu.rank() != rs.rank() || !rs.is_dominant(mu))
    throw InvalidInput("highest weight " + mu.str() + " is not dominant of rank " + std::to_string(rs.rank()));
  static std::mutex mu_lock;
  static std::map<CacheKey, std::shared_ptr<const CharElem>> cache;
  const CacheKey key{rs.type(), rs.rank(), mu};
  {
    std::lock_guard lock(mu_lock);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  CharElem ch(rs.rank(), Lattice::Finite);
  for (const auto& e : dominant_multiplicities(rs, mu)) {
    if (e.mult == 0) continue;
    for (const auto& w : rs.orbit(e.weight)) ch.add_term(AffineWeight(w), e.mult);
  }
  auto stored = std::make_shared<const CharElem>(ch);
  std::lock_guard lock(mu_lock);
  cache.emplace(key, stored);
  return ch;
}

std::int64_t weyl_dimension(const RootSystem& rs, const FiniteWeight& mu) {
  if (mu.rank() != rs.rank() || !rs.is_dominant(mu))
    throw InvalidInput("highest weight " + mu.str() + " is not dominant of rank " + std::to_string(rs.rank()));
  const FiniteWeight shifted = mu + rs.rho();
  Rational dim(1);
  for (const auto& alpha : rs.positive_roots()) dim *= Rational(rs.form(alpha, shifted), rs.form(alpha, rs.rho()));
  if (dim.denominator() != 1) throw VerificationFailure("Weyl dimension formula gave a fraction");
  return dim.numerator();
}

bool is_weyl_invariant(const RootSystem& rs, const CharElem& f) {
  for (const auto& [w, c] : f.terms())
    for (int i = 1; i <= rs.rank(); ++i)
      if (f.coefficient(AffineWeight(rs.reflect(w.finite, i))) != c) return false;
  return true;
}

DecompositionTable decompose(const RootSystem& rs, const CharElem& f) {
  if (f.tag() != Lattice::Finite) throw InvalidInput("decompose needs a finite-lattice element");
  if (f.rank() != rs.rank()) throw InvalidInput("decompose: rank mismatch");
  if (!is_weyl_invariant(rs, f)) throw VerificationFailure("not a character: input is not Weyl-invariant");

  DecompositionTable table;
  table.dimension = f.mass();
  CharElem residual = f;
  while (!residual.empty()) {
    std::vector<FiniteWeight> dominant;
    for (const auto& [w, c] : residual.terms())
      if (rs.is_dominant(w.finite)) dominant.push_back(w.finite);
    if (dominant.empty()) throw VerificationFailure("not a character: nonzero residual without dominant weights");
    // Dominance-maximal keys; among them the lexicographically largest.
    std::optional<FiniteWeight> pick;
    for (const auto& mu : dominant) {
      bool maximal = true;
      for (const auto& nu : dominant)
        if (!(nu == mu) && rs.dominates(nu, mu)) {
          maximal = false;
          break;
        }
      if (maximal && (!pick || *pick < mu)) pick = mu;
    }
    const std::int64_t m = residual.coefficient(AffineWeight(*pick));
    if (m < 0) throw VerificationFailure("not a character: negative multiplicity at " + pick->str());
    table.mults[*pick] = m;
    residual -= m * irreducible_character(rs, *pick);
  }
  std::int64_t check = 0;
  for (const auto& [mu, m] : table.mults) check += m * weyl_dimension(rs, mu);
  if (check != table.dimension) throw VerificationFailure("decomposition dimension mismatch");
  return table;
}

CharElem irr_character(int n, const FiniteWeight& mu) {
  require_rank(n);
  return irreducible_character(RootSystem::type_d(n), mu);
}

std::int64_t dim_irr(int n, const FiniteWeight& mu) {
  require_rank(n);
  return weyl_dimension(RootSystem::type_d(n), mu);
}

DecompositionTable decompose(const CharElem& f, int n) {
  require_rank(n);
  return decompose(RootSystem::type_d(n), f);
}

CharElem recompose(int n, const DecompositionTable& table) {
  CharElem out(n, Lattice::Finite);
  for (const auto& [mu, m] : table.mults) out += m * irr_character(n, mu);
  return out;
}

namespace {

FiniteWeight top_weight(const RootSystem& rs, const DecompositionTable& t) {
  if (t.mults.empty()) throw InvalidInput("empty decomposition table");
  for (const auto& [mu, m] : t.mults) {
    bool top = true;
    for (const auto& [nu, k] : t.mults)
      if (!rs.dominates(mu, nu)) top = false;
    if (top) return mu;
  }
  throw InvalidInput("decomposition table has no unique top weight");
}

// [A] <= [B]: every mu has m_mu(A) <= m_mu(B), or some nu > mu has m_nu(A) < m_nu(B).
bool le(const RootSystem& rs, const DecompositionTable& a, const DecompositionTable& b) {
  for (const auto& [mu, ma] : a.mults) {
    if (ma <= b.multiplicity(mu)) continue;
    bool rescued = false;
    for (const auto& [nu, mb] : b.mults)
      if (!(nu == mu) && rs.dominates(nu, mu) && a.multiplicity(nu) < mb) {
        rescued = true;
        break;
      }
    if (!rescued) return false;
  }
  return true;
}

}  // namespace

Ordering compare_affinization(int n, const DecompositionTable& a, const DecompositionTable& b) {
  require_rank(n);
  const auto& rs = RootSystem::type_d(n);
  if (!(top_weight(rs, a) == top_weight(rs, b))) throw InvalidInput("tables have different top weights");
  if (a.mults == b.mults) return Ordering::Equal;
  const bool ab = le(rs, a, b), ba = le(rs, b, a);
  if (ab && !ba) return Ordering::Less;
  if (ba && !ab) return Ordering::Greater;
  if (ab && ba) return Ordering::Equal;
  return Ordering::Incomparable;
}

}  // namespace affchar
