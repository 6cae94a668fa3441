#pragma once

// Irreducible characters by Freudenthal's recursion, the Weyl dimension
// formula, and decomposition of characters into irreducibles.

#include <cstdint>
#include <map>

#include "affchar/polyring.hpp"

namespace affchar {

struct DecompositionTable {
  std::map<FiniteWeight, std::int64_t> mults;
  std::int64_t dimension = 0;

  std::int64_t multiplicity(const FiniteWeight& mu) const {
    auto it = mults.find(mu);
    return it == mults.end() ? 0 : it->second;
  }
  friend bool operator==(const DecompositionTable&, const DecompositionTable&) = default;
};

/// Generic versions over any finite root system (used for D_n and C_r).
CharElem irreducible_character(const RootSystem& rs, const FiniteWeight& mu);
std::int64_t weyl_dimension(const RootSystem& rs, const FiniteWeight& mu);
DecompositionTable decompose(const RootSystem& rs, const CharElem& f);
bool is_weyl_invariant(const RootSystem& rs, const CharElem& f);

/// Type D_n entry points.
CharElem irr_character(int n, const FiniteWeight& mu);
std::int64_t dim_irr(int n, const FiniteWeight& mu);
DecompositionTable decompose(const CharElem& f, int n);
/// sum m_mu * irr_character(mu).
CharElem recompose(int n, const DecompositionTable& table);

enum class Ordering { Equal, Less, Greater, Incomparable };

/// [A] <= [B] in the affinization order; both tables must share their top weight.
Ordering compare_affinization(int n, const DecompositionTable& a, const DecompositionTable& b);

}  // namespace affchar
