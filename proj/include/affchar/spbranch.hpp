#pragma once

// Multiplicities of the family-1 minimal affinization through the symplectic
// side: Schur functors of the standard C_{n-1} module and their decomposition.
// Shares no code path with the Demazure pipeline below the decomposition layer.

#include <cstdint>
#include <map>
#include <vector>

#include "affchar/decomp.hpp"

namespace affchar {

/// C_{n-1} weight on the fundamental weights varpi_i^sp = e_1 + ... + e_i.
struct SpWeight {
  FiniteWeight coords;

  int rank() const { return coords.rank(); }
  friend bool operator==(const SpWeight&, const SpWeight&) = default;
  friend bool operator<(const SpWeight& a, const SpWeight& b) { return a.coords < b.coords; }
};

/// Weakly decreasing, nonnegative parts; trailing zeros kept.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);
  const std::vector<int>& parts() const { return parts_; }
  int length() const;  // number of nonzero parts
  int size() const;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

SpWeight iota(int n, const FiniteWeight& mu);
Partition partition_of(const SpWeight& nu);

/// Converts e-coordinates (a_1..a_r) to fundamental-weight coordinates of C_r.
FiniteWeight sp_from_epsilon(const std::vector<int>& eps);

/// Schur polynomial s_p at the 2r weights {+-e_i} as a C_r character.
CharElem schur_char(const Partition& p, int rank);
std::map<SpWeight, std::int64_t> decompose_sp(const CharElem& f, int rank);

/// [L_q(pi_1) : V_q(mu)] via the symplectic side. lambda must be regular.
std::int64_t sam_mult(int n, const FiniteWeight& lambda, const FiniteWeight& mu);
/// Every nonzero sam_mult, with D_n dimensions; the whole predicted table.
DecompositionTable sam_table(int n, const FiniteWeight& lambda);

}  // namespace affchar
