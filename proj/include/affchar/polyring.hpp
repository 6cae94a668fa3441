#pragma once

// Sparse integer group-ring elements over affine (or finite) weights, and the
// operators the character formula is built from.

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "affchar/weyl.hpp"

namespace affchar {

enum class Lattice { Affine, Finite };

/// Sum of coef * e^weight. Zero coefficients are never stored; finite-tagged
/// elements keep level = delta = 0 on every key.
class CharElem {
 public:
  using Map = std::unordered_map<AffineWeight, std::int64_t, AffineWeightHash>;
  using Term = std::pair<AffineWeight, std::int64_t>;

  CharElem(int rank, Lattice tag) : rank_(rank), tag_(tag) {}
  static CharElem monomial(const AffineWeight& w, Lattice tag = Lattice::Affine, std::int64_t coef = 1);
  static CharElem monomial(const FiniteWeight& w, std::int64_t coef = 1);

  int rank() const { return rank_; }
  Lattice tag() const { return tag_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }

  std::int64_t coefficient(const AffineWeight& w) const;
  std::int64_t coefficient(const FiniteWeight& w) const { return coefficient(AffineWeight(w)); }
  void add_term(const AffineWeight& w, std::int64_t c);
  void reserve(std::size_t n) { terms_.reserve(n); }

  /// Sum of all coefficients (the dimension, for a character).
  std::int64_t mass() const;
  /// Terms sorted by key; the canonical serialization order.
  std::vector<Term> sorted_terms() const;

  CharElem& operator+=(const CharElem& o);
  CharElem& operator-=(const CharElem& o);
  CharElem& operator*=(std::int64_t s);
  friend CharElem operator+(CharElem a, const CharElem& b) { return a += b; }
  friend CharElem operator-(CharElem a, const CharElem& b) { return a -= b; }
  friend CharElem operator*(std::int64_t s, CharElem a) { return a *= s; }
  friend CharElem operator*(const CharElem& a, const CharElem& b);
  friend bool operator==(const CharElem& a, const CharElem& b);

 private:
  void check_compatible(const CharElem& o) const;

  int rank_;
  Lattice tag_;
  Map terms_;
};

CharElem add(const CharElem& f, const CharElem& g);
CharElem mul(const CharElem& f, const CharElem& g);
/// e^shift * f.
CharElem shift(const CharElem& f, const AffineWeight& by);

/// (f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i}), evaluated by the string rule
/// per monomial. i in {0..n}; f must be affine-tagged.
CharElem demazure(const CharElem& f, int i);
/// D_tau D_{i_1} ... D_{i_k}; D_{i_k} acts first. Rejects non-reduced words.
CharElem demazure_word(const CharElem& f, const ExtendedWeylWord& w);
/// Relabels every key by the linear action of tau.
CharElem twist(const CharElem& f, const Automorphism& tau);
/// Relabels every key by s_i (affine node for affine elements, finite node otherwise).
CharElem reflect(const CharElem& f, int i);
/// e^{Lambda_0} = e^delta = 1.
CharElem specialize(const CharElem& f);
/// Finite-lattice twist by the n-1 <-> n diagram swap.
CharElem swap_spin_finite(const CharElem& f);

/// Worker threads used by the large-element paths. AFFCHAR_THREADS overrides.
unsigned thread_count();

}  // namespace affchar
