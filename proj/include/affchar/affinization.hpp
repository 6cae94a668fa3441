#pragma once

// Regular minimal affinizations of type D_n: the weight sequences xi_j and
// Lambda_j, the nested Demazure character, and Drinfeld-polynomial data.

#include <optional>
#include <vector>

#include "affchar/polyring.hpp"

namespace affchar {

struct XiSequence {
  int n = 0;
  Family s = Family::One;
  FiniteWeight lambda;
  std::vector<AffineWeight> entries;  // xi_1..xi_n at index 0..n-1

  // Family 1: the spin nodes with the larger / smaller coefficient.
  int m = 0;
  int m_prime = 0;
  // Families n-1, n: the cut index and lambda-bar, computed for the
  // weight actually fed to the s = n rule (tau_{n-1,n} lambda when s = n-1).
  int cut = 0;
  int lambda_bar = 0;

  const AffineWeight& operator[](int j) const { return entries[j - 1]; }
};

struct LambdaSequence {
  int n = 0;
  Family s = Family::One;
  std::vector<AffineWeight> entries;  // Lambda_1..Lambda_n at index 0..n-1

  const AffineWeight& operator[](int j) const { return entries[j - 1]; }
};

struct DrinfeldFactor {
  int node = 0;
  int degree = 0;
  int offset = 0;  // a_node = a * q^offset

  friend bool operator==(const DrinfeldFactor&, const DrinfeldFactor&) = default;
};

/// prod_i pi^{(i)}_{m_i, a q^{c_i}} relative to a symbolic base a.
struct DrinfeldSpec {
  int n = 0;
  Family s = Family::One;
  int epsilon = 1;
  std::vector<DrinfeldFactor> factors;  // by node; degree-0 factors omitted

  FiniteWeight weight() const;
  friend bool operator==(const DrinfeldSpec& a, const DrinfeldSpec& b) { return a.factors == b.factors; }
};

/// Throws InvalidInput unless lambda has rank n and is dominant.
void require_dominant(int n, const FiniteWeight& lambda);

XiSequence xi_sequence(int n, const FiniteWeight& lambda, Family s);
/// Lambda_j = sigma^{-j} xi_j (j < n), Lambda_n = xi_n. Only s in {1, n}.
LambdaSequence lambda_sequence(int n, const FiniteWeight& lambda, Family s);

/// The composite w_o sigma^{n-1} whose length additivity licenses the nesting.
ExtendedWeylWord nesting_word(int n);

/// Finite character of the minimal affinization in family s. Rejects
/// non-dominant and non-regular weights.
CharElem character(int n, const FiniteWeight& lambda, Family s);

DrinfeldSpec drinfeld(int n, const FiniteWeight& lambda, Family s, int epsilon);

bool is_regular(int n, const FiniteWeight& lambda);

}  // namespace affchar
