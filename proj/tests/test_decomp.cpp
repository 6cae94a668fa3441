#include <doctest.h>

#include <random>

#include "affchar/decomp.hpp"
#include "oracles.hpp"

using namespace affchar;

namespace {

FiniteWeight fw(int n, int j) { return j == 0 ? FiniteWeight(n) : FiniteWeight::unit(n, j); }

}  // namespace

TEST_CASE("irreducible characters: small cases") {
  CHECK(irr_character(4, FiniteWeight(4)) == CharElem::monomial(FiniteWeight(4)));
  const CharElem v = irr_character(4, fw(4, 1));
  CHECK(v.size() == 8);
  const auto orbit = RootSystem::type_d(4).orbit(fw(4, 1));
  for (const auto& w : orbit) CHECK(v.coefficient(w) == 1);
  const CharElem adj = irr_character(4, fw(4, 2));
  CHECK(adj.mass() == 28);
  CHECK(adj.coefficient(FiniteWeight(4)) == 4);
  CHECK_THROWS_AS(irr_character(4, FiniteWeight{1, -1, 0, 0}), InvalidInput);
}

TEST_CASE("minuscule characters are orbit sums") {
  for (int n = 4; n <= 7; ++n)
    for (int j : {1, n - 1, n}) {
      const CharElem ch = irr_character(n, fw(n, j));
      const auto orbit = RootSystem::type_d(n).orbit(fw(n, j));
      CHECK(ch.size() == orbit.size());
      CHECK(ch.mass() == static_cast<std::int64_t>(orbit.size()));
    }
}

TEST_CASE("Weyl dimension formula") {
  CHECK(dim_irr(4, fw(4, 1)) == 8);
  CHECK(dim_irr(4, 2 * fw(4, 1)) == 35);
  CHECK(dim_irr(4, fw(4, 3) + fw(4, 4)) == 56);
  CHECK(dim_irr(5, fw(5, 5)) == 16);
  for (int n = 4; n <= 5; ++n)
    for (const auto& mu : oracle::box(n, 2)) CHECK(dim_irr(n, mu) == oracle::dim_d(mu));
}

TEST_CASE("Freudenthal characters satisfy the Weyl character formula") {
  for (const auto& mu : oracle::box(4, 2)) {
    const CharElem ch = irr_character(4, mu);
    CHECK(ch.mass() == dim_irr(4, mu));
    CHECK(oracle::weyl_formula_holds(ch, mu, 'D'));
  }
  for (const auto& mu : oracle::box(5, 1)) CHECK(oracle::weyl_formula_holds(irr_character(5, mu), mu, 'D'));
  for (const auto& mu : oracle::box(3, 2)) {
    const CharElem ch = irreducible_character(RootSystem::type_c(3), mu);
    CHECK(oracle::weyl_formula_holds(ch, mu, 'C'));
    CHECK(ch.mass() == weyl_dimension(RootSystem::type_c(3), mu));
  }
}

TEST_CASE("tensor products") {
  const CharElem v = irr_character(4, fw(4, 1));
  const DecompositionTable sq = decompose(v * v, 4);
  CHECK(sq.dimension == 64);
  CHECK(sq.mults.size() == 3);
  CHECK(sq.multiplicity(2 * fw(4, 1)) == 1);
  CHECK(sq.multiplicity(fw(4, 2)) == 1);
  CHECK(sq.multiplicity(FiniteWeight(4)) == 1);

  const DecompositionTable spin = decompose(irr_character(4, fw(4, 3)) * irr_character(4, fw(4, 4)), 4);
  CHECK(spin.mults.size() == 2);
  CHECK(spin.multiplicity(fw(4, 3) + fw(4, 4)) == 1);
  CHECK(spin.multiplicity(fw(4, 1)) == 1);
  CHECK(spin.dimension == 64);
}

TEST_CASE("decompose and recompose are inverse on random tables") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> entry(0, 2), mult(1, 3), count(1, 4);
  for (int n = 4; n <= 5; ++n)
    for (int k = 0; k < 15; ++k) {
      DecompositionTable t;
      for (int c = count(rng); c > 0; --c) {
        FiniteWeight mu(n);
        for (int i = 0; i < n; ++i) mu[i] = n == 4 ? entry(rng) : entry(rng) / 2;
        t.mults[mu] += mult(rng);
      }
      for (const auto& [mu, m] : t.mults) t.dimension += m * dim_irr(n, mu);
      CHECK(decompose(recompose(n, t), n) == t);
    }
  for (const auto& mu : oracle::box(4, 1)) {
    const DecompositionTable t = decompose(irr_character(4, mu), 4);
    CHECK(t.mults.size() == 1);
    CHECK(t.multiplicity(mu) == 1);
  }
}

TEST_CASE("decompose rejects things that are not characters") {
  CharElem lone(4, Lattice::Finite);
  lone.add_term(AffineWeight(fw(4, 1)), 1);
  CHECK_THROWS_AS(decompose(lone, 4), VerificationFailure);
  CHECK_THROWS_AS(decompose(-1 * irr_character(4, fw(4, 1)), 4), VerificationFailure);
  CHECK_THROWS_AS(decompose(irr_character(4, fw(4, 2)) - irr_character(4, FiniteWeight(4)) -
                                irr_character(4, FiniteWeight(4)),
                            4),
                  VerificationFailure);
  CHECK_THROWS_AS(decompose(CharElem::monomial(AffineWeight::lambda0(4)), 4), InvalidInput);
}

TEST_CASE("affinization order") {
  DecompositionTable a;
  a.mults = {{fw(4, 2), 1}, {FiniteWeight(4), 2}};
  DecompositionTable b;
  b.mults = {{fw(4, 2), 1}, {FiniteWeight(4), 1}};
  CHECK(compare_affinization(4, a, a) == Ordering::Equal);
  CHECK(compare_affinization(4, b, a) == Ordering::Less);
  CHECK(compare_affinization(4, a, b) == Ordering::Greater);
  DecompositionTable c;
  c.mults = {{fw(4, 1), 1}};
  CHECK_THROWS_AS(compare_affinization(4, a, c), InvalidInput);

  // a larger multiplicity lower down is outweighed by a smaller one above it
  const FiniteWeight top = fw(4, 1) + fw(4, 3) + fw(4, 4);
  DecompositionTable p, q;
  p.mults = {{top, 1}, {fw(4, 2), 1}, {FiniteWeight(4), 5}};
  q.mults = {{top, 1}, {fw(4, 2), 2}, {FiniteWeight(4), 1}};
  CHECK(compare_affinization(4, p, q) == Ordering::Less);

  const FiniteWeight full{1, 1, 1, 1};
  const auto t1 = decompose(character(4, full, Family::One), 4);
  const auto tn = decompose(character(4, full, Family::SpinN), 4);
  CHECK(compare_affinization(4, t1, tn) != Ordering::Equal);
}
