#include <doctest.h>

#include <random>

#include "affchar/decomp.hpp"
#include "oracles.hpp"

using namespace affchar;

namespace {

FiniteWeight fw(int n, int j) { return j == 0 ? FiniteWeight(n) : FiniteWeight::unit(n, j); }

AffineWeight lvl1(const FiniteWeight& f) { return AffineWeight(f, 1); }

FiniteWeight random_dominant(std::mt19937_64& rng, int n, int max_entry) {
  std::uniform_int_distribution<int> c(0, max_entry);
  FiniteWeight w(n);
  for (int i = 0; i < n; ++i) w[i] = c(rng);
  return w;
}

FiniteWeight swapped(const FiniteWeight& w) {
  FiniteWeight out = w;
  std::swap(out.node(w.rank() - 1), out.node(w.rank()));
  return out;
}

// Nested formula with w_j = s_{j-1} ... s_1 tau_{0,1} in place of sigma, family 1.
// Lambda'_j is recomputed as w_{[1,j]}^{-1} xi_j so that the product lands on xi_j exactly.
CharElem alternative_family_one(int n, const FiniteWeight& lambda) {
  const XiSequence xi = xi_sequence(n, lambda, Family::One);
  std::vector<ExtendedWeylWord> w;
  for (int j = 1; j <= n - 1; ++j) {
    ExtendedWeylWord e = ExtendedWeylWord::identity(n);
    for (int k = j - 1; k >= 1; --k) e = e * ExtendedWeylWord::reflection(n, k);
    w.push_back(e * ExtendedWeylWord(Automorphism::swap01(n), {}));
  }
  std::vector<AffineWeight> big(n + 1);
  ExtendedWeylWord prefix = ExtendedWeylWord::identity(n);
  for (int j = 1; j <= n - 1; ++j) {
    prefix = prefix * w[j - 1];
    big[j] = act(prefix.inverse(), xi[j]);
  }
  big[n] = xi[n];
  for (int j = 1; j <= n; ++j) REQUIRE(is_dominant(big[j], true));
  int total = length(longest_word(n));
  for (const auto& e : w) total += length(e);
  REQUIRE(length(longest_word(n) * prefix) == total);
  const auto reduced = [](const ExtendedWeylWord& e) { return reduce(e); };
  CharElem inner = demazure_word(CharElem::monomial(big[n - 1]), reduced(w[n - 2]));
  for (int j = n - 2; j >= 1; --j) inner = demazure_word(shift(inner, big[j]), reduced(w[j - 1]));
  inner = demazure_word(shift(inner, big[n]), longest_word(n));
  return specialize(inner);
}

}  // namespace

TEST_CASE("xi sequence: family 1 worked example") {
  const XiSequence xi = xi_sequence(4, FiniteWeight{0, 0, 1, 2}, Family::One);
  CHECK(xi.m == 4);
  CHECK(xi.m_prime == 3);
  CHECK(xi[1] == AffineWeight(FiniteWeight(4)));
  CHECK(xi[2] == AffineWeight(FiniteWeight(4)));
  CHECK(xi[3] == lvl1(fw(4, 3) + fw(4, 4)));
  CHECK(xi[4] == lvl1(fw(4, 4)));
}

TEST_CASE("xi sequence: family n worked example") {
  const XiSequence xi = xi_sequence(5, FiniteWeight{1, 1, 0, 2, 0}, Family::SpinN);
  CHECK(xi.cut == 1);
  CHECK(xi.lambda_bar == 1);
  CHECK(xi.entries.size() == 5);
  CHECK(xi[1] == lvl1(fw(5, 1) + fw(5, 4)));
  CHECK(xi[2] == lvl1(fw(5, 2) + fw(5, 4)));
  for (int j = 3; j <= 5; ++j) CHECK(xi[j] == AffineWeight(FiniteWeight(5)));
}

TEST_CASE("xi entries sum to lambda modulo Lambda_0 and delta, and Lambda entries are dominant") {
  std::mt19937_64 rng(31);
  for (int n = 4; n <= 7; ++n)
    for (int k = 0; k < 40; ++k) {
      const FiniteWeight lambda = random_dominant(rng, n, 3);
      for (Family s : {Family::One, Family::SpinNm1, Family::SpinN}) {
        const XiSequence xi = xi_sequence(n, lambda, s);
        AffineWeight total{FiniteWeight(n)};
        for (const auto& e : xi.entries) total += e;
        CHECK(total.finite == lambda);
      }
      for (Family s : {Family::One, Family::SpinN}) {
        const LambdaSequence big = lambda_sequence(n, lambda, s);
        const XiSequence xi = xi_sequence(n, lambda, s);
        for (int j = 1; j <= n; ++j) CHECK(is_dominant(big[j], true));
        for (int j = 1; j <= n - 1; ++j) CHECK(act(sigma_word(n).pow(j), big[j]) == xi[j]);
        CHECK(big[n] == xi[n]);
      }
    }
}

TEST_CASE("Lambda entries match their level-and-spin description modulo delta") {
  std::mt19937_64 rng(32);
  for (int n = 4; n <= 7; ++n)
    for (int k = 0; k < 40; ++k) {
      const FiniteWeight lambda = random_dominant(rng, n, 3);
      const auto one = lambda_sequence(n, lambda, Family::One);
      const auto xi1 = xi_sequence(n, lambda, Family::One);
      for (int j = 1; j <= n - 2; ++j) CHECK(one[j].congruent_mod_delta(lambda.node(j) * AffineWeight::lambda0(n)));
      CHECK(one[n - 1].congruent_mod_delta(lambda.node(xi1.m_prime) * AffineWeight::lambda0(n)));

      const auto spin = lambda_sequence(n, lambda, Family::SpinN);
      const auto xin = xi_sequence(n, lambda, Family::SpinN);
      const int cut = xin.cut, bar = xin.lambda_bar;
      for (int j = 1; j <= n - 2; ++j) {
        AffineWeight expect{FiniteWeight(n)};
        if (j < cut || j == n - 2) {
          expect = lambda.node(j) * AffineWeight::lambda0(n);
        } else if (j == cut) {
          expect = lambda.node(j) * AffineWeight::lambda0(n) + bar * AffineWeight(fw(n, n - 1));
        } else {
          expect = lambda.node(j) * lvl1(fw(n, n - 1));
          if (cut == 0 && j == 1) expect += bar * lvl1(fw(n, n));
        }
        CHECK(spin[j].congruent_mod_delta(expect));
      }
    }
}

TEST_CASE("small characters") {
  CHECK(character(4, FiniteWeight(4), Family::One) == CharElem::monomial(FiniteWeight(4)));
  for (Family s : {Family::One, Family::SpinNm1, Family::SpinN}) {
    const CharElem v = character(4, fw(4, 1), s);
    CHECK(v.size() == 8);
    CHECK(v.mass() == 8);
    const CharElem adj = character(4, fw(4, 2), s);
    CHECK(adj.mass() == 29);
    CHECK(adj.coefficient(FiniteWeight(4)) == 5);
  }
}

TEST_CASE("characters are W-invariant with top coefficient 1") {
  for (const auto& lambda : oracle::regular_box(4, 1))
    for (Family s : {Family::One, Family::SpinNm1, Family::SpinN}) {
      const CharElem ch = character(4, lambda, s);
      CHECK(ch.coefficient(lambda) == 1);
      CHECK(is_weyl_invariant(RootSystem::type_d(4), ch));
      for (const auto& [w, c] : ch.terms()) {
        CHECK(c > 0);
        CHECK(RootSystem::type_d(4).dominates(lambda, RootSystem::type_d(4).dominant_representative(w.finite)));
      }
    }
}

TEST_CASE("families collapse when the support misses a block") {
  for (int n = 4; n <= 5; ++n)
    for (const auto& lambda : oracle::box(n, n == 4 ? 2 : 1)) {
      if (lambda.node(n) == 0) CHECK(oracle::serialize(character(n, lambda, Family::One)) ==
                                     oracle::serialize(character(n, lambda, Family::SpinNm1)));
      if (lambda.node(n - 1) == 0) CHECK(oracle::serialize(character(n, lambda, Family::One)) ==
                                         oracle::serialize(character(n, lambda, Family::SpinN)));
      bool low = false;
      for (int i = 1; i <= n - 3; ++i) low = low || lambda.node(i) > 0;
      if (!low) CHECK(oracle::serialize(character(n, lambda, Family::SpinNm1)) ==
                      oracle::serialize(character(n, lambda, Family::SpinN)));
    }
}

TEST_CASE("family n-1 is the spin twist of family n") {
  for (const auto& lambda : oracle::regular_box(5, 1))
    CHECK(character(5, lambda, Family::SpinNm1) == swap_spin_finite(character(5, swapped(lambda), Family::SpinN)));
}

TEST_CASE("an alternative admissible word sequence yields the same family-1 character") {
  for (int n = 4; n <= 5; ++n)
    for (const auto& lambda : oracle::regular_box(n, 1)) CHECK(alternative_family_one(n, lambda) == character(n, lambda, Family::One));
}

TEST_CASE("regularity") {
  CHECK(is_regular(4, fw(4, 2)));
  CHECK_FALSE(is_regular(4, FiniteWeight{1, 0, 1, 1}));
  CHECK(is_regular(4, FiniteWeight{1, 1, 1, 1}));
  for (int n = 4; n <= 6; ++n)
    for (const auto& w : oracle::box(n, 2)) CHECK(is_regular(n, w) == oracle::regular(w));
  CHECK_THROWS_AS(character(4, FiniteWeight{1, 0, 1, 1}, Family::One), InvalidInput);
  CHECK_THROWS_AS(character(4, FiniteWeight{1, 0, -1, 1}, Family::One), InvalidInput);
  CHECK_THROWS_AS(xi_sequence(4, FiniteWeight{1, 0, 0}, Family::One), InvalidInput);
}

TEST_CASE("Drinfeld data") {
  for (int n = 4; n <= 6; ++n) {
    const DrinfeldSpec d = drinfeld(n, fw(n, 1), Family::One, 1);
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0] == DrinfeldFactor{1, 1, 0});
  }
  const DrinfeldSpec d = drinfeld(4, FiniteWeight{1, 1, 0, 0}, Family::One, 1);
  REQUIRE(d.factors.size() == 2);
  CHECK(d.factors[1] == DrinfeldFactor{2, 1, 3});
  CHECK(drinfeld(4, FiniteWeight{1, 1, 0, 0}, Family::One, -1).factors[1].offset == -3);
  CHECK_THROWS_AS(drinfeld(4, fw(4, 1), Family::One, 0), InvalidInput);

  std::mt19937_64 rng(33);
  for (int n = 4; n <= 7; ++n)
    for (int k = 0; k < 30; ++k) {
      const FiniteWeight lambda = random_dominant(rng, n, 3);
      for (Family s : {Family::One, Family::SpinNm1, Family::SpinN}) CHECK(drinfeld(n, lambda, s, 1).weight() == lambda);
      FiniteWeight no_n = lambda;
      no_n.node(n) = 0;
      for (int eps : {1, -1}) CHECK(drinfeld(n, no_n, Family::One, eps) == drinfeld(n, no_n, Family::SpinNm1, eps));
    }
}

TEST_CASE("nesting word is length-additive") {
  for (int n = 4; n <= 7; ++n) CHECK(length(nesting_word(n)) == n * (n - 1) + (n - 1) * (n - 1));
}
