#include "affchar/affinization.hpp"

#include <string>

namespace affchar {

namespace {

AffineWeight fundamental(int n, int node, int level = 0) {
  AffineWeight w(FiniteWeight(n), level);
  if (node >= 1) w.finite.node(node) = 1;
  return w;
}

FiniteWeight swapped_spin(const FiniteWeight& w) {
  FiniteWeight out = w;
  const int n = w.rank();
  std::swap(out.node(n - 1), out.node(n));
  return out;
}

XiSequence xi_family_one(int n, const FiniteWeight& lambda) {
  XiSequence xi{n, Family::One, lambda, {}};
  const bool nm1_larger = lambda.node(n - 1) >= lambda.node(n);
  xi.m = nm1_larger ? n - 1 : n;
  xi.m_prime = nm1_larger ? n : n - 1;
  const int big = lambda.node(xi.m), small = lambda.node(xi.m_prime);
  for (int j = 1; j <= n - 2; ++j) xi.entries.push_back(lambda.node(j) * fundamental(n, j, 1));
  xi.entries.push_back(small * (fundamental(n, n - 1) + fundamental(n, n, 1)));
  xi.entries.push_back((big - small) * fundamental(n, xi.m, 1));
  return xi;
}

XiSequence xi_family_n(int n, const FiniteWeight& lambda) {
  XiSequence xi{n, Family::SpinN, lambda, {}};
  const int target = lambda.node(n - 1);
  int block_sum = 0;
  for (int i = 1; i <= n - 3; ++i) block_sum += lambda.node(i);
  int cut = 0;
  if (block_sum >= target) {
    int tail = 0;
    for (int j = n - 3; j >= 1; --j) {
      tail += lambda.node(j);
      if (tail >= target) {
        cut = j;
        break;
      }
    }
  }
  int lambda_bar = target;
  for (int i = cut + 1; i <= n - 3; ++i) lambda_bar -= lambda.node(i);
  xi.cut = cut;
  xi.lambda_bar = lambda_bar;

  const AffineWeight spin = fundamental(n, n - 1);
  for (int j = 1; j <= n; ++j) {
    const int lj = lambda.node(j);
    AffineWeight e{FiniteWeight(n)};
    if (j == n - 1) {
      // stays zero
    } else if (j < cut || j == n - 2 || j == n) {
      e = lj * fundamental(n, j, 1);
    } else if (j == cut) {
      e = lj * fundamental(n, j, 1) + lambda_bar * spin;
    } else {
      e = lj * (fundamental(n, j, 1) + spin);
      if (cut == 0 && j == 1) e += lambda_bar * fundamental(n, n - 1, 1);
    }
    xi.entries.push_back(e);
  }
  return xi;
}

}  // namespace

void require_dominant(int n, const FiniteWeight& lambda) {
  require_rank(n);
  if (lambda.rank() != n)
    throw InvalidInput("weight " + lambda.str() + " has " + std::to_string(lambda.rank()) + " coordinates; expected " +
                       std::to_string(n));
  for (int i = 1; i <= n; ++i)
    if (lambda.node(i) < 0) throw InvalidInput("weight " + lambda.str() + " is not dominant");
}

XiSequence xi_sequence(int n, const FiniteWeight& lambda, Family s) {
  require_dominant(n, lambda);
  switch (s) {
    case Family::One:
      return xi_family_one(n, lambda);
    case Family::SpinN:
      return xi_family_n(n, lambda);
    case Family::SpinNm1: {
      XiSequence xi = xi_family_n(n, swapped_spin(lambda));
      const auto tau = Automorphism::swap_spin(n);
      for (auto& e : xi.entries) e = tau.apply(e);
      xi.s = Family::SpinNm1;
      xi.lambda = lambda;
      return xi;
    }
  }
  throw InvalidInput("unknown family");
}

LambdaSequence lambda_sequence(int n, const FiniteWeight& lambda, Family s) {
  if (s == Family::SpinNm1)
    throw InvalidInput("lambda_sequence covers families 1 and n; family n-1 goes through the spin twist");
  const XiSequence xi = xi_sequence(n, lambda, s);
  const ExtendedWeylWord sigma = sigma_word(n);
  LambdaSequence out{n, s, {}};
  for (int j = 1; j <= n - 1; ++j) out.entries.push_back(act(sigma.pow(-j), xi[j]));
  out.entries.push_back(xi[n]);
  for (int j = 1; j <= n; ++j)
    if (!is_dominant(out[j], true))
      throw VerificationFailure("Lambda_" + std::to_string(j) + " = " + out[j].str() + " is not affine-dominant");
  return out;
}

ExtendedWeylWord nesting_word(int n) { return longest_word(n) * sigma_word(n).pow(n - 1); }

CharElem character(int n, const FiniteWeight& lambda, Family s) {
  require_dominant(n, lambda);
  if (!is_regular(n, lambda))
    throw InvalidInput("weight " + lambda.str() +
                       " is not regular: its support meets every block I_s while lambda_{n-2} = 0, the exceptional "
                       "case without a Demazure formula");
  if (s == Family::SpinNm1) return swap_spin_finite(character(n, swapped_spin(lambda), Family::SpinN));

  const int expected = n * (n - 1) + (n - 1) * (n - 1);
  if (length(nesting_word(n)) != expected)
    throw VerificationFailure("length of w_o sigma^{n-1} is not additive for n = " + std::to_string(n));

  const LambdaSequence big = lambda_sequence(n, lambda, s);
  const ExtendedWeylWord sigma = sigma_word(n);
  const ExtendedWeylWord w0 = longest_word(n);

  CharElem inner = demazure_word(CharElem::monomial(big[n - 1]), sigma);
  for (int j = n - 2; j >= 1; --j) inner = demazure_word(shift(inner, big[j]), sigma);
  inner = demazure_word(shift(inner, big[n]), w0);
  return specialize(inner);
}

FiniteWeight DrinfeldSpec::weight() const {
  FiniteWeight w(n);
  for (const auto& f : factors) w.node(f.node) += f.degree;
  return w;
}

DrinfeldSpec drinfeld(int n, const FiniteWeight& lambda, Family s, int epsilon) {
  require_dominant(n, lambda);
  if (epsilon != 1 && epsilon != -1) throw InvalidInput("epsilon must be +1 or -1");
  auto lam = [&](int i) { return lambda.node(i); };
  // 2 * sum_{1 < j < i} lambda_j
  auto twice_between = [&](int i) {
    int v = 0;
    for (int j = 2; j < i; ++j) v += lam(j);
    return 2 * v;
  };
  DrinfeldSpec spec{n, s, epsilon, {}};
  for (int i = 1; i <= n; ++i) {
    int exponent = 0;
    if (i == 1) {
      exponent = 0;
    } else if (i <= n - 2) {
      exponent = lam(1) + twice_between(i) + lam(i) + i - 1;
    } else if (s == Family::One || i == family_node(s, n)) {
      exponent = lam(1) + twice_between(n - 1) + lam(i) + n - 2;
    } else {
      exponent = lam(1) + twice_between(n - 2) - lam(i) + n - 4;
    }
    if (lam(i) > 0) spec.factors.push_back({i, lam(i), epsilon * exponent});
  }
  return spec;
}

bool is_regular(int n, const FiniteWeight& lambda) {
  require_dominant(n, lambda);
  for (Family s : {Family::One, Family::SpinNm1, Family::SpinN}) {
    bool disjoint = true;
    for (int i : node_block(s, n))
      if (lambda.node(i) > 0) disjoint = false;
    if (disjoint) return true;
  }
  return lambda.node(n - 2) > 0;
}

}  // namespace affchar
