#include "affchar/verify.hpp"

#include <exception>
#include <functional>
#include <random>
#include <sstream>

#include "affchar/affinization.hpp"
#include "affchar/spbranch.hpp"

namespace affchar {

Suite parse_suite(const std::string& text) {
  if (text == "demazure") return Suite::Demazure;
  if (text == "weyl") return Suite::Weyl;
  if (text == "pipeline") return Suite::Pipeline;
  if (text == "all") return Suite::All;
  throw InvalidInput("suite '" + text + "' must be one of demazure, weyl, pipeline, all");
}

std::string suite_label(Suite s) {
  switch (s) {
    case Suite::Demazure:
      return "demazure";
    case Suite::Weyl:
      return "weyl";
    case Suite::Pipeline:
      return "pipeline";
    case Suite::All:
      return "all";
  }
  return "?";
}

namespace {

class Recorder {
 public:
  explicit Recorder(std::vector<CheckResult>& out) : out_(out) {}

  // fn returns an empty string on success, otherwise the failure detail.
  void check(const std::string& suite, const std::string& name, const std::function<std::string()>& fn) {
    CheckResult r{suite, name, false, ""};
    try {
      r.detail = fn();
      r.passed = r.detail.empty();
      if (r.passed) r.detail = "ok";
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::vector<CheckResult>& out_;
};

CharElem random_affine(std::mt19937_64& rng, int n, int max_terms) {
  std::uniform_int_distribution<int> count(1, max_terms), coord(-3, 3), level(-2, 2), delta(-2, 2), coef(-4, 4);
  CharElem f(n, Lattice::Affine);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    FiniteWeight w(n);
    for (int i = 0; i < n; ++i) w[i] = coord(rng);
    f.add_term(AffineWeight(w, level(rng), Rational(delta(rng))), coef(rng));
  }
  return f;
}

ExtendedWeylWord random_element(std::mt19937_64& rng, int n, int max_letters) {
  std::uniform_int_distribution<int> letters(0, max_letters), node(0, n), tau(0, 3);
  std::vector<int> word(letters(rng));
  for (int& x : word) x = node(rng);
  Automorphism t = Automorphism::identity(n);
  const int pick = tau(rng);
  if (pick & 1) t = t * Automorphism::swap01(n);
  if (pick & 2) t = t * Automorphism::swap_spin(n);
  return reduce(ExtendedWeylWord(t, word));
}

void demazure_suite(Recorder& rec, int n, std::mt19937_64& rng) {
  std::vector<CharElem> corpus;
  for (int k = 0; k < 40; ++k) corpus.push_back(random_affine(rng, n, 20));

  rec.check("demazure", "defining identity (1 - e^{-alpha_i}) D_i f = f - e^{-alpha_i} s_i f", [&]() -> std::string {
    for (std::size_t k = 0; k < corpus.size(); ++k)
      for (int i = 0; i <= n; ++i) {
        const CharElem neg = CharElem::monomial(-simple_root(n, i));
        const CharElem one = CharElem::monomial(AffineWeight(FiniteWeight(n)));
        const CharElem lhs = mul(one - neg, demazure(corpus[k], i));
        const CharElem rhs = corpus[k] - mul(neg, reflect(corpus[k], i));
        if (!(lhs == rhs)) return "mismatch at sample " + std::to_string(k) + ", node " + std::to_string(i);
      }
    return "";
  });
  rec.check("demazure", "idempotency D_i D_i = D_i", [&]() -> std::string {
    for (std::size_t k = 0; k < corpus.size(); ++k)
      for (int i = 0; i <= n; ++i) {
        const CharElem once = demazure(corpus[k], i);
        if (!(demazure(once, i) == once)) return "mismatch at sample " + std::to_string(k) + ", node " + std::to_string(i);
      }
    return "";
  });
  rec.check("demazure", "reduced-word independence", [&]() -> std::string {
    for (int k = 0; k < 20; ++k) {
      const ExtendedWeylWord a = random_element(rng, n, 10);
      // Reducing the inverse and inverting back yields a right-greedy word.
      const ExtendedWeylWord b = reduce(reduce(a.inverse()).inverse());
      if (!(a == b) || a.word().size() != b.word().size()) return "alternate word is not a reduced word of the same element";
      const CharElem f = corpus[k % corpus.size()];
      if (!(demazure_word(f, a) == demazure_word(f, b))) return "operators differ for sample " + std::to_string(k);
    }
    return "";
  });
}

FiniteWeight fundamental(int n, int j) { return j == 0 ? FiniteWeight(n) : FiniteWeight::unit(n, j); }

void weyl_suite(Recorder& rec, int n) {
  rec.check("weyl", "sigma on varpi_j + Lambda_0 mod delta", [&]() -> std::string {
    const ExtendedWeylWord sigma = sigma_word(n);
    for (int j = 0; j <= n; ++j) {
      FiniteWeight expected(n);
      if (j <= n - 3) expected = fundamental(n, j + 1);
      else if (j == n - 2) expected = fundamental(n, n - 1) + fundamental(n, n);
      else if (j == n - 1) expected = fundamental(n, n - 1) + fundamental(n, 1);
      else expected = fundamental(n, n - 1);
      const AffineWeight got = act(sigma, AffineWeight(fundamental(n, j), 1));
      if (!got.congruent_mod_delta(AffineWeight(expected, 1)))
        return "j = " + std::to_string(j) + ": got " + got.str() + ", expected " + AffineWeight(expected, 1).str();
    }
    const AffineWeight spin = act(sigma, AffineWeight(fundamental(n, n - 1)));
    if (!spin.congruent_mod_delta(AffineWeight(fundamental(n, n - 1)))) return "sigma(varpi_{n-1}) = " + spin.str();
    return "";
  });
  rec.check("weyl", "length additivity of w_o sigma^{n-1}", [&]() -> std::string {
    const int lw = length(longest_word(n)), ls = length(sigma_word(n)), lt = length(nesting_word(n));
    if (lw != n * (n - 1) || ls != n - 1 || lt != lw + (n - 1) * ls)
      return "l(w_o) = " + std::to_string(lw) + ", l(sigma) = " + std::to_string(ls) + ", l(w_o sigma^{n-1}) = " +
             std::to_string(lt);
    return "";
  });
  rec.check("weyl", "Freudenthal mass equals Weyl dimension (entries <= 1)", [&]() -> std::string {
    for (int mask = 0; mask < (1 << n); ++mask) {
      FiniteWeight mu(n);
      for (int i = 0; i < n; ++i) mu[i] = (mask >> i) & 1;
      const std::int64_t mass = irr_character(n, mu).mass(), dim = dim_irr(n, mu);
      if (mass != dim) return mu.str() + ": mass " + std::to_string(mass) + " vs dimension " + std::to_string(dim);
    }
    return "";
  });
  rec.check("weyl", "varpi_{n-1} tensor varpi_n = (varpi_{n-1} + varpi_n) + lower terms", [&]() -> std::string {
    const FiniteWeight a = fundamental(n, n - 1), b = fundamental(n, n);
    const DecompositionTable t = decompose(irr_character(n, a) * irr_character(n, b), n);
    if (t.multiplicity(a + b) != 1) return "top multiplicity " + std::to_string(t.multiplicity(a + b));
    if (t.dimension != dim_irr(n, a) * dim_irr(n, b)) return "dimension " + std::to_string(t.dimension);
    if (n == 4 && (t.mults.size() != 2 || t.multiplicity(fundamental(n, 1)) != 1)) return "expected {varpi_3 + varpi_4, varpi_1}";
    return "";
  });
}

std::vector<FiniteWeight> regular_binary_weights(int n) {
  std::vector<FiniteWeight> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    FiniteWeight lambda(n);
    for (int i = 0; i < n; ++i) lambda[i] = (mask >> i) & 1;
    if (is_regular(n, lambda)) out.push_back(lambda);
  }
  return out;
}

void pipeline_suite(Recorder& rec, int n) {
  const std::vector<FiniteWeight> weights = regular_binary_weights(n);
  rec.check("pipeline", "xi congruence and Lambda dominance", [&]() -> std::string {
    for (const auto& lambda : weights)
      for (Family s : {Family::One, Family::SpinNm1, Family::SpinN}) {
        const XiSequence xi = xi_sequence(n, lambda, s);
        AffineWeight total{FiniteWeight(n)};
        for (const auto& e : xi.entries) total += e;
        if (!(total.finite == lambda)) return "sum of xi for " + lambda.str() + " is " + total.str();
        if (s != Family::SpinNm1) {
          const LambdaSequence big = lambda_sequence(n, lambda, s);
          for (const auto& e : big.entries)
            if (!is_dominant(e, true)) return "Lambda entry " + e.str() + " not dominant";
        }
      }
    return "";
  });
  rec.check("pipeline", "Demazure table equals symplectic table (family 1)", [&]() -> std::string {
    for (const auto& lambda : weights) {
      const CharElem ch = character(n, lambda, Family::One);
      if (ch.coefficient(lambda) != 1) return lambda.str() + ": coefficient of lambda is " + std::to_string(ch.coefficient(lambda));
      const DecompositionTable demazure = decompose(ch, n);
      const DecompositionTable sam = sam_table(n, lambda);
      if (!(demazure == sam)) {
        std::ostringstream os;
        os << lambda.str() << ": Demazure dimension " << demazure.dimension << " vs symplectic " << sam.dimension;
        return os.str();
      }
    }
    return "";
  });
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, int n, std::uint64_t seed) {
  require_rank(n);
  std::vector<CheckResult> out;
  Recorder rec(out);
  std::mt19937_64 rng(seed);
  if (suite == Suite::Demazure || suite == Suite::All) demazure_suite(rec, n, rng);
  if (suite == Suite::Weyl || suite == Suite::All) weyl_suite(rec, n);
  if (suite == Suite::Pipeline || suite == Suite::All) pipeline_suite(rec, n);
  return out;
}

}  // namespace affchar
