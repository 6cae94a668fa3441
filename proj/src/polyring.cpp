#include "affchar/polyring.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace affchar {

unsigned thread_count() {
  if (const char* env = std::getenv("AFFCHAR_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CharElem CharElem::monomial(const AffineWeight& w, Lattice tag, std::int64_t coef) {
  CharElem f(w.rank(), tag);
  f.add_term(w, coef);
  return f;
}

CharElem CharElem::monomial(const FiniteWeight& w, std::int64_t coef) {
  return monomial(AffineWeight(w), Lattice::Finite, coef);
}

std::int64_t CharElem::coefficient(const AffineWeight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void CharElem::add_term(const AffineWeight& w, std::int64_t c) {
  if (c == 0) return;
  if (tag_ == Lattice::Finite && (w.level != 0 || w.delta != Rational(0)))
    throw InvalidInput("finite-lattice element cannot hold " + w.str());
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t CharElem::mass() const {
  std::int64_t m = 0;
  for (const auto& [w, c] : terms_) m += c;
  return m;
}

std::vector<CharElem::Term> CharElem::sorted_terms() const {
  std::vector<Term> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  return out;
}

void CharElem::check_compatible(const CharElem& o) const {
  if (tag_ != o.tag_) throw InvalidInput("lattice tag mismatch between group-ring elements");
  if (rank_ != o.rank_) throw InvalidInput("rank mismatch between group-ring elements");
}

CharElem& CharElem::operator+=(const CharElem& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

CharElem& CharElem::operator-=(const CharElem& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

CharElem& CharElem::operator*=(std::int64_t s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

CharElem operator*(const CharElem& a, const CharElem& b) {
  a.check_compatible(b);
  if (a.size() == 1) {
    const auto& [w, c] = *a.terms_.begin();
    return c * shift(b, w);
  }
  if (b.size() == 1) {
    const auto& [w, c] = *b.terms_.begin();
    return c * shift(a, w);
  }
  CharElem out(a.rank_, a.tag_);
  out.reserve(a.size() * b.size());
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa + wb, ca * cb);
  return out;
}

bool operator==(const CharElem& a, const CharElem& b) {
  return a.tag_ == b.tag_ && a.rank_ == b.rank_ && a.terms_ == b.terms_;
}

CharElem add(const CharElem& f, const CharElem& g) { return f + g; }
CharElem mul(const CharElem& f, const CharElem& g) { return f * g; }

CharElem shift(const CharElem& f, const AffineWeight& by) {
  CharElem out(f.rank(), f.tag());
  out.reserve(f.size());
  for (const auto& [w, c] : f.terms()) out.add_term(w + by, c);
  return out;
}

namespace {

// Expands one monomial into its alpha_i-string and adds it to `out`.
//   m >= 0:  e^mu + e^{mu - alpha} + ... + e^{mu - m alpha}
//   m = -1:  0
//   m <= -2: -(e^{mu + alpha} + ... + e^{mu + (-m-1) alpha})
void expand_string(int i, const AffineWeight& mu, std::int64_t c, const FiniteWeight& alpha, CharElem::Map& out) {
  const int m = pairing(i, mu);
  auto emit = [&](int k, std::int64_t coef) {
    AffineWeight w = mu;
    for (int j = 0; j < w.finite.rank(); ++j) w.finite[j] += k * alpha[j];
    if (i == 0) w.delta += k;
    auto [it, inserted] = out.try_emplace(w, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) out.erase(it);
    }
  };
  if (m >= 0) {
    for (int k = 0; k <= m; ++k) emit(-k, c);
  } else if (m <= -2) {
    for (int k = 1; k <= -m - 1; ++k) emit(k, -c);
  }
}

}  // namespace

CharElem demazure(const CharElem& f, int i) {
  if (f.tag() != Lattice::Affine) throw InvalidInput("demazure needs an affine-lattice element");
  const int n = f.rank();
  if (i < 0 || i > n) throw InvalidInput("demazure node " + std::to_string(i) + " outside {0..n}");
  const FiniteWeight alpha = simple_root(n, i).finite;

  CharElem out(n, Lattice::Affine);
  const unsigned threads = thread_count();
  constexpr std::size_t kParallelThreshold = 1 << 15;
  if (threads <= 1 || f.size() < kParallelThreshold) {
    CharElem::Map acc;
    acc.reserve(f.size() * 2);
    for (const auto& [mu, c] : f.terms()) expand_string(i, mu, c, alpha, acc);
    for (const auto& [w, c] : acc) out.add_term(w, c);
    return out;
  }

  // Partition by monomial; integer addition makes the merge order irrelevant.
  const std::vector<CharElem::Term> items(f.terms().begin(), f.terms().end());
  std::vector<CharElem::Map> partial(threads);
  std::vector<std::thread> pool;
  const std::size_t chunk = (items.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      const std::size_t lo = t * chunk, hi = std::min(items.size(), lo + chunk);
      for (std::size_t k = lo; k < hi; ++k) expand_string(i, items[k].first, items[k].second, alpha, partial[t]);
    });
  }
  for (auto& th : pool) th.join();
  out.reserve(f.size() * 2);
  for (const auto& part : partial)
    for (const auto& [w, c] : part) out.add_term(w, c);
  return out;
}

CharElem demazure_word(const CharElem& f, const ExtendedWeylWord& w) {
  if (length(w) != static_cast<int>(w.word().size())) throw InvalidInput("demazure_word needs a reduced word");
  CharElem g = f;
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) g = demazure(g, *it);
  return twist(g, w.tau());
}

CharElem twist(const CharElem& f, const Automorphism& tau) {
  if (tau.is_identity()) return f;
  CharElem out(f.rank(), f.tag());
  out.reserve(f.size());
  for (const auto& [w, c] : f.terms()) {
    AffineWeight img = tau.apply(w);
    if (f.tag() == Lattice::Finite) {
      if (tau(0) != 0) throw InvalidInput("twist of a finite element by an automorphism moving node 0");
      img.delta = 0;
    }
    out.add_term(img, c);
  }
  return out;
}

CharElem reflect(const CharElem& f, int i) {
  CharElem out(f.rank(), f.tag());
  out.reserve(f.size());
  if (f.tag() == Lattice::Finite) {
    const auto& rs = RootSystem::type_d(f.rank());
    for (const auto& [w, c] : f.terms()) out.add_term(AffineWeight(rs.reflect(w.finite, i)), c);
  } else {
    for (const auto& [w, c] : f.terms()) out.add_term(reflect(i, w), c);
  }
  return out;
}

CharElem specialize(const CharElem& f) {
  if (f.tag() != Lattice::Affine) throw InvalidInput("specialize needs an affine-lattice element");
  CharElem out(f.rank(), Lattice::Finite);
  for (const auto& [w, c] : f.terms()) out.add_term(AffineWeight(w.finite), c);
  return out;
}

CharElem swap_spin_finite(const CharElem& f) {
  CharElem out(f.rank(), f.tag());
  const int n = f.rank();
  for (const auto& [w, c] : f.terms()) {
    AffineWeight img = w;
    std::swap(img.finite.node(n - 1), img.finite.node(n));
    out.add_term(img, c);
  }
  return out;
}

}  // namespace affchar
