#include "affchar/weyl.hpp"

#include <algorithm>

namespace affchar {

// ---------------------------------------------------------------------------
// Automorphism

Automorphism Automorphism::identity(int n) {
  require_rank(n);
  std::vector<int> p(n + 1);
  for (int i = 0; i <= n; ++i) p[i] = i;
  return Automorphism(std::move(p));
}

Automorphism Automorphism::swap01(int n) {
  auto a = identity(n);
  std::swap(a.perm_[0], a.perm_[1]);
  return a;
}

Automorphism Automorphism::swap_spin(int n) {
  auto a = identity(n);
  std::swap(a.perm_[n - 1], a.perm_[n]);
  return a;
}

Automorphism Automorphism::from_permutation(std::vector<int> perm) {
  const int n = static_cast<int>(perm.size()) - 1;
  require_rank(n);
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i <= n; ++i)
    if (sorted[i] != i) throw InvalidInput("not a permutation of {0..n}");
  const RankData affine(n, CartanKind::AffineD);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (affine.entry(perm[i], perm[j]) != affine.entry(i, j))
        throw InvalidInput("permutation does not preserve the affine Dynkin diagram");
  return Automorphism(std::move(perm));
}

bool Automorphism::is_identity() const {
  for (int i = 0; i < static_cast<int>(perm_.size()); ++i)
    if (perm_[i] != i) return false;
  return true;
}

Automorphism Automorphism::inverse() const {
  std::vector<int> inv(perm_.size());
  for (int i = 0; i < static_cast<int>(perm_.size()); ++i) inv[perm_[i]] = i;
  return Automorphism(std::move(inv));
}

Automorphism operator*(const Automorphism& a, const Automorphism& b) {
  std::vector<int> p(a.perm_.size());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) p[i] = a.perm_[b.perm_[i]];
  return Automorphism(std::move(p));
}

AffineWeight Automorphism::apply(const AffineWeight& x) const {
  const int n = x.rank();
  if (is_identity()) return x;
  // Pairings are transported: <alpha_{tau(i)}^vee, tau x> = <alpha_i^vee, x>.
  std::vector<int> moved(n + 1);
  for (int i = 0; i <= n; ++i) moved[perm_[i]] = pairing(i, x);
  AffineWeight out;
  out.finite = FiniteWeight(n);
  for (int i = 1; i <= n; ++i) out.finite.node(i) = moved[i];
  out.level = x.level;
  // The delta part is the unique one making the map an isometry:
  //   tau(Lambda_0) = varpi_{tau(0)} + Lambda_0 - (varpi_{tau(0)}, varpi_{tau(0)})/2 delta
  //   shift(x) = -(f'(x), varpi_{tau(0)}) - level(x) * shift(Lambda_0)
  const auto& rs = RootSystem::type_d(n);
  FiniteWeight f0(n);
  if (perm_[0] != 0) f0.node(perm_[0]) = 1;
  const Rational shift0 = -rs.form(f0, f0) / 2;
  out.delta = x.delta - rs.form(out.finite, f0) - Rational(x.level) * shift0;
  return out;
}

AffineRoot Automorphism::apply(const AffineRoot& r) const {
  const int n = r.beta.rank();
  const auto& theta = RootSystem::type_d(n).highest_root();
  // To coordinates over alpha_0..alpha_n, permute, and back.
  std::vector<int> c(n + 1), moved(n + 1);
  c[0] = r.k;
  for (int i = 1; i <= n; ++i) c[i] = r.beta.node(i) + r.k * theta.node(i);
  for (int i = 0; i <= n; ++i) moved[perm_[i]] = c[i];
  AffineRoot out{RootCoords(n), moved[0]};
  for (int i = 1; i <= n; ++i) out.beta.node(i) = moved[i] - out.k * theta.node(i);
  return out;
}

// ---------------------------------------------------------------------------
// Actions

AffineWeight WeylAction::apply(const AffineWeight& x) const {
  std::vector<Rational> v(n + 2);
  for (int i = 0; i < n; ++i) v[i] = x.finite[i];
  v[n] = x.level;
  v[n + 1] = x.delta;
  std::vector<Rational> out(n + 2, Rational(0));
  for (int r = 0; r < n + 2; ++r)
    for (int c = 0; c < n + 2; ++c) out[r] += m[r][c] * v[c];
  AffineWeight y;
  y.finite = FiniteWeight(n);
  for (int i = 0; i < n; ++i) y.finite[i] = static_cast<int>(out[i].numerator());
  y.level = static_cast<int>(out[n].numerator());
  y.delta = out[n + 1];
  return y;
}

AffineWeight reflect(int i, const AffineWeight& x) {
  const int m = pairing(i, x);
  if (m == 0) return x;
  return x - m * simple_root(x.rank(), i);
}

AffineRoot reflect(int i, const AffineRoot& r) {
  const int n = r.beta.rank();
  const int m = pairing(i, root_weight(r));
  if (m == 0) return r;
  AffineRoot out = r;
  if (i == 0) {
    out.beta += m * RootSystem::type_d(n).highest_root();
    out.k -= m;
  } else {
    out.beta.node(i) -= m;
  }
  return out;
}

ExtendedWeylWord::ExtendedWeylWord(Automorphism tau, std::vector<int> word) : tau_(std::move(tau)), word_(std::move(word)) {
  for (int i : word_)
    if (i < 0 || i > tau_.n()) throw InvalidInput("word letter " + std::to_string(i) + " outside {0..n}");
}

const WeylAction& ExtendedWeylWord::action() const {
  std::lock_guard lock(cache_->mu);
  if (!cache_->action) {
    const int n = this->n();
    auto a = std::make_shared<WeylAction>();
    a->n = n;
    a->m.assign(n + 2, std::vector<Rational>(n + 2, Rational(0)));
    for (int k = 0; k < n + 2; ++k) {
      AffineWeight e{FiniteWeight(n)};
      if (k < n) e.finite[k] = 1;
      if (k == n) e.level = 1;
      if (k == n + 1) e.delta = 1;
      const AffineWeight img = act(*this, e);
      for (int i = 0; i < n; ++i) a->m[i][k] = img.finite[i];
      a->m[n][k] = img.level;
      a->m[n + 1][k] = img.delta;
    }
    cache_->action = std::move(a);
  }
  return *cache_->action;
}

ExtendedWeylWord operator*(const ExtendedWeylWord& a, const ExtendedWeylWord& b) {
  // tau1 w1 tau2 w2 = (tau1 tau2) (tau2^{-1} w1 tau2) w2
  const Automorphism back = b.tau().inverse();
  std::vector<int> word;
  word.reserve(a.word().size() + b.word().size());
  for (int i : a.word()) word.push_back(back(i));
  word.insert(word.end(), b.word().begin(), b.word().end());
  return {a.tau() * b.tau(), std::move(word)};
}

ExtendedWeylWord ExtendedWeylWord::inverse() const {
  // (tau w)^{-1} = tau^{-1} (tau w^{-1} tau^{-1})
  std::vector<int> word(word_.rbegin(), word_.rend());
  for (int& i : word) i = tau_(i);
  return {tau_.inverse(), std::move(word)};
}

ExtendedWeylWord ExtendedWeylWord::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  ExtendedWeylWord out = identity(n());
  for (int j = 0; j < k; ++j) out = out * *this;
  return out;
}

AffineWeight act(const ExtendedWeylWord& w, const AffineWeight& x) {
  AffineWeight y = x;
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) y = reflect(*it, y);
  return w.tau().apply(y);
}

AffineRoot act_root(const ExtendedWeylWord& w, const AffineRoot& r) {
  if (r.beta.is_zero()) throw InvalidInput("act_root needs a real root; got an imaginary root");
  AffineRoot y = r;
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) y = reflect(*it, y);
  return w.tau().apply(y);
}

// ---------------------------------------------------------------------------
// Length

namespace {

using IntMatrix = std::vector<std::vector<int>>;

// Matrix of s_i on coordinates over alpha_0..alpha_n.
IntMatrix reflection_matrix(const RankData& affine, int i) {
  const int size = affine.n() + 1;
  IntMatrix s(size, std::vector<int>(size, 0));
  for (int j = 0; j < size; ++j) {
    s[j][j] = 1;
    s[i][j] -= affine.entry(i, j);
  }
  return s;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const int size = static_cast<int>(a.size());
  IntMatrix c(size, std::vector<int>(size, 0));
  for (int i = 0; i < size; ++i)
    for (int k = 0; k < size; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < size; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

AffineRoot column_root(const IntMatrix& m, int col, const RootCoords& theta) {
  const int n = theta.rank();
  AffineRoot r{RootCoords(n), m[0][col]};
  for (int i = 1; i <= n; ++i) r.beta.node(i) = m[i][col] - r.k * theta.node(i);
  return r;
}

}  // namespace

ExtendedWeylWord reduce(const ExtendedWeylWord& w) {
  const int n = w.n();
  const RankData affine(n, CartanKind::AffineD);
  const auto& theta = RootSystem::type_d(n).highest_root();
  std::vector<IntMatrix> s;
  for (int i = 0; i <= n; ++i) s.push_back(reflection_matrix(affine, i));

  // inv = matrix of the inverse of the non-automorphism part.
  IntMatrix inv(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= n; ++i) inv[i][i] = 1;
  for (int letter : w.word()) inv = multiply(s[letter], inv);

  std::vector<int> reduced;
  const std::size_t guard = w.word().size();
  while (true) {
    int descent = -1;
    for (int i = 0; i <= n && descent < 0; ++i)
      if (!is_positive(column_root(inv, i, theta))) descent = i;
    if (descent < 0) break;
    if (reduced.size() >= guard) throw std::logic_error("descent loop exceeded the input length");
    reduced.push_back(descent);
    inv = multiply(inv, s[descent]);
  }
  return {w.tau(), std::move(reduced)};
}

int length(const ExtendedWeylWord& w) { return static_cast<int>(reduce(w).word().size()); }

ExtendedWeylWord longest_word(int n) {
  require_rank(n);
  const auto& rs = RootSystem::type_d(n);
  FiniteWeight x = -rs.rho();
  std::vector<int> steps;
  while (true) {
    int i = 1;
    while (i <= n && x.node(i) >= 0) ++i;
    if (i > n) break;
    x = rs.reflect(x, i);
    steps.push_back(i);
  }
  return {Automorphism::identity(n), std::vector<int>(steps.rbegin(), steps.rend())};
}

ExtendedWeylWord sigma_word(int n) {
  require_rank(n);
  std::vector<int> word;
  for (int i = 1; i <= n - 1; ++i) word.push_back(i);
  return {Automorphism::swap01(n) * Automorphism::swap_spin(n), std::move(word)};
}

bool is_dominant(const AffineWeight& x, bool affine) {
  for (int i = affine ? 0 : 1; i <= x.rank(); ++i)
    if (pairing(i, x) < 0) return false;
  return true;
}

}  // namespace affchar
