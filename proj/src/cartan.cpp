#include "affchar/cartan.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace affchar {

std::string rational_str(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string AffineWeight::str() const {
  return finite.str() + "+" + std::to_string(level) + "L0+" + rational_str(delta) + "d";
}

void require_rank(int n) {
  if (n < 4) throw InvalidInput("rank n = " + std::to_string(n) + " is below 4; type D_n needs n >= 4");
  if (n > kMaxRank) throw InvalidInput("rank n = " + std::to_string(n) + " exceeds the supported maximum 12");
}

// ---------------------------------------------------------------------------
// RankData

RankData::RankData(int n, CartanKind kind) : n_(n), kind_(kind) {
  require_rank(n);
  int lo = kind == CartanKind::AffineD ? 0 : 1;
  int hi = kind == CartanKind::FiniteC ? n - 1 : n;
  for (int i = lo; i <= hi; ++i) nodes_.push_back(i);
  const int size = static_cast<int>(nodes_.size());
  matrix_.assign(size, std::vector<int>(size, 0));
  auto link = [&](int i, int j, int ij, int ji) {
    matrix_[index(i)][index(j)] = ij;
    matrix_[index(j)][index(i)] = ji;
  };
  for (int i : nodes_) matrix_[index(i)][index(i)] = 2;
  if (kind == CartanKind::FiniteC) {
    const int r = n - 1;
    for (int i = 1; i + 1 < r; ++i) link(i, i + 1, -1, -1);
    link(r - 1, r, -2, -1);
    return;
  }
  for (int i = 1; i + 1 <= n - 2; ++i) link(i, i + 1, -1, -1);
  link(n - 2, n - 1, -1, -1);
  link(n - 2, n, -1, -1);
  if (kind == CartanKind::AffineD) link(0, 2, -1, -1);
}

// ---------------------------------------------------------------------------
// RootSystem

namespace {

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& m) {
  const int size = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a(size, std::vector<Rational>(2 * size, Rational(0)));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) a[i][j] = m[i][j];
    a[i][size + i] = 1;
  }
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    while (pivot < size && a[pivot][col] == Rational(0)) ++pivot;
    if (pivot == size) throw std::logic_error("singular Cartan matrix");
    std::swap(a[pivot], a[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (int r = 0; r < size; ++r) {
      if (r == col || a[r][col] == Rational(0)) continue;
      const Rational f = a[r][col];
      for (int k = 0; k < 2 * size; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<std::vector<Rational>> inv(size, std::vector<Rational>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) inv[i][j] = a[i][size + j];
  return inv;
}

int height(const RootCoords& r) { return std::accumulate(r.begin(), r.end(), 0); }

}  // namespace

RootSystem::RootSystem(int rank, char type) : rank_(rank), type_(type) {
  if (rank < 1 || rank > kMaxRank) throw InvalidInput("root system rank out of range");
  cartan_.assign(rank, std::vector<int>(rank, 0));
  sym_.assign(rank, 1);
  for (int i = 0; i < rank; ++i) cartan_[i][i] = 2;
  if (type == 'D') {
    if (rank < 4) throw InvalidInput("type D root system needs rank >= 4");
    for (int i = 0; i + 1 < rank - 1; ++i) cartan_[i][i + 1] = cartan_[i + 1][i] = -1;
    cartan_[rank - 3][rank - 1] = cartan_[rank - 1][rank - 3] = -1;
  } else if (type == 'C') {
    for (int i = 0; i + 1 < rank; ++i) cartan_[i][i + 1] = cartan_[i + 1][i] = -1;
    if (rank >= 2) cartan_[rank - 2][rank - 1] = -2;
    sym_[rank - 1] = rank == 1 ? 1 : 2;
  } else {
    throw InvalidInput(std::string("unsupported root system type ") + type);
  }
  inverse_ = invert(cartan_);
  for (const auto& row : inverse_)
    for (const auto& v : row) inverse_scale_ = std::lcm(inverse_scale_, v.denominator());
  inverse_scaled_.assign(rank, std::vector<std::int64_t>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      inverse_scaled_[i][j] = inverse_[i][j].numerator() * (inverse_scale_ / inverse_[i][j].denominator());

  // Closure from the simple roots using alpha-strings: beta + alpha_i is a root
  // iff q = p - <alpha_i^vee, beta> > 0.
  std::vector<RootCoords> frontier;
  for (int i = 1; i <= rank; ++i) {
    frontier.push_back(RootCoords::unit(rank, i));
    positive_set_.insert(frontier.back());
  }
  while (!frontier.empty()) {
    std::vector<RootCoords> next;
    for (const auto& beta : frontier) {
      for (int i = 1; i <= rank; ++i) {
        int p = 0;
        RootCoords down = beta;
        while (true) {
          down.node(i) -= 1;
          if (!positive_set_.count(down)) break;
          ++p;
        }
        int pair = 0;
        for (int j = 1; j <= rank; ++j) pair += cartan(i, j) * beta.node(j);
        if (p - pair > 0) {
          RootCoords up = beta;
          up.node(i) += 1;
          if (positive_set_.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  positive_.assign(positive_set_.begin(), positive_set_.end());
  std::sort(positive_.begin(), positive_.end(), [](const RootCoords& a, const RootCoords& b) {
    int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  for (const auto& r : positive_) positive_w_.push_back(to_weight(r));
}

const RootSystem& RootSystem::type_d(int rank) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<RootSystem>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[rank];
  if (!slot) slot.reset(new RootSystem(rank, 'D'));
  return *slot;
}

const RootSystem& RootSystem::type_c(int rank) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<RootSystem>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[rank];
  if (!slot) slot.reset(new RootSystem(rank, 'C'));
  return *slot;
}

FiniteWeight RootSystem::to_weight(const RootCoords& r) const {
  FiniteWeight w(rank_);
  for (int i = 0; i < rank_; ++i) {
    int v = 0;
    for (int j = 0; j < rank_; ++j) v += cartan_[i][j] * r[j];
    w[i] = v;
  }
  return w;
}

std::optional<RootCoords> RootSystem::to_root(const FiniteWeight& w) const {
  RootCoords r(rank_);
  for (int i = 0; i < rank_; ++i) {
    std::int64_t v = 0;
    for (int j = 0; j < rank_; ++j) v += inverse_scaled_[i][j] * w[j];
    if (v % inverse_scale_ != 0) return std::nullopt;
    r[i] = static_cast<int>(v / inverse_scale_);
  }
  return r;
}

std::int64_t RootSystem::form(const RootCoords& r, const FiniteWeight& w) const {
  std::int64_t v = 0;
  for (int j = 0; j < rank_; ++j) v += static_cast<std::int64_t>(r[j]) * sym_[j] * w[j];
  return v;
}

Rational RootSystem::form(const FiniteWeight& a, const FiniteWeight& b) const {
  // (varpi_i, varpi_j) = (C^{-1})_{ji} d_j
  Rational v(0);
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (b[j] == 0) continue;
      v += inverse_[j][i] * sym_[j] * a[i] * b[j];
    }
  }
  return v;
}

FiniteWeight RootSystem::rho() const {
  FiniteWeight w(rank_);
  for (int i = 0; i < rank_; ++i) w[i] = 1;
  return w;
}

bool RootSystem::is_dominant(const FiniteWeight& w) const {
  for (int i = 0; i < rank_; ++i)
    if (w[i] < 0) return false;
  return true;
}

FiniteWeight RootSystem::reflect(const FiniteWeight& w, int i) const {
  FiniteWeight out = w;
  const int m = w.node(i);
  if (m == 0) return out;
  for (int j = 0; j < rank_; ++j) out[j] -= m * cartan_[j][i - 1];
  return out;
}

FiniteWeight RootSystem::dominant_representative(const FiniteWeight& w) const {
  FiniteWeight x = w;
  while (true) {
    int i = 0;
    while (i < rank_ && x[i] >= 0) ++i;
    if (i == rank_) return x;
    x = reflect(x, i + 1);
  }
}

bool RootSystem::dominates(const FiniteWeight& a, const FiniteWeight& b) const {
  auto r = to_root(a - b);
  if (!r) return false;
  for (int v : *r)
    if (v < 0) return false;
  return true;
}

std::vector<FiniteWeight> RootSystem::orbit(const FiniteWeight& dominant) const {
  std::set<FiniteWeight> seen{dominant};
  std::vector<FiniteWeight> stack{dominant};
  while (!stack.empty()) {
    FiniteWeight x = stack.back();
    stack.pop_back();
    for (int i = 1; i <= rank_; ++i) {
      if (x.node(i) <= 0) continue;
      FiniteWeight y = reflect(x, i);
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Families

int family_node(Family s, int n) {
  switch (s) {
    case Family::One:
      return 1;
    case Family::SpinNm1:
      return n - 1;
    case Family::SpinN:
      return n;
  }
  return 1;
}

Family family_from_node(int node, int n) {
  if (node == 1) return Family::One;
  if (node == n - 1) return Family::SpinNm1;
  if (node == n) return Family::SpinN;
  throw InvalidInput("family node " + std::to_string(node) + " is not in {1, n-1, n}");
}

Family parse_family(const std::string& text, int n) {
  if (text == "1") return Family::One;
  if (text == "n-1") return Family::SpinNm1;
  if (text == "n") return Family::SpinN;
  try {
    std::size_t used = 0;
    int node = std::stoi(text, &used);
    if (used == text.size()) return family_from_node(node, n);
  } catch (const std::logic_error&) {
  }
  throw InvalidInput("family '" + text + "' must be one of 1, n-1, n");
}

std::string family_label(Family s) {
  switch (s) {
    case Family::One:
      return "1";
    case Family::SpinNm1:
      return "n-1";
    case Family::SpinN:
      return "n";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// D_n root data

RootCoords alpha_interval(int n, int p, int q) {
  require_rank(n);
  if (p < 1 || q > n || p > q || (p == n - 1 && q == n))
    throw InvalidInput("alpha_interval(" + std::to_string(p) + "," + std::to_string(q) + ") out of range");
  RootCoords r(n);
  if (q <= n - 1) {
    for (int i = p; i <= q; ++i) r.node(i) = 1;
  } else {
    for (int i = p; i <= n - 2; ++i) r.node(i) = 1;
    r.node(n) = 1;
  }
  return r;
}

std::vector<RootCoords> positive_roots(int n) {
  require_rank(n);
  std::set<RootCoords> out;
  for (int p = 1; p <= n; ++p)
    for (int q = p; q <= n; ++q)
      if (!(p == n - 1 && q == n)) out.insert(alpha_interval(n, p, q));
  for (int p = 1; p < n; ++p)
    for (int q = p + 1; q < n; ++q) out.insert(alpha_interval(n, p, n) + alpha_interval(n, q, n - 1));
  return {out.begin(), out.end()};
}

std::vector<int> node_block(Family s, int n) {
  require_rank(n);
  switch (s) {
    case Family::One: {
      std::vector<int> b;
      for (int i = 1; i <= n - 3; ++i) b.push_back(i);
      return b;
    }
    case Family::SpinNm1:
      return {n - 1};
    case Family::SpinN:
      return {n};
  }
  return {};
}

std::vector<RootCoords> delta_plus_s(int n, Family s) {
  std::set<RootCoords> out;
  for (Family r : {Family::One, Family::SpinNm1, Family::SpinN}) {
    if (r == s) continue;
    const auto block = node_block(r, n);
    for (const auto& alpha : positive_roots(n)) {
      bool avoids = true;
      for (int i : block)
        if (alpha.node(i) != 0) avoids = false;
      if (avoids) out.insert(alpha);
    }
  }
  return {out.begin(), out.end()};
}

std::set<int> support(const FiniteWeight& w) {
  std::set<int> s;
  for (int i = 1; i <= w.rank(); ++i)
    if (w.node(i) > 0) s.insert(i);
  return s;
}

std::set<int> support(const RootCoords& r) {
  std::set<int> s;
  for (int i = 1; i <= r.rank(); ++i) {
    if (r.node(i) < 0) throw InvalidInput("support of a negative root " + r.str());
    if (r.node(i) > 0) s.insert(i);
  }
  return s;
}

std::vector<int> marks(int n) {
  const auto& theta = RootSystem::type_d(n).highest_root();
  std::vector<int> a{1};
  for (int i = 1; i <= n; ++i) a.push_back(theta.node(i));
  return a;
}

int pairing(int i, const AffineWeight& x) {
  const int n = x.rank();
  if (i >= 1 && i <= n) return x.finite.node(i);
  if (i != 0) throw InvalidInput("node " + std::to_string(i) + " outside {0..n}");
  const auto& theta = RootSystem::type_d(n).highest_root();
  int v = x.level;
  for (int j = 1; j <= n; ++j) v -= theta.node(j) * x.finite.node(j);
  return v;
}

AffineWeight simple_root(int n, int i) {
  const auto& rs = RootSystem::type_d(n);
  if (i == 0) return AffineWeight(-rs.to_weight(rs.highest_root()), 0, Rational(1));
  if (i < 1 || i > n) throw InvalidInput("node " + std::to_string(i) + " outside {0..n}");
  return AffineWeight(rs.to_weight(RootCoords::unit(n, i)));
}

AffineWeight root_weight(const AffineRoot& r) {
  const auto& rs = RootSystem::type_d(r.beta.rank());
  return AffineWeight(rs.to_weight(r.beta), 0, Rational(r.k));
}

Rational bilinear(const AffineWeight& x, const AffineWeight& y) {
  const auto& rs = RootSystem::type_d(x.rank());
  return rs.form(x.finite, y.finite) + Rational(x.level) * y.delta + Rational(y.level) * x.delta;
}

bool is_positive(const AffineRoot& r) {
  if (r.k != 0) return r.k > 0;
  return RootSystem::type_d(r.beta.rank()).is_positive_root(r.beta);
}

}  // namespace affchar
