#include "affchar/spbranch.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

#include "affchar/affinization.hpp"

namespace affchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 0) throw InvalidInput("partition with a negative part");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw InvalidInput("partition parts must be weakly decreasing");
  }
}

int Partition::length() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

SpWeight iota(int n, const FiniteWeight& mu) {
  require_dominant(n, mu);
  FiniteWeight nu(n - 1);
  for (int i = 1; i <= n - 2; ++i) nu.node(i) = mu.node(i);
  nu.node(n - 1) = std::min(mu.node(n - 1), mu.node(n));
  return {nu};
}

Partition partition_of(const SpWeight& nu) {
  std::vector<int> parts(nu.rank(), 0);
  int tail = 0;
  for (int j = nu.rank(); j >= 1; --j) {
    if (nu.coords.node(j) < 0) throw InvalidInput("partition_of needs a dominant weight");
    tail += nu.coords.node(j);
    parts[j - 1] = tail;
  }
  return Partition(std::move(parts));
}

FiniteWeight sp_from_epsilon(const std::vector<int>& eps) {
  const int r = static_cast<int>(eps.size());
  FiniteWeight w(r);
  for (int i = 0; i + 1 < r; ++i) w[i] = eps[i] - eps[i + 1];
  w[r - 1] = eps[r - 1];
  return w;
}

namespace {

using EpsPoly = std::map<std::vector<int>, std::int64_t>;

// s_lambda(x_1..x_N) = sum over horizontal strips lambda/mu of x_N^{|lambda/mu|} s_mu(x_1..x_{N-1}).
// Letter k <= r carries weight +e_k, letter r + k carries -e_k.
class SchurBrancher {
 public:
  explicit SchurBrancher(int rank) : rank_(rank) {}

  const EpsPoly& eval(const std::vector<int>& shape, int letters) {
    auto key = std::make_pair(shape, letters);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    EpsPoly result;
    const int rows = static_cast<int>(std::count_if(shape.begin(), shape.end(), [](int p) { return p > 0; }));
    if (rows == 0) {
      result[std::vector<int>(rank_, 0)] = 1;
    } else if (letters > 0 && rows <= letters) {
      std::vector<int> inner(shape.size(), 0);
      strips(shape, letters, 0, inner, result);
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  void strips(const std::vector<int>& outer, int letters, std::size_t row, std::vector<int>& inner, EpsPoly& acc) {
    if (row == outer.size()) {
      const int removed = std::accumulate(outer.begin(), outer.end(), 0) - std::accumulate(inner.begin(), inner.end(), 0);
      const EpsPoly& sub = eval(inner, letters - 1);
      const int letter = letters;  // 1-based
      const int axis = letter <= rank_ ? letter - 1 : letter - rank_ - 1;
      const int sign = letter <= rank_ ? 1 : -1;
      for (const auto& [eps, c] : sub) {
        std::vector<int> moved = eps;
        moved[axis] += sign * removed;
        acc[moved] += c;
      }
      return;
    }
    const int hi = outer[row];
    const int lo = row + 1 < outer.size() ? outer[row + 1] : 0;
    for (int v = lo; v <= hi; ++v) {
      inner[row] = v;
      strips(outer, letters, row + 1, inner, acc);
    }
    inner[row] = 0;
  }

  int rank_;
  std::map<std::pair<std::vector<int>, int>, EpsPoly> memo_;
};

}  // namespace

CharElem schur_char(const Partition& p, int rank) {
  if (rank < 1 || rank > kMaxRank) throw InvalidInput("symplectic rank out of range");
  if (p.length() > 2 * rank)
    throw InvalidInput("partition has " + std::to_string(p.length()) + " rows; at most " + std::to_string(2 * rank) +
                       " fit on the standard module");
  std::vector<int> shape;
  for (int part : p.parts())
    if (part > 0) shape.push_back(part);
  SchurBrancher brancher(rank);
  CharElem out(rank, Lattice::Finite);
  for (const auto& [eps, c] : brancher.eval(shape, 2 * rank))
    if (c != 0) out.add_term(AffineWeight(sp_from_epsilon(eps)), c);
  return out;
}

std::map<SpWeight, std::int64_t> decompose_sp(const CharElem& f, int rank) {
  const DecompositionTable table = decompose(RootSystem::type_c(rank), f);
  std::map<SpWeight, std::int64_t> out;
  for (const auto& [nu, m] : table.mults) out.emplace(SpWeight{nu}, m);
  return out;
}

namespace {

const std::map<SpWeight, std::int64_t>& cached_branching(int n, const SpWeight& top) {
  static std::mutex mu;
  static std::map<std::pair<int, FiniteWeight>, std::map<SpWeight, std::int64_t>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(n, top.coords);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto table = decompose_sp(schur_char(partition_of(top), n - 1), n - 1);
  return cache.emplace(key, std::move(table)).first->second;
}

void require_regular(int n, const FiniteWeight& lambda) {
  if (!is_regular(n, lambda))
    throw InvalidInput("weight " + lambda.str() + " is not regular; the symplectic formula needs a regular weight");
}

}  // namespace

std::int64_t sam_mult(int n, const FiniteWeight& lambda, const FiniteWeight& mu) {
  require_dominant(n, lambda);
  require_dominant(n, mu);
  require_regular(n, lambda);
  if (mu.node(n) - mu.node(n - 1) != lambda.node(n) - lambda.node(n - 1)) return 0;
  const auto& branching = cached_branching(n, iota(n, lambda));
  auto it = branching.find(iota(n, mu));
  return it == branching.end() ? 0 : it->second;
}

DecompositionTable sam_table(int n, const FiniteWeight& lambda) {
  require_dominant(n, lambda);
  require_regular(n, lambda);
  const int gap = lambda.node(n) - lambda.node(n - 1);
  DecompositionTable table;
  for (const auto& [nu, m] : cached_branching(n, iota(n, lambda))) {
    // The unique dominant mu with iota(mu) = nu and mu_n - mu_{n-1} = gap.
    FiniteWeight mu(n);
    for (int i = 1; i <= n - 2; ++i) mu.node(i) = nu.coords.node(i);
    const int low = nu.coords.node(n - 1);
    mu.node(n - 1) = gap >= 0 ? low : low - gap;
    mu.node(n) = gap >= 0 ? low + gap : low;
    table.mults[mu] = m;
    table.dimension += m * dim_irr(n, mu);
  }
  return table;
}

}  // namespace affchar
