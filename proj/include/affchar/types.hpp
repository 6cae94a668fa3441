#pragma once

// Core value types: integer coordinate vectors with a fixed inline capacity,
// affine weights, real affine roots and the error classes used throughout.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace affchar {

using Rational = boost::rational<std::int64_t>;

/// Largest supported rank. Keys live inline, so this bounds sizeof(AffineWeight).
inline constexpr int kMaxRank = 12;

/// Raised for caller mistakes: bad rank, non-dominant weights, non-regular
/// weights, malformed input. The CLI maps it to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails, e.g. a character that
/// does not decompose with zero residual. The CLI maps it to exit code 3.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixed-capacity integer vector. The tag keeps weights and roots apart.
/// Storage is 0-based; node(i) gives the 1-based Dynkin-label view.
template <class Tag>
class Coords {
 public:
  Coords() = default;
  explicit Coords(int rank) : size_(static_cast<std::uint8_t>(check_rank(rank))) {}
  Coords(std::initializer_list<int> values) : Coords(std::span<const int>(values.begin(), values.size())) {}
  explicit Coords(std::span<const int> values)
      : size_(static_cast<std::uint8_t>(check_rank(static_cast<int>(values.size())))) {
    for (std::size_t k = 0; k < values.size(); ++k) c_[k] = values[k];
  }

  static Coords unit(int rank, int node) {
    Coords u(rank);
    u.node(node) = 1;
    return u;
  }

  int rank() const { return size_; }
  int operator[](int k) const { return c_[k]; }
  int& operator[](int k) { return c_[k]; }
  int node(int i) const { return c_[i - 1]; }
  int& node(int i) { return c_[i - 1]; }

  const int* begin() const { return c_.data(); }
  const int* end() const { return c_.data() + size_; }
  std::vector<int> to_vector() const { return {begin(), end()}; }

  bool is_zero() const {
    for (int k = 0; k < size_; ++k)
      if (c_[k] != 0) return false;
    return true;
  }

  Coords& operator+=(const Coords& o) {
    for (int k = 0; k < size_; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Coords& operator-=(const Coords& o) {
    for (int k = 0; k < size_; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Coords& operator*=(int s) {
    for (int k = 0; k < size_; ++k) c_[k] *= s;
    return *this;
  }
  friend Coords operator+(Coords a, const Coords& b) { return a += b; }
  friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
  friend Coords operator-(Coords a) { return a *= -1; }
  friend Coords operator*(int s, Coords a) { return a *= s; }

  friend bool operator==(const Coords& a, const Coords& b) {
    if (a.size_ != b.size_) return false;
    for (int k = 0; k < a.size_; ++k)
      if (a.c_[k] != b.c_[k]) return false;
    return true;
  }
  /// Lexicographic on coordinates (rank first).
  friend bool operator<(const Coords& a, const Coords& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    for (int k = 0; k < a.size_; ++k)
      if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ size_;
    for (int k = 0; k < size_; ++k) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(c_[k])) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::string str() const {
    std::string s = "(";
    for (int k = 0; k < size_; ++k) {
      if (k) s += ",";
      s += std::to_string(c_[k]);
    }
    return s + ")";
  }

 private:
  static int check_rank(int rank) {
    if (rank < 0 || rank > kMaxRank) throw InvalidInput("rank " + std::to_string(rank) + " outside [0, 12]");
    return rank;
  }

  std::array<std::int32_t, kMaxRank> c_{};
  std::uint8_t size_ = 0;
};

struct WeightTag {};
struct RootTag {};

/// Coefficients on the fundamental weights.
using FiniteWeight = Coords<WeightTag>;
/// Coefficients on the simple roots.
using RootCoords = Coords<RootTag>;

/// finite + level·Λ_0 + delta·δ.
struct AffineWeight {
  FiniteWeight finite;
  int level = 0;
  Rational delta{0};

  AffineWeight() = default;
  AffineWeight(FiniteWeight f, int lvl = 0, Rational d = Rational(0)) : finite(f), level(lvl), delta(d) {}

  static AffineWeight lambda0(int n) { return AffineWeight(FiniteWeight(n), 1); }
  static AffineWeight delta_unit(int n) { return AffineWeight(FiniteWeight(n), 0, Rational(1)); }

  int rank() const { return finite.rank(); }

  AffineWeight& operator+=(const AffineWeight& o) {
    finite += o.finite;
    level += o.level;
    delta += o.delta;
    return *this;
  }
  AffineWeight& operator-=(const AffineWeight& o) {
    finite -= o.finite;
    level -= o.level;
    delta -= o.delta;
    return *this;
  }
  friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
  friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
  friend AffineWeight operator-(const AffineWeight& a) { return -1 * a; }
  friend AffineWeight operator*(int s, AffineWeight a) {
    a.finite *= s;
    a.level *= s;
    a.delta *= s;
    return a;
  }

  friend bool operator==(const AffineWeight& a, const AffineWeight& b) {
    return a.level == b.level && a.delta == b.delta && a.finite == b.finite;
  }
  friend bool operator<(const AffineWeight& a, const AffineWeight& b) {
    if (!(a.finite == b.finite)) return a.finite < b.finite;
    if (a.level != b.level) return a.level < b.level;
    return a.delta < b.delta;
  }

  /// Same weight modulo Qδ.
  bool congruent_mod_delta(const AffineWeight& o) const { return level == o.level && finite == o.finite; }

  std::string str() const;
};

struct AffineWeightHash {
  std::size_t operator()(const AffineWeight& w) const {
    std::size_t h = w.finite.hash();
    h ^= std::hash<std::int64_t>{}(w.level) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::int64_t>{}(w.delta.numerator()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::int64_t>{}(w.delta.denominator()) + (h << 6) + (h >> 2);
    return h;
  }
};

template <class Tag>
struct CoordsHash {
  std::size_t operator()(const Coords<Tag>& c) const { return c.hash(); }
};

/// Real affine root β + kδ with β a finite root.
struct AffineRoot {
  RootCoords beta;
  int k = 0;

  friend bool operator==(const AffineRoot& a, const AffineRoot& b) { return a.k == b.k && a.beta == b.beta; }
  friend AffineRoot operator-(AffineRoot r) {
    r.beta = -r.beta;
    r.k = -r.k;
    return r;
  }
  std::string str() const { return beta.str() + (k >= 0 ? "+" : "") + std::to_string(k) + "d"; }
};

std::string rational_str(const Rational& r);

}  // namespace affchar
