#pragma once

// The extended affine Weyl group of type D_n^(1), restricted to the diagram
// automorphisms generated by tau_{0,1} and tau_{n-1,n}.

#include <memory>
#include <mutex>
#include <vector>

#include "affchar/cartan.hpp"

namespace affchar {

/// Diagram automorphism of D_n^(1), stored as a permutation of {0..n}.
class Automorphism {
 public:
  static Automorphism identity(int n);
  static Automorphism swap01(int n);
  static Automorphism swap_spin(int n);
  /// Validates that perm preserves the affine Dynkin diagram.
  static Automorphism from_permutation(std::vector<int> perm);

  int n() const { return static_cast<int>(perm_.size()) - 1; }
  int operator()(int node) const { return perm_[node]; }
  const std::vector<int>& permutation() const { return perm_; }
  bool is_identity() const;
  Automorphism inverse() const;

  /// (a * b)(i) = a(b(i)).
  friend Automorphism operator*(const Automorphism& a, const Automorphism& b);
  friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.perm_ == b.perm_; }

  AffineWeight apply(const AffineWeight& x) const;
  AffineRoot apply(const AffineRoot& r) const;

 private:
  explicit Automorphism(std::vector<int> perm) : perm_(std::move(perm)) {}
  std::vector<int> perm_;
};

/// Exact linear map on (varpi_1..varpi_n, Lambda_0, delta) coordinates;
/// column k is the image of the k-th basis vector.
struct WeylAction {
  int n = 0;
  std::vector<std::vector<Rational>> m;

  AffineWeight apply(const AffineWeight& x) const;
  friend bool operator==(const WeylAction& a, const WeylAction& b) { return a.m == b.m; }
};

/// tau composed with s_{word[0]} s_{word[1]} ... : the last letter acts first.
class ExtendedWeylWord {
 public:
  ExtendedWeylWord(Automorphism tau, std::vector<int> word);
  static ExtendedWeylWord identity(int n) { return {Automorphism::identity(n), {}}; }
  static ExtendedWeylWord reflection(int n, int i) { return {Automorphism::identity(n), {i}}; }

  ExtendedWeylWord(const ExtendedWeylWord& o) : tau_(o.tau_), word_(o.word_) {}
  ExtendedWeylWord& operator=(const ExtendedWeylWord& o) {
    tau_ = o.tau_;
    word_ = o.word_;
    cache_ = std::make_unique<Cache>();
    return *this;
  }

  int n() const { return tau_.n(); }
  const Automorphism& tau() const { return tau_; }
  const std::vector<int>& word() const { return word_; }

  /// Cached; safe for concurrent callers.
  const WeylAction& action() const;

  /// Group equality, decided on the action matrices.
  friend bool operator==(const ExtendedWeylWord& a, const ExtendedWeylWord& b) { return a.action() == b.action(); }
  friend ExtendedWeylWord operator*(const ExtendedWeylWord& a, const ExtendedWeylWord& b);
  ExtendedWeylWord inverse() const;
  ExtendedWeylWord pow(int k) const;

 private:
  struct Cache {
    std::mutex mu;
    std::shared_ptr<const WeylAction> action;
  };

  Automorphism tau_;
  std::vector<int> word_;
  std::unique_ptr<Cache> cache_ = std::make_unique<Cache>();
};

AffineWeight reflect(int i, const AffineWeight& x);
AffineRoot reflect(int i, const AffineRoot& r);

AffineWeight act(const ExtendedWeylWord& w, const AffineWeight& x);
/// Throws on roots that are not real (beta = 0).
AffineRoot act_root(const ExtendedWeylWord& w, const AffineRoot& r);

/// Reduced word for the same element by left descents, smallest node first.
ExtendedWeylWord reduce(const ExtendedWeylWord& w);
int length(const ExtendedWeylWord& w);

/// Reduced word for w_o, built by ascending from -rho.
ExtendedWeylWord longest_word(int n);
/// sigma = tau_{0,1} tau_{n-1,n} s_1 s_2 ... s_{n-1}.
ExtendedWeylWord sigma_word(int n);

/// Nonnegative pairing with every coroot in {0..n} (affine) or {1..n}.
bool is_dominant(const AffineWeight& x, bool affine);

}  // namespace affchar
