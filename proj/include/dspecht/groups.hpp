#pragma once

// Permutations and signed permutations acting on polynomials and points.
//
// A signed permutation g = (signs, sigma) acts on K[X1..Xn] by the ring
// substitution X_i -> s_i * X_{sigma(i)}. With the product defined below this
// is a left action: act(g*h, f) == act(g, act(h, f)).

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dspecht/polynomial.hpp"

namespace dspecht::groups {

using alg::Polynomial;
using alg::Rational;

enum class GroupKind { S, B, D };

GroupKind parse_group_kind(const std::string& text);
std::string to_string(GroupKind kind);

class Permutation {
 public:
  Permutation() = default;
  /// Identity on n points.
  explicit Permutation(std::size_t n);
  /// One-line notation, 1-based images. Throws std::invalid_argument if the
  /// sequence is not a bijection of {1..n}.
  static Permutation from_one_line(const std::vector<int>& images);
  static Permutation transposition(std::size_t n, int i, int j);

  std::size_t size() const { return images_.size(); }
  /// 1-based image of 1-based i.
  int operator()(int i) const { return images_[i - 1] + 1; }
  /// 0-based image of 0-based i.
  std::size_t image0(std::size_t i) const { return images_[i]; }
  std::vector<int> one_line() const;

  int sign() const;
  Permutation inverse() const;
  /// (a*b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::size_t n);
  SignedPermutation(Permutation perm, std::vector<int> signs);
  static SignedPermutation sign_flip(std::size_t n, int i);

  std::size_t size() const { return perm_.size(); }
  const Permutation& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  bool is_even_signed() const;
  /// Sign character of the underlying permutation.
  int perm_sign() const { return perm_.sign(); }

  /// Composition matching the substitution action: act(g*h) = act(g)∘act(h).
  friend SignedPermutation operator*(const SignedPermutation& g, const SignedPermutation& h);
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

  /// "(2 1 3 | +-+)"
  std::string to_string() const;

 private:
  Permutation perm_;
  std::vector<int> signs_;
};

alg::Monomial act(const SignedPermutation& g, const alg::Monomial& m, int& sign_out);
Polynomial act(const SignedPermutation& g, const Polynomial& f);
Polynomial act(const Permutation& sigma, const Polynomial& f);
/// Point action compatible with polynomial evaluation:
/// eval(act(g, f), p) == eval(f, act_point(g, p)).
std::vector<Rational> act_point(const SignedPermutation& g, std::span<const Rational> p);

/// Every element of S_n, B_n or D_n exactly once, ordered lexicographically by
/// (sign vector with '+' < '-', one-line permutation). Throws on n == 0.
std::vector<SignedPermutation> enumerate_group(GroupKind kind, std::size_t n);

/// Calls `visit` on every permutation of {1..n} that moves only indices of
/// `support` (1-based), in lexicographic one-line order.
void for_each_permutation_of(std::size_t n, const std::vector<int>& support,
                             const std::function<void(const Permutation&)>& visit);

/// sum over sigma in S_support of sgn(sigma) * sigma(f).
Polynomial antisymmetrize(const Polynomial& f, const std::vector<int>& support);

/// Sum of sgn(sigma) * sigma(f) over one representative per left coset
/// sigma * S_small of S_small in S_big. The representative is the first coset
/// element in lexicographic one-line order. Requires small ⊆ big.
Polynomial coset_antisymmetrize(const Polynomial& f, const std::vector<int>& big,
                                const std::vector<int>& small);

}  // namespace dspecht::groups
