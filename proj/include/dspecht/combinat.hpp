#pragma once

// Partitions, bipartitions and dipartitions with the dominance, bidominance
// and didominance orders.

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dspecht::comb {

class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly
  /// decreasing. Trailing zeros are stripped first.
  explicit Partition(std::vector<int> parts);

  int size() const { return size_; }
  std::size_t len() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  /// 0-based; reads 0 beyond the last part.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;
  /// Σ C(λ'_i, 2): the degree of an S-Specht polynomial of this shape.
  int column_pair_count() const;

  /// "(3,2)" or "()".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the part sequence.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Bipartition {
  Partition first;
  Partition second;

  int n() const { return first.size() + second.size(); }
  Bipartition swapped() const { return {second, first}; }
  /// "(2,2)|(1)"
  std::string to_string() const;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

class Dipartition {
 public:
  enum class Kind { Pair, Signed };

  /// Unordered pair {a, b} with a != b, stored size ascending then lex.
  static Dipartition pair(Partition a, Partition b);
  /// {lam, sign}, sign in {+1, -1}.
  static Dipartition with_sign(Partition lam, int sign);

  Kind kind() const { return kind_; }
  bool is_signed() const { return kind_ == Kind::Signed; }
  /// For Pair the canonical first/second; for Signed both return lam.
  const Partition& first() const { return a_; }
  const Partition& second() const { return b_; }
  int sign() const { return sign_; }
  int n() const { return a_.size() + b_.size(); }
  Bipartition bipartition() const { return {a_, b_}; }

  /// "(1,1)|(2)", "(1,1)|+", "(1,1)|-".
  std::string to_string() const;

  friend bool operator==(const Dipartition&, const Dipartition&) = default;

 private:
  Dipartition() = default;
  Kind kind_ = Kind::Pair;
  Partition a_;
  Partition b_;
  int sign_ = 0;
};

// ------------------------------------------------------------------ parsing

/// "(3,2)" or "()"; whitespace tolerated.
Partition parse_partition(std::string_view text);
/// "(3,2)|(1)", optionally wrapped in one extra pair of parentheses.
Bipartition parse_bipartition(std::string_view text);
/// "(3,2)|(1)" in either order, or "(3,2)|+" / "(3,2)|-".
Dipartition parse_dipartition(std::string_view text);

// -------------------------------------------------------------- enumeration

/// All partitions of n in reverse-lexicographic order; partitions(0) = {∅}.
std::vector<Partition> partitions(int n);
/// All ordered pairs (λ, μ) with |λ| + |μ| = n, by |λ| ascending.
std::vector<Bipartition> bipartitions(int n);
/// All dipartitions of n >= 1. Throws std::invalid_argument on n < 1.
std::vector<Dipartition> dipartitions(int n);

// ----------------------------------------------------------------- operations

/// Sorted concatenation λ ⊎ μ.
Partition fusion(const Partition& a, const Partition& b);
/// Row-wise sum (λ_1+μ_1, λ_2+μ_2, ...). The first bidominance inequality
/// family is exactly dominance of these row sums.
Partition row_sum(const Partition& a, const Partition& b);

bool dominance_leq(const Partition& mu, const Partition& lam);
bool bidominance_leq(const Bipartition& p, const Bipartition& q);
/// The auxiliary relation on unordered multisets {p.first, p.second}.
bool multiset_leq(const Bipartition& p, const Bipartition& q);
bool didominance_leq(const Dipartition& a, const Dipartition& b);

/// Pairs {θ, ω} obtained from {λ, λ} by moving the last box of row p of one
/// copy into row p+1 of the other, for every p with λ_p > λ_{p+1}.
std::vector<Dipartition> signed_covers(const Partition& lam);

/// Lower covers of `top` in the dominance order on partitions of |top|.
std::vector<Partition> dominance_lower_covers(const Partition& top);

/// Every dominance lower cover of 2λ = λ+λ (row-wise) is the row sum θ+ω of
/// some signed cover {θ, ω} of {λ, ±}.
bool fusion_cover_check(const Partition& lam);

// ---------------------------------------------------------------- Hasse data

using Edge = std::pair<std::size_t, std::size_t>;

/// Cover edges (i, j) meaning elements[i] ⋖ elements[j], sorted.
template <class T, class Leq>
std::vector<Edge> hasse(const std::vector<T>& elements, Leq leq) {
  const std::size_t m = elements.size();
  std::vector<std::vector<char>> lt(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && leq(elements[i], elements[j])) lt[i][j] = 1;
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!lt[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < m && cover; ++k) {
        if (lt[i][k] && lt[k][j]) cover = false;
      }
      if (cover) edges.emplace_back(i, j);
    }
  }
  return edges;
}

struct PosetExport {
  std::vector<std::string> nodes;
  std::vector<Edge> edges;
};

/// Group "S", "B" or "D"; throws std::invalid_argument otherwise.
PosetExport poset(const std::string& group, int n);
std::string to_dot(const PosetExport& p, const std::string& name);

}  // namespace dspecht::comb
