#pragma once

// Tableaux, Vandermonde products and the S-, B- and D-Specht polynomials,
// plus the generator sets of the Specht ideals.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dspecht/combinat.hpp"
#include "dspecht/groups.hpp"
#include "dspecht/polynomial.hpp"

namespace dspecht::specht {

using alg::Polynomial;
using alg::Rational;
using comb::Bipartition;
using comb::Dipartition;
using comb::Partition;
using groups::GroupKind;

/// A filling of a diagram, row by row, with 1-based variable indices.
class Tableau {
 public:
  Tableau() = default;
  /// Rows must be nonempty with weakly decreasing lengths.
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  std::vector<int> entries() const;
  /// Column c read top to bottom.
  std::vector<std::vector<int>> columns() const;

 private:
  std::vector<std::vector<int>> rows_;
};

struct Bitableau {
  Tableau left;
  Tableau right;

  Bipartition shape() const { return {left.shape(), right.shape()}; }
  int n() const { return left.shape().size() + right.shape().size(); }
  /// Throws std::invalid_argument unless the entries are exactly {1..n}.
  void validate() const;
};

/// Checks that a single tableau is filled with exactly {1..size}.
void validate(const Tableau& t);

/// Column-wise filling with 1, 2, 3, ... down successive columns.
Tableau base_tableau(const Partition& shape, int offset = 0);
/// Left diagram filled column-wise first, right diagram continues.
Bitableau base_bitableau(const Bipartition& shape);

/// ∏_{i<j} (X_{k_i} - X_{k_j}) in `nvars` variables; 1 for an empty list.
Polynomial vandermonde(std::size_t nvars, const std::vector<int>& indices);

Polynomial specht_S(const Tableau& t, std::size_t nvars = 0);
Polynomial specht_B(const Bitableau& bt);
/// spe_T(X²) spe_S(X²) (∏_T X ± ∏_S X) for a bitableau of shape (λ, λ).
Polynomial specht_D(const Bitableau& bt, int sign);

/// 2·(colsum λ + colsum μ) + |μ|.
int specht_B_degree(const Bipartition& shape);

/// A Specht polynomial kept in factored form:
///   ∏ (X_a^p - X_b^p) · (∏_{mono1} X + sign2 · ∏_{mono2} X)
/// with the second product absent when sign2 == 0.
struct FactoredGenerator {
  std::size_t nvars = 0;
  unsigned power = 1;
  std::vector<std::pair<int, int>> differences;  // 0-based (a, b)
  std::vector<int> mono1;                        // 0-based
  std::vector<int> mono2;                        // 0-based
  int sign2 = 0;

  Polynomial expand() const;
  Rational eval(std::span<const Rational> point) const;
  bool vanishes_at(std::span<const Rational> point) const;
  FactoredGenerator permuted(const groups::Permutation& sigma) const;
  /// Identifies the generator up to a global sign.
  std::string key() const;
  int degree() const;
};

FactoredGenerator factored_S(const Tableau& t, std::size_t nvars);
FactoredGenerator factored_B(const Bitableau& bt);
FactoredGenerator factored_D(const Bitableau& bt, int sign);

/// The shape of a Specht ideal for one of the three groups.
struct Shape {
  GroupKind kind = GroupKind::S;
  Partition part;                  // kind S
  Bipartition bip;                 // kind B
  std::optional<Dipartition> dip;  // kind D

  static Shape of(const Partition& p);
  static Shape of(const Bipartition& b);
  static Shape of(const Dipartition& d);
  /// Parses the combinat text syntax for the given group.
  static Shape parse(GroupKind kind, const std::string& text);

  int n() const;
  std::string to_string() const;
};

/// Homogeneous generators of one Specht ideal: the S_n-orbit of the base
/// Specht polynomial (both orientations for a D pair), deduplicated up to sign.
struct GeneratorSet {
  std::size_t nvars = 0;
  std::string key;
  std::vector<FactoredGenerator> factored;
  std::vector<Polynomial> generators;
};

/// Factored orbit only, without expanding polynomials.
std::vector<FactoredGenerator> factored_generators(const Shape& shape);
GeneratorSet generator_set(const Shape& shape);

}  // namespace dspecht::specht
