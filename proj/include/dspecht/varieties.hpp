#pragma once

// Orbit types of points and membership in Specht varieties.
//
// Two independent oracles decide x ∈ V: exact evaluation of every generator,
// and a prediction read off the orbit type of x through the orders.

#include <optional>
#include <span>
#include <vector>

#include "dspecht/combinat.hpp"
#include "dspecht/polynomial.hpp"
#include "dspecht/specht.hpp"

namespace dspecht::var {

using alg::Rational;
using comb::Bipartition;
using comb::Dipartition;
using comb::Partition;

using Point = std::vector<Rational>;

struct OrbitDatum {
  Bipartition btype;
  /// Formal sign, only for all-nonzero points whose squares have type 2λ.
  std::optional<int> dsign;
};

/// Descending multiplicities of the distinct coordinate values.
Partition s_orbit_type(std::span<const Rational> p);
/// The bipartition whose B-orbit set contains p.
Bipartition b_orbit_type(std::span<const Rational> p);
/// Parts doubled: (2λ_1, 2λ_2, ...).
Partition doubled(const Partition& lam);
/// ±1; throws std::domain_error on a zero coordinate or when the squared
/// orbit type has an odd part.
int formal_sign(std::span<const Rational> p);
/// The full datum of p, with dsign filled in when it is defined.
OrbitDatum orbit_datum(std::span<const Rational> p);

/// λ_{i+1} = λ_1 whenever μ_i > 0.
bool has_nonempty_orbit(const Bipartition& b);
/// (0 × λ_1, a_1 × (μ_1+λ_2), a_2 × (μ_2+λ_3), ...) with a_i = i.
Point canonical_point(const Bipartition& b);

struct Representative {
  OrbitDatum datum;
  Point point;
};

/// One point per nonempty B-orbit set; data eligible for a formal sign give
/// two points, the minus class obtained by negating the last coordinate.
std::vector<Representative> representatives(int n);

/// Every generator of the ideal vanishes at p.
bool in_variety_bruteforce(const std::vector<specht::FactoredGenerator>& generators,
                           std::span<const Rational> p);
bool in_variety_bruteforce(const specht::Shape& shape, std::span<const Rational> p);

bool in_variety_predicted(const Dipartition& shape, const OrbitDatum& datum);
bool in_variety_predicted(const Bipartition& shape, const OrbitDatum& datum);
bool in_variety_predicted(const Partition& shape, std::span<const Rational> p);

/// Membership of every representative of n in every D-variety.
class VarietyTable {
 public:
  explicit VarietyTable(int n);

  const std::vector<Dipartition>& shapes() const { return shapes_; }
  const std::vector<Representative>& points() const { return points_; }
  bool member(std::size_t shape, std::size_t point) const { return member_[shape][point]; }
  /// V_shapes[a] ⊆ V_shapes[b] on representatives.
  bool leq(std::size_t a, std::size_t b) const;

 private:
  std::vector<Dipartition> shapes_;
  std::vector<Representative> points_;
  std::vector<std::vector<char>> member_;
};

/// V_A ⊆ V_B, decided on the representatives of n.
bool variety_leq(const Dipartition& a, const Dipartition& b);

/// A point with no zero coordinate in V_(λ,μ) \ V_(μ,λ), among the first
/// `budget` such representatives (0 = all). Throws if λ == μ.
std::optional<Point> zero_coordinate_scan(const Partition& lam, const Partition& mu, std::size_t budget = 0);

}  // namespace dspecht::var
