#include "dspecht/varieties.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dspecht::var {

Partition s_orbit_type(std::span<const Rational> p) {
  std::map<Rational, int> counts;
  for (const auto& x : p) ++counts[x];
  std::vector<int> parts;
  for (const auto& [v, c] : counts) parts.push_back(c);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Bipartition b_orbit_type(std::span<const Rational> p) {
  std::vector<Rational> squares;
  int t = 0;
  for (const auto& x : p) {
    squares.push_back(x * x);
    if (x == 0) ++t;
  }
  Partition kappa = s_orbit_type(squares);
  std::size_t s = kappa.len();
  if (t > 0) {
    s = 0;
    while (s < kappa.len() && kappa[s] >= t) ++s;
  }
  std::vector<int> first(s, t), second;
  for (std::size_t i = s; i < kappa.len(); ++i) first.push_back(kappa[i]);
  for (std::size_t i = 0; i < s; ++i) second.push_back(kappa[i] - t);
  return {Partition(std::move(first)), Partition(std::move(second))};
}

Partition doubled(const Partition& lam) {
  std::vector<int> parts = lam.parts();
  for (int& x : parts) x *= 2;
  return Partition(std::move(parts));
}

int formal_sign(std::span<const Rational> p) {
  std::vector<Rational> squares;
  int negatives = 0;
  for (const auto& x : p) {
    if (x == 0) throw std::domain_error("formal sign needs every coordinate nonzero");
    if (x < 0) ++negatives;
    squares.push_back(x * x);
  }
  const Partition type = s_orbit_type(squares);
  for (int part : type.parts()) {
    if (part % 2 != 0) throw std::domain_error("formal sign needs a squared orbit type of the form 2λ");
  }
  // Each block of equal squares has even size, so the parity of its minus
  // signs does not depend on which of ±a is taken as the reference value.
  return negatives % 2 == 0 ? 1 : -1;
}

OrbitDatum orbit_datum(std::span<const Rational> p) {
  OrbitDatum d{b_orbit_type(p), std::nullopt};
  if (d.btype.first.empty()) {
    bool even = std::all_of(d.btype.second.parts().begin(), d.btype.second.parts().end(),
                            [](int x) { return x % 2 == 0; });
    if (even) d.dsign = formal_sign(p);
  }
  return d;
}

bool has_nonempty_orbit(const Bipartition& b) {
  for (std::size_t i = 0; i < b.second.len(); ++i) {
    if (b.second[i] > 0 && b.first[i + 1] != b.first[0]) return false;
  }
  return true;
}

Point canonical_point(const Bipartition& b) {
  if (!has_nonempty_orbit(b)) throw std::invalid_argument("empty orbit set for " + b.to_string());
  Point p(b.first[0], Rational(0));
  const std::size_t rows = std::max(b.second.len(), b.first.len());
  for (std::size_t i = 0; i < rows; ++i) {
    int count = b.second[i] + b.first[i + 1];
    for (int k = 0; k < count; ++k) p.emplace_back(static_cast<long>(i + 1));
  }
  return p;
}

std::vector<Representative> representatives(int n) {
  if (n < 1) throw std::invalid_argument("representatives need n >= 1");
  std::vector<Representative> out;
  for (const auto& b : comb::bipartitions(n)) {
    if (!has_nonempty_orbit(b)) continue;
    Point p = canonical_point(b);
    OrbitDatum d = orbit_datum(p);
    if (d.dsign) {
      out.push_back({d, p});
      Point q = p;
      q.back() = -q.back();
      out.push_back({orbit_datum(q), q});
    } else {
      out.push_back({d, std::move(p)});
    }
  }
  return out;
}

bool in_variety_bruteforce(const std::vector<specht::FactoredGenerator>& generators,
                           std::span<const Rational> p) {
  for (const auto& g : generators) {
    if (!g.vanishes_at(p)) return false;
  }
  return true;
}

bool in_variety_bruteforce(const specht::Shape& shape, std::span<const Rational> p) {
  if (static_cast<std::size_t>(shape.n()) != p.size()) throw std::invalid_argument("point has wrong length");
  return in_variety_bruteforce(specht::factored_generators(shape), p);
}

bool in_variety_predicted(const Dipartition& shape, const OrbitDatum& datum) {
  if (shape.n() != datum.btype.n()) throw std::invalid_argument("datum and shape disagree on n");
  if (!has_nonempty_orbit(datum.btype)) throw std::invalid_argument("datum has an empty orbit set");
  const Bipartition b = shape.bipartition();
  if (!shape.is_signed()) {
    return !comb::bidominance_leq(datum.btype, b) && !comb::bidominance_leq(datum.btype, b.swapped());
  }
  if (!comb::bidominance_leq(datum.btype, b)) return true;
  const Bipartition paired{Partition(), doubled(shape.first())};
  return datum.dsign && *datum.dsign == -shape.sign() && datum.btype == paired;
}

bool in_variety_predicted(const Bipartition& shape, const OrbitDatum& datum) {
  return !comb::bidominance_leq(datum.btype, shape);
}

bool in_variety_predicted(const Partition& shape, std::span<const Rational> p) {
  return !comb::dominance_leq(s_orbit_type(p), shape);
}

VarietyTable::VarietyTable(int n) : shapes_(comb::dipartitions(n)), points_(representatives(n)) {
  member_.assign(shapes_.size(), std::vector<char>(points_.size(), 0));
  for (std::size_t s = 0; s < shapes_.size(); ++s) {
    auto gens = specht::factored_generators(specht::Shape::of(shapes_[s]));
    for (std::size_t q = 0; q < points_.size(); ++q) {
      member_[s][q] = in_variety_bruteforce(gens, points_[q].point) ? 1 : 0;
    }
  }
}

bool VarietyTable::leq(std::size_t a, std::size_t b) const {
  for (std::size_t q = 0; q < points_.size(); ++q) {
    if (member_[a][q] && !member_[b][q]) return false;
  }
  return true;
}

bool variety_leq(const Dipartition& a, const Dipartition& b) {
  if (a.n() != b.n()) throw std::invalid_argument("varieties live in different spaces");
  auto ga = specht::factored_generators(specht::Shape::of(a));
  auto gb = specht::factored_generators(specht::Shape::of(b));
  for (const auto& r : representatives(a.n())) {
    if (in_variety_bruteforce(ga, r.point) && !in_variety_bruteforce(gb, r.point)) return false;
  }
  return true;
}

std::optional<Point> zero_coordinate_scan(const Partition& lam, const Partition& mu, std::size_t budget) {
  if (lam == mu) throw std::invalid_argument("zero_coordinate_scan needs λ != μ");
  const int n = lam.size() + mu.size();
  auto forward = specht::factored_generators(specht::Shape::of(Bipartition{lam, mu}));
  auto backward = specht::factored_generators(specht::Shape::of(Bipartition{mu, lam}));
  std::size_t examined = 0;
  for (const auto& r : representatives(n)) {
    if (std::find(r.point.begin(), r.point.end(), Rational(0)) != r.point.end()) continue;
    if (budget != 0 && examined++ >= budget) break;
    if (in_variety_bruteforce(forward, r.point) && !in_variety_bruteforce(backward, r.point)) return r.point;
  }
  return std::nullopt;
}

}  // namespace dspecht::var
