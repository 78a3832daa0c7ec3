#include "dspecht/specht.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace dspecht::specht {

// ------------------------------------------------------------------ tableaux

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) throw std::invalid_argument("tableau rows must be nonempty");
    if (i > 0 && rows_[i].size() > rows_[i - 1].size()) {
      throw std::invalid_argument("tableau row lengths must be weakly decreasing");
    }
    for (int v : rows_[i]) {
      if (v < 1) throw std::invalid_argument("tableau entries are 1-based positive integers");
    }
  }
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

std::vector<int> Tableau::entries() const {
  std::vector<int> out;
  for (const auto& r : rows_) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::vector<std::vector<int>> Tableau::columns() const {
  std::vector<std::vector<int>> cols(rows_.empty() ? 0 : rows_.front().size());
  for (const auto& r : rows_) {
    for (std::size_t c = 0; c < r.size(); ++c) cols[c].push_back(r[c]);
  }
  return cols;
}

namespace {

void check_exact_cover(std::vector<int> entries, int n, const char* what) {
  std::sort(entries.begin(), entries.end());
  std::vector<int> expected(n);
  std::iota(expected.begin(), expected.end(), 1);
  if (entries != expected) {
    throw std::invalid_argument(std::string(what) + " must contain each of 1.." + std::to_string(n) +
                                " exactly once");
  }
}

}  // namespace

void validate(const Tableau& t) { check_exact_cover(t.entries(), t.shape().size(), "tableau"); }

void Bitableau::validate() const {
  auto all = left.entries();
  auto r = right.entries();
  all.insert(all.end(), r.begin(), r.end());
  check_exact_cover(std::move(all), n(), "bitableau");
}

Tableau base_tableau(const Partition& shape, int offset) {
  std::vector<std::vector<int>> rows(shape.len());
  for (std::size_t r = 0; r < shape.len(); ++r) rows[r].resize(shape[r]);
  int next = offset + 1;
  auto conj = shape.conjugate();
  for (std::size_t c = 0; c < conj.len(); ++c) {
    for (int r = 0; r < conj[c]; ++r) rows[r][c] = next++;
  }
  return Tableau(std::move(rows));
}

Bitableau base_bitableau(const Bipartition& shape) {
  return {base_tableau(shape.first, 0), base_tableau(shape.second, shape.first.size())};
}

// --------------------------------------------------------------- polynomials

Polynomial vandermonde(std::size_t nvars, const std::vector<int>& indices) {
  std::set<int> seen;
  for (int k : indices) {
    if (k < 1 || static_cast<std::size_t>(k) > nvars) throw std::invalid_argument("variable index out of range");
    if (!seen.insert(k).second) throw std::invalid_argument("repeated index in Vandermonde product");
  }
  Polynomial f(nvars, 1);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = i + 1; j < indices.size(); ++j) {
      f = f * (Polynomial::variable(nvars, indices[i] - 1) - Polynomial::variable(nvars, indices[j] - 1));
    }
  }
  return f;
}

namespace {

void add_column_differences(const Tableau& t, std::vector<std::pair<int, int>>& out) {
  for (const auto& col : t.columns()) {
    for (std::size_t i = 0; i < col.size(); ++i) {
      for (std::size_t j = i + 1; j < col.size(); ++j) out.emplace_back(col[i] - 1, col[j] - 1);
    }
  }
}

std::vector<int> zero_based(const std::vector<int>& v) {
  std::vector<int> out;
  out.reserve(v.size());
  for (int x : v) out.push_back(x - 1);
  return out;
}

}  // namespace

FactoredGenerator factored_S(const Tableau& t, std::size_t nvars) {
  FactoredGenerator g;
  auto e = t.entries();
  std::size_t max_entry = e.empty() ? 0 : static_cast<std::size_t>(*std::max_element(e.begin(), e.end()));
  g.nvars = nvars == 0 ? max_entry : nvars;
  if (max_entry > g.nvars) throw std::invalid_argument("tableau entry exceeds the number of variables");
  std::set<int> distinct(e.begin(), e.end());
  if (distinct.size() != e.size()) throw std::invalid_argument("repeated tableau entry");
  g.power = 1;
  add_column_differences(t, g.differences);
  return g;
}

FactoredGenerator factored_B(const Bitableau& bt) {
  bt.validate();
  FactoredGenerator g;
  g.nvars = static_cast<std::size_t>(bt.n());
  g.power = 2;
  add_column_differences(bt.left, g.differences);
  add_column_differences(bt.right, g.differences);
  g.mono1 = zero_based(bt.right.entries());
  return g;
}

FactoredGenerator factored_D(const Bitableau& bt, int sign) {
  if (bt.left.shape() != bt.right.shape()) {
    throw std::invalid_argument("D-Specht polynomials need a bitableau of shape (λ,λ)");
  }
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  FactoredGenerator g = factored_B(bt);
  g.mono1 = zero_based(bt.left.entries());
  g.mono2 = zero_based(bt.right.entries());
  g.sign2 = sign;
  return g;
}

Polynomial FactoredGenerator::expand() const {
  Polynomial f(nvars, 1);
  for (const auto& [a, b] : differences) {
    Polynomial d = Polynomial::monomial(alg::Monomial::variable(nvars, a, power)) -
                   Polynomial::monomial(alg::Monomial::variable(nvars, b, power));
    f = f * d;
  }
  auto product = [&](const std::vector<int>& idx) {
    std::vector<std::uint32_t> e(nvars, 0);
    for (int i : idx) ++e[i];
    return alg::Monomial(std::move(e));
  };
  Polynomial tail = Polynomial::monomial(product(mono1));
  if (sign2 != 0) tail.add_term(product(mono2), Rational(sign2));
  return f * tail;
}

Rational FactoredGenerator::eval(std::span<const Rational> point) const {
  if (point.size() != nvars) throw std::invalid_argument("point has wrong length");
  auto pw = [&](const Rational& x) { return power == 1 ? x : Rational(x * x); };
  Rational value = 1;
  for (const auto& [a, b] : differences) {
    value *= pw(point[a]) - pw(point[b]);
    if (value == 0) return value;
  }
  Rational p1 = 1, p2 = 1;
  for (int i : mono1) p1 *= point[i];
  if (sign2 != 0) {
    for (int i : mono2) p2 *= point[i];
    return value * (sign2 > 0 ? Rational(p1 + p2) : Rational(p1 - p2));
  }
  return value * p1;
}

bool FactoredGenerator::vanishes_at(std::span<const Rational> point) const {
  if (point.size() != nvars) throw std::invalid_argument("point has wrong length");
  for (const auto& [a, b] : differences) {
    if (power == 1 ? point[a] == point[b] : point[a] * point[a] == point[b] * point[b]) return true;
  }
  Rational p1 = 1;
  for (int i : mono1) p1 *= point[i];
  if (sign2 == 0) return p1 == 0;
  Rational p2 = 1;
  for (int i : mono2) p2 *= point[i];
  return sign2 > 0 ? p1 + p2 == 0 : p1 == p2;
}

FactoredGenerator FactoredGenerator::permuted(const groups::Permutation& sigma) const {
  FactoredGenerator g = *this;
  for (auto& [a, b] : g.differences) {
    a = static_cast<int>(sigma.image0(a));
    b = static_cast<int>(sigma.image0(b));
  }
  for (int& i : g.mono1) i = static_cast<int>(sigma.image0(i));
  for (int& i : g.mono2) i = static_cast<int>(sigma.image0(i));
  return g;
}

std::string FactoredGenerator::key() const {
  std::vector<std::pair<int, int>> d;
  d.reserve(differences.size());
  for (auto [a, b] : differences) d.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(d.begin(), d.end());
  std::vector<int> m1 = mono1, m2 = mono2;
  std::sort(m1.begin(), m1.end());
  std::sort(m2.begin(), m2.end());
  if (sign2 != 0 && m2 < m1) std::swap(m1, m2);
  std::string k = std::to_string(power) + "|" + std::to_string(sign2) + "|";
  for (auto [a, b] : d) k += std::to_string(a) + "-" + std::to_string(b) + ",";
  k += "|";
  for (int i : m1) k += std::to_string(i) + ",";
  k += "|";
  for (int i : m2) k += std::to_string(i) + ",";
  return k;
}

int FactoredGenerator::degree() const {
  return static_cast<int>(differences.size() * power + mono1.size());
}

Polynomial specht_S(const Tableau& t, std::size_t nvars) { return factored_S(t, nvars).expand(); }

Polynomial specht_B(const Bitableau& bt) { return factored_B(bt).expand(); }

Polynomial specht_D(const Bitableau& bt, int sign) { return factored_D(bt, sign).expand(); }

int specht_B_degree(const Bipartition& shape) {
  return 2 * (shape.first.column_pair_count() + shape.second.column_pair_count()) + shape.second.size();
}

// -------------------------------------------------------------------- shapes

Shape Shape::of(const Partition& p) {
  Shape s;
  s.kind = GroupKind::S;
  s.part = p;
  return s;
}

Shape Shape::of(const Bipartition& b) {
  Shape s;
  s.kind = GroupKind::B;
  s.bip = b;
  return s;
}

Shape Shape::of(const Dipartition& d) {
  Shape s;
  s.kind = GroupKind::D;
  s.dip = d;
  return s;
}

Shape Shape::parse(GroupKind kind, const std::string& text) {
  switch (kind) {
    case GroupKind::S: return of(comb::parse_partition(text));
    case GroupKind::B: return of(comb::parse_bipartition(text));
    case GroupKind::D: return of(comb::parse_dipartition(text));
  }
  throw std::invalid_argument("unknown group kind");
}

int Shape::n() const {
  switch (kind) {
    case GroupKind::S: return part.size();
    case GroupKind::B: return bip.n();
    case GroupKind::D: return dip->n();
  }
  return 0;
}

std::string Shape::to_string() const {
  switch (kind) {
    case GroupKind::S: return part.to_string();
    case GroupKind::B: return bip.to_string();
    case GroupKind::D: return dip->to_string();
  }
  return "";
}

// ------------------------------------------------------------ generator sets

namespace {

void append_orbit(const FactoredGenerator& base, std::unordered_set<std::string>& seen,
                  std::vector<FactoredGenerator>& out) {
  std::vector<int> support(base.nvars);
  std::iota(support.begin(), support.end(), 1);
  groups::for_each_permutation_of(base.nvars, support, [&](const groups::Permutation& sigma) {
    FactoredGenerator g = base.permuted(sigma);
    if (seen.insert(g.key()).second) out.push_back(std::move(g));
  });
}

}  // namespace

std::vector<FactoredGenerator> factored_generators(const Shape& shape) {
  if (shape.n() < 1) throw std::invalid_argument("Specht ideals need n >= 1");
  std::vector<FactoredGenerator> out;
  std::unordered_set<std::string> seen;
  switch (shape.kind) {
    case GroupKind::S:
      append_orbit(factored_S(base_tableau(shape.part), shape.part.size()), seen, out);
      break;
    case GroupKind::B:
      append_orbit(factored_B(base_bitableau(shape.bip)), seen, out);
      break;
    case GroupKind::D: {
      const Dipartition& d = *shape.dip;
      if (d.is_signed()) {
        append_orbit(factored_D(base_bitableau(d.bipartition()), d.sign()), seen, out);
      } else {
        append_orbit(factored_B(base_bitableau(d.bipartition())), seen, out);
        append_orbit(factored_B(base_bitableau(d.bipartition().swapped())), seen, out);
      }
      break;
    }
  }
  return out;
}

GeneratorSet generator_set(const Shape& shape) {
  GeneratorSet gs;
  gs.nvars = static_cast<std::size_t>(shape.n());
  gs.key = groups::to_string(shape.kind) + ":" + shape.to_string();
  gs.factored = factored_generators(shape);
  gs.generators.reserve(gs.factored.size());
  for (const auto& g : gs.factored) gs.generators.push_back(g.expand());
  return gs;
}

}  // namespace dspecht::specht
