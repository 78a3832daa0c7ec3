#include "dspecht/ideals.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dspecht::ideals {

namespace {

// v - c*r for rows sorted by column.
SparseRow axpy(const SparseRow& v, const Rational& c, const SparseRow& r) {
  SparseRow out;
  out.reserve(v.size() + r.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < r.size()) {
    if (j == r.size() || (i < v.size() && v[i].first < r[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || r[j].first < v[i].first) {
      out.emplace_back(r[j].first, -c * r[j].second);
      ++j;
    } else {
      Rational x = v[i].second - c * r[j].second;
      if (x != 0) out.emplace_back(v[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

void scale(SparseRow& v, const Rational& c) {
  for (auto& e : v) e.second *= c;
}

std::uint64_t monomial_key(const Monomial& m) {
  if (m.nvars() > 8) throw std::invalid_argument("the graded engine supports at most 8 variables");
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] > 255) throw std::invalid_argument("exponent too large for the graded engine");
    k = (k << 8) | m[i];
  }
  return k;
}

std::uint64_t ones(std::size_t nvars) { return nvars >= 64 ? ~0ULL : ((1ULL << nvars) - 1); }

std::vector<std::uint64_t> blocks_of(Grading g, std::size_t nvars) {
  std::vector<std::uint64_t> out;
  if (g == Grading::Single) return {0};
  for (std::uint64_t p = 0; p <= ones(nvars); ++p) {
    if (block_of(g, p, nvars) == p) out.push_back(p);
  }
  return out;
}

std::map<std::uint64_t, Polynomial> split_by_block(const Polynomial& f, Grading g) {
  std::map<std::uint64_t, Polynomial> parts;
  for (const auto& [m, c] : f.terms()) {
    auto b = block_of(g, m.parity(), f.nvars());
    auto it = parts.try_emplace(b, Polynomial(f.nvars())).first;
    it->second.add_term(m, c);
  }
  return parts;
}

void check_same_ring(const GeneratorSet& I, const Polynomial& f) {
  if (I.nvars != f.nvars()) {
    throw std::invalid_argument("ideal lives in " + std::to_string(I.nvars) + " variables, polynomial in " +
                                std::to_string(f.nvars()));
  }
}

}  // namespace

// ------------------------------------------------------------------ Echelon

bool Echelon::insert(SparseRow v, std::uint32_t origin) {
  SparseRow comb;
  if (track_) comb.emplace_back(origin, Rational(1));
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) {
      Rational inv = 1 / v.front().second;
      scale(v, inv);
      if (track_) scale(comb, inv);
      std::uint32_t pivot = v.front().first;
      rows_.emplace(pivot, Row{std::move(v), std::move(comb)});
      return true;
    }
    Rational c = v.front().second;
    v = axpy(v, c, it->second.values);
    if (track_) {
      comb = axpy(comb, c, it->second.combination);
    }
  }
  return false;
}

bool Echelon::contains(SparseRow v) const {
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) return false;
    Rational c = v.front().second;
    v = axpy(v, c, it->second.values);
  }
  return true;
}

std::optional<SparseRow> Echelon::express(SparseRow v) const {
  SparseRow acc;
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) return std::nullopt;
    Rational c = v.front().second;
    v = axpy(v, c, it->second.values);
    acc = axpy(acc, -c, it->second.combination);
  }
  return acc;
}

std::vector<SparseRow> Echelon::basis() const {
  std::vector<SparseRow> out;
  out.reserve(rows_.size());
  for (const auto& [p, r] : rows_) out.push_back(r.values);
  return out;
}

// ------------------------------------------------------------------ grading

Grading natural_grading(const std::vector<Polynomial>& generators, std::size_t nvars) {
  bool single_class = true;
  bool mod_ones = true;
  const std::uint64_t all = ones(nvars);
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    std::uint64_t first = g.leading_monomial().parity();
    for (const auto& [m, c] : g.terms()) {
      std::uint64_t p = m.parity();
      if (p != first) single_class = false;
      if (p != first && p != (first ^ all)) mod_ones = false;
    }
  }
  if (single_class) return Grading::Full;
  if (mod_ones) return Grading::ModOnes;
  return Grading::Single;
}

Grading coarser(Grading a, Grading b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

std::uint64_t block_of(Grading g, std::uint64_t parity, std::size_t nvars) {
  switch (g) {
    case Grading::Full: return parity;
    case Grading::ModOnes: return std::min(parity, parity ^ ones(nvars));
    case Grading::Single: return 0;
  }
  return 0;
}

// ------------------------------------------------------------- ColumnSpace

std::uint32_t ColumnSpace::column(const Monomial& m) const {
  auto it = index.find(monomial_key(m));
  if (it == index.end()) throw std::logic_error("monomial outside the column space");
  return it->second;
}

SparseRow ColumnSpace::row_of(const Polynomial& f) const {
  SparseRow row;
  row.reserve(f.size());
  for (const auto& [m, c] : f.terms()) row.emplace_back(column(m), c);
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

// -------------------------------------------------------------- SliceCache

SliceCache& default_cache() {
  static SliceCache cache;
  return cache;
}

std::shared_ptr<const std::map<std::uint64_t, std::vector<Monomial>>> SliceCache::multipliers(
    std::size_t nvars, int degree) {
  std::string key = std::to_string(nvars) + ":" + std::to_string(degree);
  {
    std::lock_guard lock(mutex_);
    auto it = multipliers_.find(key);
    if (it != multipliers_.end()) return it->second;
  }
  auto grouped = std::make_shared<std::map<std::uint64_t, std::vector<Monomial>>>();
  if (degree >= 0) {
    for (auto& m : alg::monomials_of_degree(nvars, static_cast<std::uint32_t>(degree))) {
      (*grouped)[m.parity()].push_back(std::move(m));
    }
  }
  std::lock_guard lock(mutex_);
  return multipliers_.emplace(key, std::move(grouped)).first->second;
}

std::shared_ptr<const ColumnSpace> SliceCache::columns(std::size_t nvars, int degree, Grading grading,
                                                       std::uint64_t block) {
  std::string key = std::to_string(nvars) + ":" + std::to_string(degree) + ":" +
                    std::to_string(static_cast<int>(grading)) + ":" + std::to_string(block);
  {
    std::lock_guard lock(mutex_);
    auto it = columns_.find(key);
    if (it != columns_.end()) return it->second;
  }
  auto space = std::make_shared<ColumnSpace>();
  if (degree >= 0) {
    for (auto& m : alg::monomials_of_degree(nvars, static_cast<std::uint32_t>(degree))) {
      if (block_of(grading, m.parity(), nvars) != block) continue;
      space->index.emplace(monomial_key(m), static_cast<std::uint32_t>(space->monomials.size()));
      space->monomials.push_back(std::move(m));
    }
  }
  std::lock_guard lock(mutex_);
  return columns_.emplace(key, std::move(space)).first->second;
}

Grading SliceCache::grading_of(const GeneratorSet& ideal) {
  if (!ideal.key.empty()) {
    std::lock_guard lock(mutex_);
    auto it = gradings_.find(ideal.key);
    if (it != gradings_.end()) return it->second;
  }
  Grading g = natural_grading(ideal.generators, ideal.nvars);
  if (!ideal.key.empty()) {
    std::lock_guard lock(mutex_);
    gradings_.emplace(ideal.key, g);
  }
  return g;
}

namespace {

// Calls visit(generator index, multiplier) for every spanning product of the block.
template <class Visit>
void for_each_product(const GeneratorSet& ideal, int degree, Grading grading, std::uint64_t block,
                      SliceCache& cache, Visit visit) {
  for (std::size_t gi = 0; gi < ideal.generators.size(); ++gi) {
    const Polynomial& g = ideal.generators[gi];
    if (g.is_zero()) continue;
    int e = degree - g.degree();
    if (e < 0) continue;
    std::uint64_t gp = g.leading_monomial().parity();
    auto mult = cache.multipliers(ideal.nvars, e);
    for (const auto& [parity, monos] : *mult) {
      if (block_of(grading, parity ^ gp, ideal.nvars) != block) continue;
      for (const auto& m : monos) visit(gi, m);
    }
  }
}

}  // namespace

std::shared_ptr<const GradedSlice> SliceCache::get(const GeneratorSet& ideal, int degree, Grading grading,
                                                   std::uint64_t block) {
  std::string key = ideal.key + "#" + std::to_string(ideal.nvars) + ":" + std::to_string(degree) + ":" +
                    std::to_string(static_cast<int>(grading)) + ":" + std::to_string(block);
  if (!ideal.key.empty()) {
    std::lock_guard lock(mutex_);
    auto it = slices_.find(key);
    if (it != slices_.end()) return it->second;
  }
  auto slice = std::make_shared<GradedSlice>();
  slice->degree = degree;
  slice->grading = grading;
  slice->block = block;
  slice->columns = columns(ideal.nvars, degree, grading, block);
  for_each_product(ideal, degree, grading, block, *this, [&](std::size_t gi, const Monomial& m) {
    ++slice->spanning_rows;
    if (slice->echelon.rank() == slice->columns->monomials.size()) return;
    slice->echelon.insert(slice->columns->row_of(ideal.generators[gi].times_monomial(m)));
  });
  if (ideal.key.empty()) return slice;
  std::lock_guard lock(mutex_);
  // Identical keys produce identical slices, so an earlier insertion wins harmlessly.
  return slices_.emplace(key, std::move(slice)).first->second;
}

void SliceCache::clear() {
  std::lock_guard lock(mutex_);
  slices_.clear();
  columns_.clear();
  multipliers_.clear();
  gradings_.clear();
}

std::size_t SliceCache::size() const {
  std::lock_guard lock(mutex_);
  return slices_.size();
}

// --------------------------------------------------------------- membership

std::size_t slice_rank(const GeneratorSet& ideal, int degree, SliceCache& cache) {
  if (degree < 0) return 0;
  Grading g = cache.grading_of(ideal);
  std::size_t rank = 0;
  for (auto b : blocks_of(g, ideal.nvars)) rank += cache.get(ideal, degree, g, b)->rank();
  return rank;
}

bool contains(const GeneratorSet& ideal, const Polynomial& f, SliceCache& cache) {
  check_same_ring(ideal, f);
  if (f.is_zero()) return true;
  Grading g = cache.grading_of(ideal);
  for (const auto& [d, part] : f.homogeneous_components()) {
    for (const auto& [b, piece] : split_by_block(part, g)) {
      auto slice = cache.get(ideal, d, g, b);
      if (!slice->echelon.contains(slice->columns->row_of(piece))) return false;
    }
  }
  return true;
}

bool ideal_leq(const GeneratorSet& I, const GeneratorSet& J, SliceCache& cache) {
  if (I.nvars != J.nvars) throw std::invalid_argument("ideals live in different rings");
  for (const auto& g : I.generators) {
    if (!contains(J, g, cache)) return false;
  }
  return true;
}

Polynomial Certificate::evaluate(const GeneratorSet& ideal) const {
  Polynomial sum(ideal.nvars);
  for (const auto& t : terms) sum.add_scaled(ideal.generators.at(t.generator), t.coefficient, t.multiplier);
  return sum;
}

std::optional<Certificate> certify(const GeneratorSet& ideal, const Polynomial& f) {
  check_same_ring(ideal, f);
  Certificate cert;
  if (f.is_zero()) return cert;
  SliceCache scratch;
  Grading g = natural_grading(ideal.generators, ideal.nvars);
  for (const auto& [d, part] : f.homogeneous_components()) {
    for (const auto& [b, piece] : split_by_block(part, g)) {
      auto cols = scratch.columns(ideal.nvars, d, g, b);
      Echelon tracked(true);
      std::vector<std::pair<std::size_t, Monomial>> origins;
      for_each_product(ideal, d, g, b, scratch, [&](std::size_t gi, const Monomial& m) {
        origins.emplace_back(gi, m);
        tracked.insert(cols->row_of(ideal.generators[gi].times_monomial(m)),
                       static_cast<std::uint32_t>(origins.size() - 1));
      });
      auto comb = tracked.express(cols->row_of(piece));
      if (!comb) return std::nullopt;
      for (const auto& [o, c] : *comb) cert.terms.push_back({origins[o].first, origins[o].second, c});
    }
  }
  return cert;
}

// ------------------------------------------------------------- intersections

std::vector<SparseRow> intersect(const std::vector<SparseRow>& U, const std::vector<SparseRow>& W,
                                 std::uint32_t ncols) {
  Echelon e;
  for (const auto& u : U) {
    SparseRow row = u;
    for (const auto& [c, x] : u) row.emplace_back(c + ncols, x);
    e.insert(std::move(row));
  }
  for (const auto& w : W) e.insert(w);
  std::vector<SparseRow> out;
  for (const auto& row : e.basis()) {
    if (row.front().first < ncols) continue;
    SparseRow r;
    for (const auto& [c, x] : row) r.emplace_back(c - ncols, x);
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

Grading common_grading(const std::vector<const GeneratorSet*>& ideals, SliceCache& cache) {
  Grading g = Grading::Full;
  for (const auto* I : ideals) g = coarser(g, cache.grading_of(*I));
  return g;
}

std::vector<SparseRow> meet_block(const std::vector<const GeneratorSet*>& ideals, int d, Grading g,
                                  std::uint64_t b, SliceCache& cache, std::uint32_t& ncols) {
  std::vector<SparseRow> space;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    auto slice = cache.get(*ideals[i], d, g, b);
    ncols = static_cast<std::uint32_t>(slice->columns->monomials.size());
    auto basis = slice->echelon.basis();
    space = i == 0 ? std::move(basis) : intersect(space, basis, ncols);
    if (space.empty()) break;
  }
  return space;
}

std::size_t check_rings(const std::vector<const GeneratorSet*>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersection of no ideals");
  for (const auto* I : ideals) {
    if (I->nvars != ideals.front()->nvars) throw std::invalid_argument("ideals live in different rings");
  }
  return ideals.front()->nvars;
}

}  // namespace

std::vector<IntersectionSlice> intersection_dimensions(const std::vector<const GeneratorSet*>& ideals,
                                                       int d_max, SliceCache& cache) {
  const std::size_t n = check_rings(ideals);
  Grading g = common_grading(ideals, cache);
  std::vector<IntersectionSlice> out;
  for (int d = 0; d <= d_max; ++d) {
    std::size_t dim = 0;
    for (auto b : blocks_of(g, n)) {
      std::uint32_t ncols = 0;
      dim += meet_block(ideals, d, g, b, cache, ncols).size();
    }
    out.push_back({d, dim});
  }
  return out;
}

bool slice_equal(const std::vector<const GeneratorSet*>& left, const std::vector<const GeneratorSet*>& right,
                 int d_max, SliceCache& cache) {
  const std::size_t n = check_rings(left);
  if (check_rings(right) != n) throw std::invalid_argument("ideals live in different rings");
  std::vector<const GeneratorSet*> all = left;
  all.insert(all.end(), right.begin(), right.end());
  Grading g = common_grading(all, cache);
  for (int d = 0; d <= d_max; ++d) {
    for (auto b : blocks_of(g, n)) {
      std::uint32_t ncols = 0;
      auto U = meet_block(left, d, g, b, cache, ncols);
      auto W = meet_block(right, d, g, b, cache, ncols);
      if (U.size() != W.size()) return false;
      Echelon e;
      for (auto& u : U) e.insert(u);
      for (auto& w : W) {
        if (!e.contains(w)) return false;
      }
    }
  }
  return true;
}

bool slice_equal(const GeneratorSet& I, const GeneratorSet& J, int d_max, SliceCache& cache) {
  return slice_equal(std::vector<const GeneratorSet*>{&I}, std::vector<const GeneratorSet*>{&J}, d_max, cache);
}

}  // namespace dspecht::ideals
