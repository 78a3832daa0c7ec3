#pragma once

// Degree-by-degree exact linear algebra for homogeneous ideals.
//
// The degree-d part of a homogeneous ideal is spanned by the products m·g
// with g a generator and deg m = d - deg g. Each slice is echelonized over
// the rationals. When every generator is homogeneous for the exponent-parity
// grading by (Z/2)^n (or by its quotient modulo the all-ones vector), the
// slice splits into independent blocks, which keeps the matrices small.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dspecht/polynomial.hpp"
#include "dspecht/specht.hpp"

namespace dspecht::ideals {

using alg::Monomial;
using alg::Polynomial;
using alg::Rational;
using specht::GeneratorSet;

using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

/// Row echelon form with monic rows keyed by their pivot (first) column.
/// With tracking on, every row also records its combination of the
/// original inputs.
class Echelon {
 public:
  explicit Echelon(bool track = false) : track_(track) {}

  /// Adds v (tagged `origin` when tracking). Returns true if the rank grew.
  bool insert(SparseRow v, std::uint32_t origin = 0);
  /// True iff v lies in the row space.
  bool contains(SparseRow v) const;
  /// Like contains, but on success returns the combination of origins.
  std::optional<SparseRow> express(SparseRow v) const;

  std::size_t rank() const { return rows_.size(); }
  /// Basis rows in pivot order.
  std::vector<SparseRow> basis() const;

 private:
  struct Row {
    SparseRow values;
    SparseRow combination;
  };
  bool track_;
  std::map<std::uint32_t, Row> rows_;
};

/// Which parity grading the generators respect.
enum class Grading { Full, ModOnes, Single };

Grading natural_grading(const std::vector<Polynomial>& generators, std::size_t nvars);
Grading coarser(Grading a, Grading b);
std::uint64_t block_of(Grading g, std::uint64_t parity, std::size_t nvars);

/// The degree-d monomials of one block, in descending order, with a lookup.
struct ColumnSpace {
  std::vector<Monomial> monomials;
  std::unordered_map<std::uint64_t, std::uint32_t> index;

  std::uint32_t column(const Monomial& m) const;
  SparseRow row_of(const Polynomial& f) const;
};

/// One block of a graded slice.
struct GradedSlice {
  int degree = 0;
  Grading grading = Grading::Single;
  std::uint64_t block = 0;
  std::shared_ptr<const ColumnSpace> columns;
  Echelon echelon;
  std::size_t spanning_rows = 0;

  std::size_t rank() const { return echelon.rank(); }
};

/// Thread-safe cache of slices keyed by (ideal key, degree, grading, block).
class SliceCache {
 public:
  std::shared_ptr<const GradedSlice> get(const GeneratorSet& ideal, int degree, Grading grading,
                                         std::uint64_t block);
  std::shared_ptr<const ColumnSpace> columns(std::size_t nvars, int degree, Grading grading,
                                             std::uint64_t block);
  /// Monomials of one degree grouped by exponent parity.
  std::shared_ptr<const std::map<std::uint64_t, std::vector<Monomial>>> multipliers(std::size_t nvars,
                                                                                   int degree);
  /// natural_grading of the ideal, memoized by key.
  Grading grading_of(const GeneratorSet& ideal);
  void clear();
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const GradedSlice>> slices_;
  std::map<std::string, std::shared_ptr<const ColumnSpace>> columns_;
  std::map<std::string, std::shared_ptr<const std::map<std::uint64_t, std::vector<Monomial>>>> multipliers_;
  std::map<std::string, Grading> gradings_;
};

/// The process-wide cache used when no cache is passed explicitly.
SliceCache& default_cache();

/// All blocks of the degree-d slice; the rank is the sum of block ranks.
std::size_t slice_rank(const GeneratorSet& ideal, int degree, SliceCache& cache = default_cache());

/// f ∈ I, tested componentwise by degree and by block.
bool contains(const GeneratorSet& ideal, const Polynomial& f, SliceCache& cache = default_cache());

/// I ⊆ J, i.e. every generator of I lies in J.
bool ideal_leq(const GeneratorSet& I, const GeneratorSet& J, SliceCache& cache = default_cache());

struct CertificateTerm {
  std::size_t generator;
  Monomial multiplier;
  Rational coefficient;
};

struct Certificate {
  std::vector<CertificateTerm> terms;
  /// Σ coefficient · multiplier · generator.
  Polynomial evaluate(const GeneratorSet& ideal) const;
};

/// An explicit combination when f ∈ I, std::nullopt otherwise.
std::optional<Certificate> certify(const GeneratorSet& ideal, const Polynomial& f);

/// Degree-d slice of an intersection of ideals, one block at a time.
struct IntersectionSlice {
  int degree;
  std::size_t dimension;
};

/// Dimensions of the degree-d slices of ∩ ideals for d = 0..d_max.
std::vector<IntersectionSlice> intersection_dimensions(const std::vector<const GeneratorSet*>& ideals,
                                                       int d_max, SliceCache& cache = default_cache());

/// True iff the degree-d slices of ∩ left and ∩ right coincide for all d ≤ d_max.
bool slice_equal(const std::vector<const GeneratorSet*>& left, const std::vector<const GeneratorSet*>& right,
                 int d_max, SliceCache& cache = default_cache());
bool slice_equal(const GeneratorSet& I, const GeneratorSet& J, int d_max, SliceCache& cache = default_cache());

/// Basis of U ∩ W for row spaces over the same columns (Zassenhaus).
std::vector<SparseRow> intersect(const std::vector<SparseRow>& U, const std::vector<SparseRow>& W,
                                 std::uint32_t ncols);

}  // namespace dspecht::ideals
