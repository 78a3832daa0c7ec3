#pragma once

// The dihedral group I_2(n) acting on K[x, y].
//
// Everything needing the rotation by 2π/n is either restated as an exact
// polynomial identity or checked in floating point; cyclotomic numbers are
// never formed.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dspecht/ideals.hpp"
#include "dspecht/polynomial.hpp"

namespace dspecht::dihedral {

using alg::Polynomial;
using specht::GeneratorSet;

/// Re((x+iy)^k) and Im((x+iy)^k), exact integer coefficients.
Polynomial re_power(unsigned k);
Polynomial im_power(unsigned k);

/// (x²+y², 2·Re((x+iy)^n)); throws std::invalid_argument for n < 3.
std::pair<Polynomial, Polynomial> fundamental_invariants(unsigned n);

/// re_k·x − im_k·y = re_{k+1} and re_k·y + im_k·x = im_{k+1}.
bool recurrence_check(unsigned k);
/// im_{2k} = 2·re_k·im_k.
bool doubling_check(unsigned k);
/// re_k² + im_k² = (x²+y²)^k.
bool modulus_check(unsigned k);

/// (y ↦ −y) fixes ψ1, ψ2 and negates Im((x+iy)^n).
bool reflection_check(unsigned n);
/// Rotation by 2π/n fixes ψ1, ψ2 and Im((x+iy)^n) at `samples` random points.
bool rotation_sample_check(unsigned n, double tolerance, std::uint64_t seed, int samples = 10);

/// rank span{1, Δ, re_k, im_k : 1 ≤ k ≤ n−1}; the harmonics have dimension 2n.
std::size_t harmonics_rank(unsigned n);

/// "squarefree" for a bivariate form: y-multiplicity ≤ 1 and f(x, 1) squarefree.
bool bivariate_form_squarefree(const Polynomial& f);

/// The Specht ideals of I_2(n), in chain order: I_0, I_1, ..., I_m with
/// m = ⌊(n−1)/2⌋, then I^Re and I^Im for even n, then I_n.
struct DihedralIdeal {
  std::string name;
  GeneratorSet ideal;
};
std::vector<DihedralIdeal> specht_ideals(unsigned n);

struct ChainLink {
  std::string larger;
  std::string smaller;
  bool contained = false;   // every generator of `smaller` certified in `larger`
  bool strict = false;      // some generator of `larger` is not in `smaller`
  std::string strict_reason;
};

struct RadicalLabel {
  std::string name;
  bool radical = false;
  std::string reason;
};

struct DihedralReport {
  unsigned n = 0;
  std::vector<std::string> chain;
  std::vector<ChainLink> links;
  bool has_pair = false;          // even n
  bool incomparable_pair = false;
  std::vector<RadicalLabel> labels;
  bool classification_matches = false;
  bool hyperplane_ok = false;
  bool harmonics_ok = false;
  bool identities_ok = false;
  bool invariance_ok = false;

  bool passed() const;
};

/// Chain, strictness, incomparability, radical labels and numeric checks.
DihedralReport dihedral_report(unsigned n, double tolerance = 1e-9, std::uint64_t seed = 1);

/// Radical labels alone, justified as in the report.
std::vector<RadicalLabel> dihedral_radical_classification(unsigned n);

/// Reflection-line sampling for Im((x+iy)^n) and, for even n, the Re/Im split.
bool hyperplane_sample_check(unsigned n, double tolerance);

}  // namespace dspecht::dihedral
