#pragma once

// Correctness checks bundled into suites, each producing a JSON report.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace dspecht::verify {

using json = nlohmann::ordered_json;

struct Options {
  int n = 4;
  bool n_given = false;  // dihedral sweeps 3..12 unless set
  int b_max = 4;
  bool extended = false;
  unsigned jobs = 1;
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
};

struct Check {
  std::string name;
  bool passed = false;
  json detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  json to_json() const;
};

/// "poset", "ideals", "varieties", "dihedral", "identities", "all".
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
Report run(const std::string& suite, const Options& options);

// Individual checks; the suites are made of these.

/// Reflexive, antisymmetric, transitive, unique minimum {∅, (1^n)}.
Check poset_axioms(int n);
/// Hasse diagram sizes of 𝒟_n.
Check poset_counts(int n, std::size_t nodes, std::size_t edges);
/// For every λ ⊢ n/2: lower covers of {λ, ±} are the signed covers, and the
/// row-sum cover statement holds.
Check signed_cover_structure(int n);

/// didominance = ideal inclusion = reversed variety inclusion on 𝒟_n.
Check d_equivalence(int n, unsigned jobs);
/// didominance = reversed variety inclusion on 𝒟_n, on representatives.
Check d_variety_equivalence(int n);
/// dominance ⇔ S-ideal inclusion and bidominance ⇔ B-ideal inclusion.
Check s_equivalence(int n, unsigned jobs);
Check b_equivalence(int n, unsigned jobs);

/// Antisymmetrizer identities for one b (coset sums only when b ≤ coset_max).
Check antisymmetrizer_identities(int b, int coset_max = 3);
/// f1 + f2 ∈ I_{(1,1),+} although g does not divide it (n = 4).
Check divisibility_example();
/// (1,1,1,1,2) separates V_{(3,2),∅} from V_{(2),(2,1)} ∪ V_{(1,1),(3)}.
Check counterexample_witness();
/// Brute-force and predicted membership agree on every shape × representative.
Check oracle_agreement(int n);
/// No point without zero coordinates in V_(λ,μ) \ V_(μ,λ).
Check zero_coordinate(int n);
/// Intersections of B-ideals at n = 4 against I^B_{((1),(2,1))}, degrees ≤ d_max.
Check intersection_evidence(int d_max, unsigned jobs);
/// Full dihedral report for one n.
Check dihedral(int n, double tolerance, std::uint64_t seed);

}  // namespace dspecht::verify
