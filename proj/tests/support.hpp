#pragma once

// Helpers shared by the unit and property tests.

#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dspecht/poly_io.hpp"
#include "dspecht/polynomial.hpp"

// Readable failure messages for polynomial comparisons.
namespace dspecht::alg {
inline void PrintTo(const Polynomial& f, std::ostream* os) { *os << to_string(f); }
}  // namespace dspecht::alg

namespace testsupport {

using dspecht::alg::Monomial;
using dspecht::alg::Polynomial;
using dspecht::alg::Rational;

/// Seed for randomized properties; DSPECHT_SEED overrides the default.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("DSPECHT_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611;
}

inline Rational random_rational(std::mt19937_64& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 4);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, int max_terms = 5,
                                    std::uint32_t max_exp = 3) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> expo(0, max_exp);
  Polynomial f(nvars);
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    std::vector<std::uint32_t> e(nvars);
    for (auto& x : e) x = expo(rng);
    f.add_term(Monomial(e), random_rational(rng));
  }
  return f;
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(random_rational(rng));
  return p;
}

/// Reference Hasse diagrams of D4 and D5: node labels in CLI syntax, edges
/// (lower, upper) by 1-based node index.
struct Drawing {
  std::vector<std::string> nodes;
  std::vector<std::pair<int, int>> edges;
};

inline Drawing hasse_d4() {
  return {{"()|(1,1,1,1)", "(1)|(1,1,1)", "()|(2,1,1)", "(1,1)|+", "(1,1)|-", "()|(2,2)", "(1,1)|(2)",
           "(1)|(2,1)", "()|(3,1)", "(2)|+", "(2)|-", "(1)|(3)", "()|(4)"},
          {{1, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}, {4, 6}, {4, 7}, {5, 6}, {5, 7},
           {6, 8}, {7, 8}, {8, 9}, {8, 10}, {8, 11}, {9, 12}, {10, 12}, {11, 12}, {12, 13}}};
}

inline Drawing hasse_d5() {
  return {{"()|(1,1,1,1,1)", "(1)|(1,1,1,1)", "(1,1)|(1,1,1)", "()|(2,1,1,1)", "()|(2,2,1)", "(2)|(1,1,1)",
           "(1)|(2,1,1)", "(1,1)|(2,1)", "()|(3,1,1)", "(1)|(2,2)", "(1,1)|(3)", "()|(3,2)", "(2)|(2,1)",
           "(1)|(3,1)", "()|(4,1)", "(2)|(3)", "(1)|(4)", "()|(5)"},
          {{1, 2},   {2, 3},   {2, 4},   {3, 5},   {3, 6},   {4, 5},   {4, 6},   {5, 7},   {6, 7},
           {7, 8},   {7, 9},   {8, 10},  {8, 11},  {9, 11},  {9, 12},  {10, 12}, {10, 13}, {11, 14},
           {12, 14}, {13, 14}, {14, 15}, {14, 16}, {15, 17}, {16, 17}, {17, 18}}};
}

}  // namespace testsupport
