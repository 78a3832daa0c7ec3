#include "dspecht/dihedral.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "dspecht/groups.hpp"

namespace dspecht::dihedral {

using alg::Monomial;
using alg::Rational;

namespace {

Polynomial x_var() { return Polynomial::variable(2, 0); }
Polynomial y_var() { return Polynomial::variable(2, 1); }

mpz_class binomial(unsigned k, unsigned j) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), k, j);
  return r;
}

double eval_float(const Polynomial& f, double x, double y) {
  double sum = 0;
  for (const auto& [m, c] : f.terms()) sum += c.get_d() * std::pow(x, m[0]) * std::pow(y, m[1]);
  return sum;
}

GeneratorSet make_ideal(unsigned n, const std::string& name, std::vector<Polynomial> gens) {
  GeneratorSet gs;
  gs.nvars = 2;
  gs.key = "I2(" + std::to_string(n) + "):" + name;
  gs.generators = std::move(gens);
  return gs;
}

}  // namespace

Polynomial re_power(unsigned k) {
  Polynomial f(2);
  for (unsigned j = 0; 2 * j <= k; ++j) {
    Rational c(binomial(k, 2 * j));
    if (j % 2) c = -c;
    f.add_term(Monomial(std::vector<std::uint32_t>{k - 2 * j, 2 * j}), c);
  }
  return f;
}

Polynomial im_power(unsigned k) {
  Polynomial f(2);
  for (unsigned j = 0; 2 * j + 1 <= k; ++j) {
    Rational c(binomial(k, 2 * j + 1));
    if (j % 2) c = -c;
    f.add_term(Monomial(std::vector<std::uint32_t>{k - 2 * j - 1, 2 * j + 1}), c);
  }
  return f;
}

std::pair<Polynomial, Polynomial> fundamental_invariants(unsigned n) {
  if (n < 3) throw std::invalid_argument("I_2(n) needs n >= 3");
  return {x_var() * x_var() + y_var() * y_var(), re_power(n) * Rational(2)};
}

bool recurrence_check(unsigned k) {
  return re_power(k) * x_var() - im_power(k) * y_var() == re_power(k + 1) &&
         re_power(k) * y_var() + im_power(k) * x_var() == im_power(k + 1);
}

bool doubling_check(unsigned k) { return im_power(2 * k) == re_power(k) * im_power(k) * Rational(2); }

bool modulus_check(unsigned k) {
  Polynomial r = re_power(k), i = im_power(k);
  return r * r + i * i == (x_var() * x_var() + y_var() * y_var()).pow(k);
}

bool reflection_check(unsigned n) {
  auto s = groups::SignedPermutation::sign_flip(2, 2);
  auto [psi1, psi2] = fundamental_invariants(n);
  Polynomial delta = im_power(n);
  return groups::act(s, psi1) == psi1 && groups::act(s, psi2) == psi2 && groups::act(s, delta) == -delta;
}

bool rotation_sample_check(unsigned n, double tolerance, std::uint64_t seed, int samples) {
  auto [psi1, psi2] = fundamental_invariants(n);
  Polynomial delta = im_power(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  const double angle = 2 * std::numbers::pi / n;
  for (int s = 0; s < samples; ++s) {
    double x = coord(rng), y = coord(rng);
    double rx = std::cos(angle) * x - std::sin(angle) * y;
    double ry = std::sin(angle) * x + std::cos(angle) * y;
    for (const Polynomial* f : {&psi1, &psi2, &delta}) {
      if (std::abs(eval_float(*f, x, y) - eval_float(*f, rx, ry)) > tolerance) return false;
    }
  }
  return true;
}

std::size_t harmonics_rank(unsigned n) {
  std::vector<Polynomial> span{Polynomial(2, 1), im_power(n)};
  for (unsigned k = 1; k < n; ++k) {
    span.push_back(re_power(k));
    span.push_back(im_power(k));
  }
  std::map<Monomial, std::uint32_t, std::greater<>> columns;
  for (const auto& f : span) {
    for (const auto& [m, c] : f.terms()) columns.emplace(m, 0);
  }
  std::uint32_t next = 0;
  for (auto& [m, idx] : columns) idx = next++;
  ideals::Echelon e;
  for (const auto& f : span) {
    ideals::SparseRow row;
    for (const auto& [m, c] : f.terms()) row.emplace_back(columns.at(m), c);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    e.insert(std::move(row));
  }
  return e.rank();
}

bool bivariate_form_squarefree(const Polynomial& f) {
  if (f.nvars() != 2) throw std::invalid_argument("expected a polynomial in x, y");
  if (f.is_zero()) throw std::domain_error("squarefree test of the zero polynomial");
  std::uint32_t a = UINT32_MAX;
  for (const auto& [m, c] : f.terms()) a = std::min(a, m[1]);
  if (a > 1) return false;
  Polynomial g(1);
  for (const auto& [m, c] : f.terms()) g.add_term(Monomial(std::vector<std::uint32_t>{m[0]}), c);
  return alg::univariate_squarefree(g);
}

std::vector<DihedralIdeal> specht_ideals(unsigned n) {
  if (n < 3) throw std::invalid_argument("I_2(n) needs n >= 3");
  std::vector<DihedralIdeal> out;
  out.push_back({"I_0", make_ideal(n, "I_0", {Polynomial(2, 1)})});
  const unsigned m = (n - 1) / 2;
  for (unsigned k = 1; k <= m; ++k) {
    std::string name = "I_" + std::to_string(k);
    out.push_back({name, make_ideal(n, name, {re_power(k), im_power(k)})});
  }
  if (n % 2 == 0) {
    std::string h = std::to_string(n / 2);
    out.push_back({"I_" + h + "^Re", make_ideal(n, "I_" + h + "^Re", {re_power(n / 2)})});
    out.push_back({"I_" + h + "^Im", make_ideal(n, "I_" + h + "^Im", {im_power(n / 2)})});
  }
  std::string top = "I_" + std::to_string(n);
  out.push_back({top, make_ideal(n, top, {im_power(n)})});
  return out;
}

namespace {

int min_degree(const GeneratorSet& I) {
  int d = INT32_MAX;
  for (const auto& g : I.generators) d = std::min(d, g.degree());
  return d;
}

// smaller ⊆ larger with an explicit, re-multiplied certificate per generator.
bool certified_inclusion(const GeneratorSet& smaller, const GeneratorSet& larger) {
  for (const auto& g : smaller.generators) {
    auto cert = ideals::certify(larger, g);
    if (!cert || cert->evaluate(larger) != g) return false;
  }
  return true;
}

ChainLink make_link(const DihedralIdeal& larger, const DihedralIdeal& smaller) {
  ChainLink link;
  link.larger = larger.name;
  link.smaller = smaller.name;
  link.contained = certified_inclusion(smaller.ideal, larger.ideal);
  for (const auto& g : larger.ideal.generators) {
    if (ideals::contains(smaller.ideal, g)) continue;
    link.strict = true;
    if (g.degree() < min_degree(smaller.ideal)) {
      link.strict_reason = "degree: " + larger.name + " has a generator of degree " + std::to_string(g.degree()) +
                           " below every generator of " + smaller.name;
    } else {
      link.strict_reason = "slice: a generator of " + larger.name + " is not in the degree-" +
                           std::to_string(g.degree()) + " slice of " + smaller.name;
    }
    break;
  }
  return link;
}

}  // namespace

std::vector<RadicalLabel> dihedral_radical_classification(unsigned n) {
  auto ideals_list = specht_ideals(n);
  std::vector<RadicalLabel> out;
  for (const auto& [name, I] : ideals_list) {
    RadicalLabel label;
    label.name = name;
    if (name == "I_0") {
      label.radical = true;
      label.reason = "unit ideal";
    } else if (name == "I_1") {
      label.radical = true;
      label.reason = "generated by the variables x, y";
    } else if (I.generators.size() == 1) {
      label.radical = bivariate_form_squarefree(I.generators.front());
      label.reason = label.radical ? "principal, generator squarefree" : "principal, generator has a repeated factor";
    } else {
      // re_k² + im_k² = (x²+y²)^k, so the only real common zero is the origin,
      // while x vanishes there but lies outside the ideal.
      unsigned k = static_cast<unsigned>(I.generators.front().degree());
      bool origin_only = modulus_check(k);
      bool x_outside = ideals::slice_rank(I, 1) == 0;
      label.radical = !(origin_only && x_outside);
      label.reason = label.radical ? "unclassified" : "variety is the origin but x is not in the ideal";
    }
    out.push_back(std::move(label));
  }
  return out;
}

bool hyperplane_sample_check(unsigned n, double tolerance) {
  if (n < 3) throw std::invalid_argument("I_2(n) needs n >= 3");
  const Polynomial delta = im_power(n);
  const double scales[] = {0.5, 1.0, 1.5};
  for (unsigned j = 0; j < n; ++j) {
    const double on = j * std::numbers::pi / n;
    const double off = (j + 0.5) * std::numbers::pi / n;
    for (double t : scales) {
      if (std::abs(eval_float(delta, t * std::cos(on), t * std::sin(on))) > tolerance) return false;
      if (std::abs(eval_float(delta, t * std::cos(off), t * std::sin(off))) < 1e-6) return false;
    }
  }
  if (std::abs(eval_float(delta, 1.0, 0.37)) < 1e-6) return false;
  if (n % 2 == 0) {
    const unsigned h = n / 2;
    const Polynomial re = re_power(h), im = im_power(h);
    unsigned im_lines = 0, re_lines = 0;
    for (unsigned j = 0; j < n; ++j) {
      const double a = j * std::numbers::pi / n;
      bool im_zero = true, re_zero = true;
      for (double t : scales) {
        im_zero = im_zero && std::abs(eval_float(im, t * std::cos(a), t * std::sin(a))) <= tolerance;
        re_zero = re_zero && std::abs(eval_float(re, t * std::cos(a), t * std::sin(a))) <= tolerance;
      }
      if (im_zero == re_zero) return false;  // each line belongs to exactly one of the two
      if (im_zero != (j % 2 == 0)) return false;
      im_lines += im_zero;
      re_lines += re_zero;
    }
    if (im_lines != h || re_lines != h) return false;
  }
  return true;
}

bool DihedralReport::passed() const {
  for (const auto& l : links) {
    if (!l.contained || !l.strict) return false;
  }
  return (!has_pair || incomparable_pair) && classification_matches && hyperplane_ok && harmonics_ok &&
         identities_ok && invariance_ok;
}

DihedralReport dihedral_report(unsigned n, double tolerance, std::uint64_t seed) {
  DihedralReport r;
  r.n = n;
  auto list = specht_ideals(n);
  for (const auto& d : list) r.chain.push_back(d.name);

  const unsigned m = (n - 1) / 2;
  for (unsigned k = 0; k < m; ++k) r.links.push_back(make_link(list[k], list[k + 1]));
  if (n % 2 == 0) {
    const auto& re = list[m + 1];
    const auto& im = list[m + 2];
    r.links.push_back(make_link(list[m], re));
    r.links.push_back(make_link(list[m], im));
    r.links.push_back(make_link(re, list.back()));
    r.links.push_back(make_link(im, list.back()));
    r.has_pair = true;
    r.incomparable_pair = !ideals::ideal_leq(re.ideal, im.ideal) && !ideals::ideal_leq(im.ideal, re.ideal);
  } else {
    r.links.push_back(make_link(list[m], list.back()));
  }

  r.labels = dihedral_radical_classification(n);
  r.classification_matches = true;
  for (const auto& l : r.labels) {
    bool expected = l.name == "I_0" || l.name == "I_1" || l.name == "I_" + std::to_string(n) ||
                    l.name.find('^') != std::string::npos;
    if (l.radical != expected) r.classification_matches = false;
  }

  r.hyperplane_ok = hyperplane_sample_check(n, tolerance);
  r.harmonics_ok = harmonics_rank(n) == 2 * n;
  r.identities_ok = true;
  for (unsigned k = 1; k <= n; ++k) r.identities_ok = r.identities_ok && recurrence_check(k) && modulus_check(k);
  if (n % 2 == 0) r.identities_ok = r.identities_ok && doubling_check(n / 2);
  r.invariance_ok = reflection_check(n) && rotation_sample_check(n, tolerance, seed);
  return r;
}

}  // namespace dspecht::dihedral
