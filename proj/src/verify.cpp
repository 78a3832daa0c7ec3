#include "dspecht/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "dspecht/combinat.hpp"
#include "dspecht/dihedral.hpp"
#include "dspecht/groups.hpp"
#include "dspecht/ideals.hpp"
#include "dspecht/poly_io.hpp"
#include "dspecht/specht.hpp"
#include "dspecht/varieties.hpp"

namespace dspecht::verify {

using alg::Polynomial;
using alg::Rational;
using comb::Bipartition;
using comb::Dipartition;
using comb::Partition;

namespace {

// Runs body(i) for i < count on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

Check named(std::string name) {
  Check c;
  c.name = std::move(name);
  return c;
}

// Compares predicted[i][j] with actual(i, j) over an m×m grid.
template <class Label>
Check matrix_check(std::string name, const std::vector<Label>& elements,
                   const std::function<bool(std::size_t, std::size_t)>& expected,
                   const std::function<bool(std::size_t, std::size_t)>& actual, unsigned jobs) {
  const std::size_t m = elements.size();
  std::vector<char> got(m * m, 0);
  parallel_for(m * m, jobs, [&](std::size_t k) { got[k] = actual(k / m, k % m) ? 1 : 0; });
  Check c = named(std::move(name));
  json mismatches = json::array();
  std::size_t relations = 0;
  for (std::size_t k = 0; k < m * m; ++k) {
    const std::size_t i = k / m, j = k % m;
    const bool want = expected(i, j);
    relations += want;
    if (want != static_cast<bool>(got[k])) {
      mismatches.push_back({{"left", elements[i].to_string()}, {"right", elements[j].to_string()},
                            {"expected", want}});
    }
  }
  c.passed = mismatches.empty();
  c.detail = {{"elements", m}, {"pairs", m * m}, {"relations", relations}, {"mismatches", mismatches}};
  return c;
}

std::string tag(const std::string& base, int n) { return base + ".n=" + std::to_string(n); }

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

Polynomial squared_vandermonde(std::size_t nvars, const std::vector<int>& indices) {
  return alg::substitute_squares(specht::vandermonde(nvars, indices));
}

Polynomial variable_product(std::size_t nvars, const std::vector<int>& indices) {
  Polynomial f(nvars, 1);
  for (int i : indices) f = f * Polynomial::variable(nvars, i - 1);
  return f;
}

std::vector<int> join(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Rational factorial(int b) {
  Rational r(1);
  for (int i = 2; i <= b; ++i) r *= i;
  return r;
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

json Report::to_json() const {
  json checks_json = json::array();
  for (const auto& c : checks) {
    checks_json.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"suite", suite}, {"passed", passed()}, {"checks", checks_json}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"poset", "ideals", "varieties", "dihedral", "identities", "all"};
  return names;
}

// ---------------------------------------------------------------- posets

Check poset_axioms(int n) {
  const auto shapes = comb::dipartitions(n);
  const std::size_t m = shapes.size();
  std::vector<std::vector<char>> leq(m, std::vector<char>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) leq[i][j] = comb::didominance_leq(shapes[i], shapes[j]);
  }
  bool reflexive = true, antisymmetric = true, transitive = true;
  for (std::size_t i = 0; i < m; ++i) {
    reflexive = reflexive && leq[i][i];
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) antisymmetric = false;
      for (std::size_t k = 0; k < m && transitive; ++k) {
        if (leq[i][j] && leq[j][k] && !leq[i][k]) transitive = false;
      }
    }
  }
  std::vector<std::string> minima;
  for (std::size_t j = 0; j < m; ++j) {
    bool bottom = true;
    for (std::size_t i = 0; i < m; ++i) bottom = bottom && leq[j][i];
    if (bottom) minima.push_back(shapes[j].to_string());
  }
  const std::string expected_min = Dipartition::pair(Partition(), Partition(std::vector<int>(n, 1))).to_string();
  Check c = named(tag("poset.axioms", n));
  c.passed = reflexive && antisymmetric && transitive && minima.size() == 1 && minima.front() == expected_min;
  c.detail = {{"elements", m},          {"reflexive", reflexive}, {"antisymmetric", antisymmetric},
              {"transitive", transitive}, {"minimum", minima}};
  return c;
}

Check poset_counts(int n, std::size_t nodes, std::size_t edges) {
  const auto p = comb::poset("D", n);
  Check c = named(tag("poset.hasse_size", n));
  c.passed = p.nodes.size() == nodes && p.edges.size() == edges;
  c.detail = {{"nodes", p.nodes.size()}, {"edges", p.edges.size()}, {"expected_nodes", nodes},
              {"expected_edges", edges}};
  return c;
}

Check signed_cover_structure(int n) {
  Check c = named(tag("poset.signed_covers", n));
  c.passed = true;
  json rows = json::array();
  if (n % 2 != 0) {
    c.detail = {{"shapes", rows}};
    return c;
  }
  const auto shapes = comb::dipartitions(n);
  const auto edges = comb::hasse(shapes, comb::didominance_leq);
  for (std::size_t top = 0; top < shapes.size(); ++top) {
    if (!shapes[top].is_signed()) continue;
    std::set<std::string> reduction, predicted;
    for (const auto& [lo, hi] : edges) {
      if (hi == top) reduction.insert(shapes[lo].to_string());
    }
    for (const auto& d : comb::signed_covers(shapes[top].first())) predicted.insert(d.to_string());
    const bool fusion = comb::fusion_cover_check(shapes[top].first());
    const bool ok = reduction == predicted && fusion;
    c.passed = c.passed && ok;
    rows.push_back({{"shape", shapes[top].to_string()}, {"lower_covers", reduction}, {"fusion_check", fusion},
                    {"passed", ok}});
  }
  c.detail = {{"shapes", rows}};
  return c;
}

// ------------------------------------------------------------ equivalences

Check d_equivalence(int n, unsigned jobs) {
  const auto shapes = comb::dipartitions(n);
  std::vector<specht::GeneratorSet> sets(shapes.size());
  parallel_for(shapes.size(), jobs, [&](std::size_t i) { sets[i] = specht::generator_set(specht::Shape::of(shapes[i])); });
  const var::VarietyTable table(n);
  Check ideal = matrix_check(
      tag("ideals.d_equivalence", n), shapes,
      [&](std::size_t i, std::size_t j) { return comb::didominance_leq(shapes[i], shapes[j]); },
      [&](std::size_t i, std::size_t j) { return ideals::ideal_leq(sets[i], sets[j]); }, jobs);
  Check variety = matrix_check(
      "", shapes, [&](std::size_t i, std::size_t j) { return comb::didominance_leq(shapes[i], shapes[j]); },
      [&](std::size_t i, std::size_t j) { return table.leq(j, i); }, 1);
  ideal.passed = ideal.passed && variety.passed;
  ideal.detail["variety_mismatches"] = variety.detail["mismatches"];
  return ideal;
}

Check d_variety_equivalence(int n) {
  const var::VarietyTable table(n);
  const auto& shapes = table.shapes();
  return matrix_check(
      tag("varieties.d_equivalence", n), shapes,
      [&](std::size_t i, std::size_t j) { return comb::didominance_leq(shapes[i], shapes[j]); },
      [&](std::size_t i, std::size_t j) { return table.leq(j, i); }, 1);
}

Check s_equivalence(int n, unsigned jobs) {
  const auto shapes = comb::partitions(n);
  std::vector<specht::GeneratorSet> sets;
  for (const auto& p : shapes) sets.push_back(specht::generator_set(specht::Shape::of(p)));
  return matrix_check(
      tag("ideals.s_equivalence", n), shapes,
      [&](std::size_t i, std::size_t j) { return comb::dominance_leq(shapes[i], shapes[j]); },
      [&](std::size_t i, std::size_t j) { return ideals::ideal_leq(sets[i], sets[j]); }, jobs);
}

Check b_equivalence(int n, unsigned jobs) {
  const auto shapes = comb::bipartitions(n);
  std::vector<specht::GeneratorSet> sets(shapes.size());
  parallel_for(shapes.size(), jobs, [&](std::size_t i) { sets[i] = specht::generator_set(specht::Shape::of(shapes[i])); });
  return matrix_check(
      tag("ideals.b_equivalence", n), shapes,
      [&](std::size_t i, std::size_t j) { return comb::bidominance_leq(shapes[i], shapes[j]); },
      [&](std::size_t i, std::size_t j) { return ideals::ideal_leq(sets[i], sets[j]); }, jobs);
}

// ------------------------------------------------------------- identities

Check antisymmetrizer_identities(int b, int coset_max) {
  const std::size_t n = 2 * b;
  const std::vector<int> A{1};
  const std::vector<int> B1 = range(2, b + 1);
  const std::vector<int> B2 = range(b + 2, 2 * b);
  const auto AB1 = join(A, B1);
  const auto AB2 = join(A, B2);

  const Polynomial x1 = Polynomial::variable(n, 0);
  const Polynomial P = squared_vandermonde(n, AB1) * squared_vandermonde(n, B2) * variable_product(n, B2);
  const Polynomial common = squared_vandermonde(n, B1) * squared_vandermonde(n, AB2);
  const Polynomial Q1 = common * variable_product(n, B1);
  const Polynomial Q2 = common * variable_product(n, AB2);

  const Polynomial full2 = groups::antisymmetrize(Q2 * x1, AB1);
  const Polynomial full1 = groups::antisymmetrize(Q1 * x1, AB1);
  const bool coefficient = full2 == P * factorial(b);
  const bool vanishing = full1.is_zero();

  Check c = named("identities.antisymmetrizer.b=" + std::to_string(b));
  c.detail = {{"b", b}, {"C_equals_b_factorial", coefficient}, {"Q1_sum_vanishes", vanishing}};
  c.passed = coefficient && vanishing;
  if (b <= coset_max) {
    const Polynomial plus = groups::coset_antisymmetrize((Q1 + Q2) * x1, AB1, B1);
    const Polynomial minus = groups::coset_antisymmetrize((Q1 - Q2) * x1, AB1, B1);
    const bool plus_ok = plus == P;
    const bool minus_ok = minus == -P;
    c.detail["coset_sum_plus_is_P"] = plus_ok;
    c.detail["coset_sum_minus_is_minus_P"] = minus_ok;
    c.passed = c.passed && plus_ok && minus_ok;
  }
  return c;
}

Check divisibility_example() {
  const Polynomial f1 = alg::parse_polynomial("(x1^4 - x2^4)*(x3^2 - x4^2)*x3*x4", 4);
  const Polynomial f2 = alg::parse_polynomial("(x1^2 - x2^2)*(x3^4 - x4^4)*x1*x2", 4);
  const Polynomial g = alg::parse_polynomial("(x1^2 - x2^2)*(x3^2 - x4^2)*(x1*x2 + x3*x4)", 4);
  const Polynomial g_minus = alg::parse_polynomial("(x1^2 - x2^2)*(x3^2 - x4^2)*(x1*x2 - x3*x4)", 4);
  const auto ideal = specht::generator_set(specht::Shape::of(Dipartition::with_sign(Partition({1, 1}), +1)));

  const bool divides = alg::divides(g, f1 + f2).has_value();
  const bool member = ideals::contains(ideal, f1 + f2);
  const bool g_member = ideals::contains(ideal, g);
  const bool g_minus_member = ideals::contains(ideal, g_minus);
  Check c = named("ideals.divisibility_example");
  c.passed = !divides && member && g_member && !g_minus_member;
  c.detail = {{"g_divides_f1_plus_f2", divides},
              {"f1_plus_f2_in_ideal", member},
              {"g_in_ideal", g_member},
              {"sign_flipped_g_in_ideal", g_minus_member}};
  return c;
}

// -------------------------------------------------------------- varieties

Check counterexample_witness() {
  const Dipartition top = Dipartition::pair(Partition({3, 2}), Partition());
  const Dipartition a = Dipartition::pair(Partition({2}), Partition({2, 1}));
  const Dipartition b = Dipartition::pair(Partition({1, 1}), Partition({3}));
  const var::Point p{1, 1, 1, 1, 2};
  const bool in_top = var::in_variety_bruteforce(specht::Shape::of(top), p);
  const bool in_a = var::in_variety_bruteforce(specht::Shape::of(a), p);
  const bool in_b = var::in_variety_bruteforce(specht::Shape::of(b), p);
  const std::vector<Dipartition> shapes{top, a, b};
  bool incomparable = true;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j && comb::didominance_leq(shapes[i], shapes[j])) incomparable = false;
    }
  }
  Check c = named("varieties.counterexample_witness");
  c.passed = in_top && !in_a && !in_b && incomparable;
  c.detail = {{"point", "(1,1,1,1,2)"},
              {"in_" + top.to_string(), in_top},
              {"in_" + a.to_string(), in_a},
              {"in_" + b.to_string(), in_b},
              {"pairwise_incomparable", incomparable}};
  return c;
}

Check oracle_agreement(int n) {
  const var::VarietyTable table(n);
  json disagreements = json::array();
  for (std::size_t s = 0; s < table.shapes().size(); ++s) {
    for (std::size_t q = 0; q < table.points().size(); ++q) {
      const bool predicted = var::in_variety_predicted(table.shapes()[s], table.points()[q].datum);
      if (predicted != table.member(s, q)) {
        disagreements.push_back({{"shape", table.shapes()[s].to_string()},
                                 {"point", table.points()[q].datum.btype.to_string()},
                                 {"bruteforce", table.member(s, q)}});
      }
    }
  }
  Check c = named(tag("varieties.oracle_agreement", n));
  c.passed = disagreements.empty();
  c.detail = {{"shapes", table.shapes().size()},
              {"points", table.points().size()},
              {"disagreements", disagreements}};
  return c;
}

Check zero_coordinate(int n) {
  json witnesses = json::array();
  std::size_t pairs = 0;
  for (const auto& b : comb::bipartitions(n)) {
    if (b.first == b.second) continue;
    ++pairs;
    if (auto p = var::zero_coordinate_scan(b.first, b.second)) {
      std::vector<std::string> coords;
      for (const auto& x : *p) coords.push_back(x.get_str());
      witnesses.push_back({{"shape", b.to_string()}, {"point", coords}});
    }
  }
  Check c = named(tag("varieties.zero_coordinate", n));
  c.passed = witnesses.empty();
  c.detail = {{"ordered_pairs", pairs}, {"counterexamples", witnesses}};
  return c;
}

Check intersection_evidence(int d_max, unsigned jobs) {
  auto B = [](std::vector<int> a, std::vector<int> b) {
    return specht::generator_set(specht::Shape::of(Bipartition{Partition(std::move(a)), Partition(std::move(b))}));
  };
  const auto j1a = B({2}, {1, 1});
  const auto j1b = B({1, 1}, {2});
  const auto j2a = B({1}, {2, 1});
  const auto j2b = B({2, 1}, {1});
  const std::vector<const specht::GeneratorSet*> J1{&j1a, &j1b};
  const std::vector<const specht::GeneratorSet*> J2{&j2a, &j2b};
  const std::vector<const specht::GeneratorSet*> target{&j2a};

  std::vector<ideals::IntersectionSlice> d1, d2, d3;
  bool eq12 = false, eq1t = false;
  std::vector<std::function<void()>> tasks{
      [&] { d1 = ideals::intersection_dimensions(J1, d_max); },
      [&] { d2 = ideals::intersection_dimensions(J2, d_max); },
      [&] { d3 = ideals::intersection_dimensions(target, d_max); },
      [&] { eq12 = ideals::slice_equal(J1, J2, d_max); },
      [&] { eq1t = ideals::slice_equal(J1, target, d_max); },
  };
  parallel_for(tasks.size(), jobs, [&](std::size_t i) { tasks[i](); });

  json dims = json::array();
  for (std::size_t d = 0; d < d1.size(); ++d) {
    dims.push_back({{"degree", d1[d].degree}, {"J_(2)_(1,1)", d1[d].dimension},
                    {"J_(1)_(2,1)", d2[d].dimension}, {"I_B_(1)_(2,1)", d3[d].dimension}});
  }
  Check c = named("ideals.intersection_evidence");
  c.passed = eq12 && eq1t;
  c.detail = {{"max_degree", d_max},
              {"kind", "bounded-degree evidence, not a proof"},
              {"J_equal", eq12},
              {"J_equal_I_B", eq1t},
              {"dimensions", dims}};
  return c;
}

// --------------------------------------------------------------- dihedral

Check dihedral(int n, double tolerance, std::uint64_t seed) {
  const auto r = dihedral::dihedral_report(static_cast<unsigned>(n), tolerance, seed);
  json links = json::array();
  for (const auto& l : r.links) {
    links.push_back({{"larger", l.larger}, {"smaller", l.smaller}, {"certified", l.contained},
                     {"strict", l.strict}, {"reason", l.strict_reason}});
  }
  std::vector<std::string> radical, nonradical;
  for (const auto& l : r.labels) (l.radical ? radical : nonradical).push_back(l.name);
  Check c = named(tag("dihedral", n));
  c.passed = r.passed();
  c.detail = {{"n", n},
              {"chain", r.chain},
              {"links", links},
              {"incomparable_pair", r.has_pair ? json(r.incomparable_pair) : json(nullptr)},
              {"radical", radical},
              {"nonradical", nonradical},
              {"classification_matches", r.classification_matches},
              {"hyperplane_check", r.hyperplane_ok ? "pass" : "fail"},
              {"harmonics_rank", dihedral::harmonics_rank(n)},
              {"identities", r.identities_ok},
              {"invariance", r.invariance_ok}};
  return c;
}

// ------------------------------------------------------------------ suites

namespace {

using Task = std::function<Check()>;

void poset_tasks(const Options& o, std::vector<Task>& out) {
  for (int m = 1; m <= o.n; ++m) out.push_back([m] { return poset_axioms(m); });
  out.push_back([] { return poset_counts(4, 13, 19); });
  out.push_back([] { return poset_counts(5, 18, 25); });
  for (int m = 2; m <= o.n; m += 2) out.push_back([m] { return signed_cover_structure(m); });
}

void ideal_tasks(const Options& o, std::vector<Task>& out) {
  const unsigned inner = o.jobs;
  for (int m = 1; m <= std::min(o.n, 4); ++m) {
    out.push_back([m, inner] { return s_equivalence(m, inner); });
    out.push_back([m, inner] { return b_equivalence(m, inner); });
  }
  if (o.n <= 4 || o.extended) {
    for (int m = 1; m <= o.n; ++m) out.push_back([m, inner] { return d_equivalence(m, inner); });
  }
  out.push_back([] { return divisibility_example(); });
  out.push_back([inner] { return intersection_evidence(10, inner); });
}

void variety_tasks(const Options& o, std::vector<Task>& out) {
  for (int m = 1; m <= o.n; ++m) {
    out.push_back([m] { return d_variety_equivalence(m); });
    out.push_back([m] { return oracle_agreement(m); });
  }
  for (int m = 1; m <= std::min(o.n, 4); ++m) out.push_back([m] { return zero_coordinate(m); });
  out.push_back([] { return counterexample_witness(); });
}

void dihedral_tasks(const Options& o, std::vector<Task>& out) {
  const int lo = o.n_given ? o.n : 3;
  const int hi = o.n_given ? o.n : 12;
  for (int m = lo; m <= hi; ++m) out.push_back([m, o] { return dihedral(m, o.tolerance, o.seed); });
}

void identity_tasks(const Options& o, std::vector<Task>& out) {
  for (int b = 1; b <= o.b_max; ++b) out.push_back([b] { return antisymmetrizer_identities(b); });
}

}  // namespace

Report run(const std::string& suite, const Options& options) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  if (options.n < 1) throw std::invalid_argument("n must be at least 1");
  if (suite == "dihedral" && options.n_given && options.n < 3) {
    throw std::invalid_argument("the dihedral suite needs n >= 3");
  }
  std::vector<Task> tasks;
  const bool all = suite == "all";
  if (all || suite == "poset") poset_tasks(options, tasks);
  if (all || suite == "ideals") ideal_tasks(options, tasks);
  if (all || suite == "varieties") variety_tasks(options, tasks);
  if (suite == "dihedral") dihedral_tasks(options, tasks);
  if (all) {
    Options sweep = options;
    sweep.n_given = false;
    dihedral_tasks(sweep, tasks);
  }
  if (all || suite == "identities") identity_tasks(options, tasks);

  Report report{suite, std::vector<Check>(tasks.size())};
  parallel_for(tasks.size(), options.jobs, [&](std::size_t i) { report.checks[i] = tasks[i](); });
  return report;
}

}  // namespace dspecht::verify
