// dspecht: posets, Specht polynomials, ideal membership and verification suites.
//
// Exit status: 0 success, 1 a check failed, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <stdexcept>
#include <string>

#include "dspecht/combinat.hpp"
#include "dspecht/groups.hpp"
#include "dspecht/ideals.hpp"
#include "dspecht/poly_io.hpp"
#include "dspecht/specht.hpp"
#include "dspecht/varieties.hpp"
#include "dspecht/verify.hpp"

using json = nlohmann::ordered_json;
using namespace dspecht;
using alg::Polynomial;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int max_n(groups::GroupKind kind) {
  switch (kind) {
    case groups::GroupKind::S: return 10;
    case groups::GroupKind::B: return 8;
    case groups::GroupKind::D: return 8;
  }
  return 0;
}

void print(const json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

std::vector<std::vector<int>> rows_of(const json& j, const char* what) {
  if (!j.is_array()) throw UsageError(std::string(what) + " must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw UsageError(std::string(what) + " rows must be arrays");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw UsageError(std::string(what) + " entries must be integers");
      r.push_back(x.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

specht::Tableau tableau_of(const json& j, const char* what) {
  auto rows = rows_of(j, what);
  if (rows.empty()) return specht::Tableau();
  return specht::Tableau(std::move(rows));
}

// --------------------------------------------------------------- commands

struct PosetArgs {
  std::string group;
  int n = 0;
  std::string format = "json";
  bool pretty = false;
};

int cmd_poset(const PosetArgs& a) {
  const auto kind = groups::parse_group_kind(a.group);
  if (a.n < 1 || a.n > max_n(kind)) {
    throw UsageError("n out of range for group " + a.group + ": 1.." + std::to_string(max_n(kind)));
  }
  const auto p = comb::poset(groups::to_string(kind), a.n);
  if (a.format == "dot") {
    std::cout << comb::to_dot(p, groups::to_string(kind) + std::to_string(a.n));
    return kOk;
  }
  json edges = json::array();
  for (const auto& [i, j] : p.edges) edges.push_back({i, j});
  print({{"group", groups::to_string(kind)}, {"n", a.n}, {"nodes", p.nodes}, {"edges", edges}}, a.pretty);
  return kOk;
}

struct ShapeArgs {
  std::string group;
  std::string shape;
  int n = 0;  // 0 = inferred
};

// A single polynomial is cheap; generator sets grow like n!.
constexpr int kPolyMaxN = 16;

specht::Shape shape_of(const ShapeArgs& a, int bound) {
  const auto kind = groups::parse_group_kind(a.group);
  auto shape = specht::Shape::parse(kind, a.shape);
  if (shape.n() < 1) throw UsageError("shape must have at least one box");
  if (a.n != 0 && a.n != shape.n()) {
    throw UsageError("shape " + a.shape + " has " + std::to_string(shape.n()) + " boxes but --n is " +
                     std::to_string(a.n));
  }
  if (shape.n() > bound) throw UsageError("shape too large for group " + a.group);
  return shape;
}

struct PolyArgs {
  ShapeArgs shape;
  std::string tableau;
};

int cmd_poly(const PolyArgs& a) {
  const auto shape = shape_of(a.shape, kPolyMaxN);
  if (a.tableau.empty()) {
    Polynomial f;
    switch (shape.kind) {
      case groups::GroupKind::S: f = specht::specht_S(specht::base_tableau(shape.part), shape.n()); break;
      case groups::GroupKind::B: f = specht::specht_B(specht::base_bitableau(shape.bip)); break;
      case groups::GroupKind::D: {
        const auto bt = specht::base_bitableau(shape.dip->bipartition());
        f = shape.dip->is_signed() ? specht::specht_D(bt, shape.dip->sign()) : specht::specht_B(bt);
        break;
      }
    }
    std::cout << alg::to_string(f) << "\n";
    return kOk;
  }
  json j;
  try {
    j = json::parse(a.tableau);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("tableau is not valid JSON: ") + e.what());
  }
  if (shape.kind == groups::GroupKind::S) {
    const json& rows = j.is_object() ? j.at("left") : j;
    const specht::Tableau t = tableau_of(rows, "tableau");
    specht::validate(t);
    if (t.shape() != shape.part) throw UsageError("tableau shape differs from --shape");
    std::cout << alg::to_string(specht::specht_S(t, shape.n())) << "\n";
    return kOk;
  }
  if (!j.is_object() || !j.contains("left") || !j.contains("right")) {
    throw UsageError("bitableau JSON needs \"left\" and \"right\"");
  }
  const specht::Bitableau bt{tableau_of(j["left"], "left"), tableau_of(j["right"], "right")};
  bt.validate();
  if (shape.kind == groups::GroupKind::B) {
    if (bt.shape() != shape.bip) throw UsageError("bitableau shape differs from --shape");
    std::cout << alg::to_string(specht::specht_B(bt)) << "\n";
    return kOk;
  }
  const auto& d = *shape.dip;
  if (d.is_signed()) {
    if (bt.shape() != d.bipartition()) throw UsageError("bitableau shape differs from --shape");
    std::cout << alg::to_string(specht::specht_D(bt, d.sign())) << "\n";
    return kOk;
  }
  if (bt.shape() != d.bipartition() && bt.shape() != d.bipartition().swapped()) {
    throw UsageError("bitableau shape differs from --shape");
  }
  std::cout << alg::to_string(specht::specht_B(bt)) << "\n";
  return kOk;
}

struct MemberArgs {
  ShapeArgs shape;
  std::string poly;
  bool pretty = false;
};

int cmd_member(const MemberArgs& a) {
  const auto shape = shape_of(a.shape, max_n(groups::parse_group_kind(a.shape.group)));
  const auto f = alg::parse_polynomial(a.poly, static_cast<std::size_t>(shape.n()));
  const auto ideal = specht::generator_set(shape);
  const auto cert = ideals::certify(ideal, f);
  json out{{"group", groups::to_string(shape.kind)}, {"shape", shape.to_string()}, {"member", cert.has_value()}};
  if (cert) {
    json combination = json::array();
    for (const auto& t : cert->terms) {
      combination.push_back({{"generator", t.generator},
                             {"monomial", alg::to_string(t.multiplier)},
                             {"coeff", t.coefficient.get_str()}});
    }
    out["combination"] = combination;
    if (cert->evaluate(ideal) != f) {
      out["error"] = "certificate does not reproduce the polynomial";
      print(out, a.pretty);
      return kFailed;
    }
  }
  print(out, a.pretty);
  return kOk;
}

int cmd_reps(int n, bool pretty) {
  if (n < 1 || n > max_n(groups::GroupKind::D)) throw UsageError("n out of range: 1..8");
  json rows = json::array();
  for (const auto& r : var::representatives(n)) {
    std::vector<std::string> coords;
    for (const auto& x : r.point) coords.push_back(x.get_str());
    rows.push_back({{"btype", r.datum.btype.to_string()},
                    {"sign", r.datum.dsign ? json(*r.datum.dsign) : json(nullptr)},
                    {"point", coords}});
  }
  print(rows, pretty);
  return kOk;
}

void render_human(const verify::Report& r) {
  for (const auto& c : r.checks) std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "\n";
  std::cout << (r.passed() ? "suite " + r.suite + ": pass" : "suite " + r.suite + ": FAIL") << "\n";
}

int cmd_verify(const std::string& suite, const verify::Options& o, bool pretty) {
  const auto& names = verify::suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite: " + suite);
  if (o.n < 1 || o.n > 8) throw UsageError("n out of range: 1..8");
  if (o.b_max < 1 || o.b_max > 5) throw UsageError("b-max out of range: 1..5");
  if (suite == "dihedral" && o.n_given && (o.n < 3 || o.n > 12)) throw UsageError("dihedral n out of range: 3..12");
  const auto report = verify::run(suite, o);
  if (pretty) {
    render_human(report);
  } else {
    print(report.to_json(), false);
  }
  return report.passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Specht ideals of S_n, B_n, D_n and I_2(n)"};
  app.require_subcommand(1);

  PosetArgs poset;
  auto* poset_cmd = app.add_subcommand("poset", "Hasse diagram of the partition poset");
  poset_cmd->add_option("--group", poset.group, "S, B or D")->required();
  poset_cmd->add_option("--n", poset.n, "size")->required();
  poset_cmd->add_option("--format", poset.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  poset_cmd->add_flag("--pretty", poset.pretty, "indent JSON");

  PolyArgs poly;
  auto* poly_cmd = app.add_subcommand("poly", "print a Specht polynomial");
  poly_cmd->add_option("--group", poly.shape.group, "S, B or D")->required();
  poly_cmd->add_option("--shape", poly.shape.shape, "e.g. (2,1), (2)|(1), (1)|-")->required();
  poly_cmd->add_option("--n", poly.shape.n, "expected size of the shape");
  poly_cmd->add_option("--tableau", poly.tableau, R"(JSON filling, {"left": [[..]], "right": [[..]]})");

  MemberArgs member;
  auto* member_cmd = app.add_subcommand("member", "ideal membership with a certificate");
  member_cmd->add_option("--group", member.shape.group, "S, B or D")->required();
  member_cmd->add_option("--shape", member.shape.shape, "shape of the Specht ideal")->required();
  member_cmd->add_option("--poly", member.poly, "polynomial in x1..xn")->required();
  member_cmd->add_option("--n", member.shape.n, "expected size of the shape");
  member_cmd->add_flag("--pretty", member.pretty, "indent JSON");

  int reps_n = 0;
  bool reps_pretty = false;
  auto* reps_cmd = app.add_subcommand("reps", "representative points of the B-orbit sets");
  reps_cmd->add_option("--n", reps_n, "size")->required();
  reps_cmd->add_flag("--pretty", reps_pretty, "indent JSON");

  std::string suite = "all";
  verify::Options options;
  bool verify_pretty = false;
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("--suite", suite, "poset, ideals, varieties, dihedral, identities or all");
  auto* n_opt = verify_cmd->add_option("--n", options.n, "size (default 4)");
  verify_cmd->add_option("--b-max", options.b_max, "largest b for the antisymmetrizer identities");
  verify_cmd->add_flag("--extended", options.extended, "include the D ideal matrix for n >= 5");
  verify_cmd->add_option("--jobs", options.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  verify_cmd->add_option("--tolerance", options.tolerance, "float tolerance for dihedral checks")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", options.seed, "seed for randomized checks");
  verify_cmd->add_flag("--pretty", verify_pretty, "human-readable summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (poset_cmd->parsed()) return cmd_poset(poset);
    if (poly_cmd->parsed()) return cmd_poly(poly);
    if (member_cmd->parsed()) return cmd_member(member);
    if (reps_cmd->parsed()) return cmd_reps(reps_n, reps_pretty);
    options.n_given = n_opt->count() > 0;
    return cmd_verify(suite, options, verify_pretty);
  } catch (const alg::ParseError& e) {
    json err{{"error", e.what()}, {"position", e.position()}};
    std::cerr << err.dump() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return kFailed;
  }
}
