#include "sawlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sawlab/bounds.hpp"
#include "sawlab/error.hpp"
#include "sawlab/io.hpp"
#include "sawlab/locality.hpp"
#include "sawlab/quotient.hpp"
#include "sawlab/registry.hpp"
#include "sawlab/saw.hpp"
#include "sawlab/synthesis.hpp"

namespace sawlab::cli {

namespace {

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::vector<std::vector<std::int64_t>> parse_shifts(const std::string& s) {
  std::vector<std::vector<std::int64_t>> out;
  std::stringstream rows(s);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<std::int64_t> v;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        v.push_back(std::stoll(cell));
      } catch (const std::exception&) {
        throw UsageError("bad shift entry '" + cell + "'");
      }
    }
    out.push_back(std::move(v));
  }
  if (out.empty()) throw UsageError("no shifts given");
  return out;
}

struct Options {
  std::string family, family_b, height = "default", height_b = "default";
  std::string kind = "all", out, table, quotient, shifts, walk, config;
  int n = 0, cap = 8, radius = 6, eta_k = 0;
  double f_constant = 0;
  unsigned jobs = 1;
  std::size_t trials = 500;
  std::uint64_t seed = 1;
  bool per_span = false, human = false, csv = false, check_r = true;
};

EngineOptions engine(const Options& o) {
  EngineOptions e;
  e.jobs = std::max(1u, o.jobs);
  e.limits = default_limits();
  return e;
}

int cmd_count(const Options& o, std::ostream& out) {
  auto family = parse_family(o.family);
  auto hf = parse_height(o.height, family);
  if (o.kind == "all") {
    const CountTable t = build_table(*family, *hf, o.n, engine(o));
    if (o.human) {
      emit(render_human(t), o.out, out);
    } else if (o.csv) {
      emit(render_csv(t), o.out, out);
    } else {
      emit(dump(to_json(t)), o.out, out);
    }
    return t.exhausted ? ExitCode::resource : ExitCode::ok;
  }
  const WalkKind kind = walk_kind_from_string(o.kind);
  const bool prune = kind != WalkKind::saw;
  const WalkCounts c = count_walks(*family, hf.get(), family->origin(), o.n, prune, engine(o));
  Json j;
  j["family"] = family->name();
  j["height"] = hf->name();
  j["kind"] = o.kind;
  j["start"] = label_to_json(c.start);
  j["n_max"] = c.n_max;
  j["complete_through"] = c.complete_through;
  j["exhausted"] = c.exhausted;
  auto big = [](const std::vector<mpz_class>& v) {
    auto a = Json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
  };
  j["counts"] = big(kind == WalkKind::saw ? c.saw : kind == WalkKind::halfspace ? c.halfspace : c.bridge);
  if (kind == WalkKind::bridge && o.per_span) {
    auto rows = Json::array();
    for (const auto& row : c.bridge_by_span) rows.push_back(big(row));
    j["by_span"] = rows;
  }
  emit(dump(j), o.out, out);
  return c.exhausted ? ExitCode::resource : ExitCode::ok;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const CountTable t = table_from_json(read_json(o.table));
  Json j = to_json(bracket(t));
  j["fekete"] = check_fekete(t);
  if (o.eta_k > 0) j["eta_hat"] = {{"k", o.eta_k}, {"value", eta(t, o.eta_k)}};
  if (o.f_constant > 0) {
    const double x = t.complete_through;
    j["f"] = {{"B", o.f_constant}, {"x", x}, {"value", eval_f(o.f_constant, x)}};
  }
  emit(dump(j), o.out, out);
  return ExitCode::ok;
}

int cmd_locality(const Options& o, std::ostream& out) {
  auto fa = parse_family(o.family);
  auto fb = parse_family(o.family_b);
  auto ha = parse_height(o.height, fa);
  auto hb = parse_height(o.height_b, fb);
  const LocalityReport r = locality_report(*fa, *ha, *fb, *hb, o.n, o.cap, engine(o));
  emit(dump(to_json(r)), o.out, out);
  return r.tables_consistent ? ExitCode::ok : ExitCode::invariant;
}

QuotientGraph load_quotient(const Options& o) {
  if (!o.quotient.empty()) return quotient_from_json(read_json(o.quotient));
  if (o.family.empty() || o.shifts.empty()) throw UsageError("need --quotient, or --family and --shifts");
  SubgroupDescriptor sub;
  sub.family = o.family;
  sub.shifts = parse_shifts(o.shifts);
  return build_quotient(parse_family(o.family), sub);
}

int cmd_quotient(const Options& o, std::ostream& out) {
  const QuotientGraph q = load_quotient(o);
  emit(dump(to_json(q)), o.out, out);
  return ExitCode::ok;
}

int cmd_synth(const Options& o, std::ostream& out) {
  const QuotientGraph q = load_quotient(o);
  const auto basis = cycle_basis(q, unit_square_generators(q));
  const EdgeIncrement inc = solve_increments(basis, q);
  const IncrementCheck check = check_increments(inc, basis, q);
  const auto& family = *q.family();
  auto lifted = lift_height(inc, family, q);
  const CocycleResult cocycle = verify_cocycle(inc, family, q, o.trials, o.seed);
  ValidateOptions vo;
  vo.check_r = o.check_r;
  const HeightValidationReport report = validate_height(family, *lifted, o.radius, vo);

  Json j = to_json(inc, q);
  j["basis"] = {{"delta", basis.delta()},
                {"rho", basis.rho()},
                {"delta_prime", basis.delta_prime},
                {"rho_prime", basis.rho_prime},
                {"distinguished_shift", basis.distinguished_shift}};
  j["equations_hold"] = check.equations;
  j["signs_hold"] = check.signs;
  j["cocycle"] = {{"trials", o.trials}, {"seed", o.seed}, {"ok", cocycle.ok}};
  j["lifted"] = {{"name", lifted->name()},
                 {"scale", lifted->scale()},
                 {"declared_d", lifted->declared_d()},
                 {"declared_r", lifted->declared_r()},
                 {"validation", to_json(report)}};
  emit(dump(j), o.out, out);
  return check.ok() && cocycle.ok && report.ok() ? ExitCode::ok : ExitCode::invariant;
}

int cmd_validate(const Options& o, std::ostream& out) {
  auto family = parse_family(o.family);
  auto hf = parse_height(o.height, family);
  ValidateOptions vo;
  vo.check_r = o.check_r;
  const HeightValidationReport r = validate_height(*family, *hf, o.radius, vo);
  Json j = to_json(r);
  j["family"] = family->name();
  j["height"] = hf->name();
  emit(dump(j), o.out, out);
  return r.ok() ? ExitCode::ok : ExitCode::invariant;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  auto family = parse_family(o.family);
  auto hf = parse_height(o.height, family);
  Json walk_json;
  try {
    walk_json = Json::parse(o.walk);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("--walk is not JSON: ") + e.what());
  }
  Walk w;
  for (const auto& v : walk_json) w.push_back(label_from_json(v));
  for (const auto& v : w) family->validate(v);
  if (!is_saw(*family, w)) throw UsageError("--walk is not a self-avoiding walk of " + family->name());
  Json j = to_json(decompose(*hf, w));
  j["span"] = span(*hf, w);
  emit(dump(j), o.out, out);
  return ExitCode::ok;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Json j = read_json(o.table);
  const CountTable t = table_from_json(j);
  auto problems = verify_table(t);
  // recompute the bracket to confirm the file round-trips
  if (t.complete_through >= 1) {
    const auto r = bracket(t);
    if (r.lower > r.upper) problems.push_back("certified lower bound exceeds upper bound");
  }
  if (dump(to_json(t)) != dump(j)) problems.push_back("table does not round-trip through the reader");
  Json report{{"file", o.table}, {"ok", problems.empty()}, {"problems", problems}};
  emit(dump(report), o.out, out);
  for (const auto& p : problems) err << "verify: " << p << "\n";
  return problems.empty() ? ExitCode::ok : ExitCode::invariant;
}

std::vector<std::string> config_to_args(const Json& c) {
  std::vector<std::string> args;
  try {
    args.push_back(c.at("command").get<std::string>());
    const std::pair<const char*, const char*> keys[] = {
        {"family", "--family"}, {"height", "--height"}, {"kind", "--kind"},   {"b", "--b"},
        {"height_b", "--height-b"}, {"table", "--table"}, {"quotient", "--quotient"},
        {"shifts", "--shifts"}, {"walk", "--walk"}, {"out", "--out"}};
    for (auto [key, flag] : keys) {
      if (c.contains(key)) args.insert(args.end(), {flag, c.at(key).get<std::string>()});
    }
    const std::pair<const char*, const char*> numbers[] = {
        {"n_max", "--n"}, {"cap", "--cap"}, {"jobs", "--jobs"}, {"radius", "--radius"},
        {"trials", "--trials"}, {"seed", "--seed"}, {"eta", "--eta"}};
    for (auto [key, flag] : numbers) {
      if (c.contains(key)) args.insert(args.end(), {flag, std::to_string(c.at(key).get<long long>())});
    }
    if (c.value("per_span", false)) args.push_back("--per-span");
    if (c.value("human", false)) args.push_back("--human");
    if (c.value("csv", false)) args.push_back("--csv");
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed config: ") + e.what());
  }
  return args;
}

int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err, int depth) {
  CLI::App app{"Exact self-avoiding walk laboratory"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "Count SAWs, half-space walks and bridges");
  count->add_option("--family", o.family)->required();
  count->add_option("--height", o.height);
  count->add_option("--kind", o.kind)->check(CLI::IsMember({"saw", "halfspace", "bridge", "all"}));
  count->add_option("--n", o.n)->required()->check(CLI::Range(0, 64));
  count->add_flag("--per-span", o.per_span);
  count->add_option("--jobs", o.jobs);
  count->add_option("--out", o.out);
  count->add_flag("--human", o.human);
  count->add_flag("--csv", o.csv);

  auto* bounds = app.add_subcommand("bounds", "Certified bracket from a count table");
  bounds->add_option("--table", o.table)->required();
  bounds->add_option("--eta", o.eta_k);
  bounds->add_option("--f-constant", o.f_constant, "evaluate f(x) at x = n_max for this B");
  bounds->add_option("--out", o.out);

  auto* locality = app.add_subcommand("locality", "Similarity and bracket comparison of two families");
  locality->add_option("--a", o.family)->required();
  locality->add_option("--b", o.family_b)->required();
  locality->add_option("--height-a", o.height);
  locality->add_option("--height-b", o.height_b);
  locality->add_option("--n", o.n)->required()->check(CLI::Range(1, 64));
  locality->add_option("--cap", o.cap)->check(CLI::Range(0, 64));
  locality->add_option("--jobs", o.jobs);
  locality->add_option("--out", o.out);

  auto* synth = app.add_subcommand("synth-height", "Build a height function from a lattice quotient");
  synth->add_option("--quotient", o.quotient);
  synth->add_option("--family", o.family);
  synth->add_option("--shifts", o.shifts);
  synth->add_option("--radius", o.radius)->check(CLI::Range(1, 64));
  synth->add_option("--trials", o.trials);
  synth->add_option("--seed", o.seed);
  synth->add_flag("!--skip-r", o.check_r);
  synth->add_option("--out", o.out);

  auto* validate = app.add_subcommand("validate-height", "Check the height-function axioms on a ball");
  validate->add_option("--family", o.family)->required();
  validate->add_option("--height", o.height);
  validate->add_option("--radius", o.radius)->check(CLI::Range(1, 64));
  validate->add_flag("!--skip-r", o.check_r);
  validate->add_option("--out", o.out);

  auto* quotient = app.add_subcommand("quotient", "Quotient of a lattice by translations");
  quotient->add_option("--family", o.family);
  quotient->add_option("--shifts", o.shifts);
  quotient->add_option("--quotient", o.quotient);
  quotient->add_option("--out", o.out);

  auto* dec = app.add_subcommand("decompose", "Bridge decomposition of a half-space walk");
  dec->add_option("--family", o.family)->required();
  dec->add_option("--height", o.height);
  dec->add_option("--walk", o.walk)->required();
  dec->add_option("--out", o.out);

  auto* verify = app.add_subcommand("verify", "Re-check the invariants of a saved count table");
  verify->add_option("--table", o.table)->required();
  verify->add_option("--out", o.out);

  auto* runcfg = app.add_subcommand("run", "Run the command described by a JSON config");
  runcfg->add_option("--config", o.config)->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return ExitCode::usage;
  }

  if (*runcfg) {
    if (depth > 0) throw UsageError("configs cannot nest");
    return dispatch(config_to_args(read_json(o.config)), out, err, depth + 1);
  }
  if (*count) return cmd_count(o, out);
  if (*bounds) return cmd_bounds(o, out);
  if (*locality) return cmd_locality(o, out);
  if (*synth) return cmd_synth(o, out);
  if (*validate) return cmd_validate(o, out);
  if (*quotient) return cmd_quotient(o, out);
  if (*dec) return cmd_decompose(o, out);
  if (*verify) return cmd_verify(o, out, err);
  return ExitCode::usage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err, 0);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return ExitCode::resource;
  } catch (const InvariantError& e) {
    err << "invariant violation: " << e.what() << "\n";
    return ExitCode::invariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::failure;
  }
}

}  // namespace sawlab::cli
