// Command-line entry point: construct, quotient, solve, lift, verify, report.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "listcover/choosability.hpp"
#include "listcover/constructions.hpp"
#include "listcover/formulas.hpp"
#include "listcover/io.hpp"
#include "listcover/pipeline.hpp"
#include "listcover/quotient.hpp"
#include "listcover/solver.hpp"

using namespace listcover;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

struct Common {
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 0;  // accepted for scripting; results never depend on it
};

struct ConstructArgs {
  std::string theorem;
  int m = 0;
  std::vector<int> params;
  int k = 2;
  int l = 0;
  std::string base;
  int copies = 1;
  std::string cover_out;
};

struct SolveArgs {
  std::string family;
  std::string targets;
  std::optional<int> k;
  std::string method = "exact";
  long long timeout_ms = 0;
  bool serial = false;
  std::string cover_out;
};

struct OptimizeArgs {
  std::string mode = "reduced";
  double grid = 0.005;
  double tol = 1e-8;
  std::vector<std::string> fix;
};

struct EvalArgs {
  std::string formula;
  std::vector<std::string> args;
  int m = 0;
  int k = 2;
  int l = 0;
};

struct PipelineArgs {
  ConstructArgs construct;
  std::string family;
  std::string method = "exact";
  long long timeout_ms = 0;
  std::string cover;
  std::string cover_out;
};

void emit(const Common& common, const json& j) {
  if (common.out.empty()) {
    std::cout << io::dump(j);
  } else {
    io::write_json_file(common.out, j);
  }
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos)
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(BigInt(text));
  const std::string frac = text.substr(dot + 1);
  const std::string whole = text.substr(0, dot);
  const bool negative = !whole.empty() && whole[0] == '-';
  const BigInt scale = pow_big(10, static_cast<std::int64_t>(frac.size()));
  BigInt num = BigInt(whole.empty() || whole == "-" ? "0" : whole) * scale;
  const BigInt tail = frac.empty() ? BigInt(0) : BigInt(frac);
  num += negative ? -tail : tail;
  return Rational(num, scale);
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  try {
    for (const auto& s : items) out.push_back(parse_rational(s));
  } catch (const std::runtime_error&) {
    throw InputError("cannot parse a rational number from the arguments");
  }
  return out;
}

ListFamily load_family(const std::string& path) { return io::family_from_json(io::read_json_file(path)).family; }

Theorem2Params theorem2_params(const ConstructArgs& a) {
  if (a.params.size() != 5) throw InputError("--params needs five values k1,k2,k3,k4,k5");
  Theorem2Params p{a.m, {a.params[0], a.params[1], a.params[2], a.params[3], a.params[4]}};
  p.validate();
  return p;
}

// The family named by the construction flags, plus the cover the
// construction comes with when it has one.
std::pair<ListFamily, std::optional<Cover>> build(const ConstructArgs& a) {
  const std::string& t = a.theorem;
  if (t == "2" || t == "theorem2") return {theorem2_family(theorem2_params(a)), std::nullopt};
  if (t == "3" || t == "theorem3") {
    const Theorem3Params p{a.m, a.k, a.l};
    return {theorem3_family(p), theorem3_cover(p)};
  }
  if (t == "1" || t == "theorem1") {
    if (a.base.empty()) throw InputError("theorem 1 needs --base family.json");
    const ListFamily base = load_family(a.base);
    return {theorem1_lift(base, a.copies), theorem1_constructed_cover(base, a.copies)};
  }
  if (t == "furedi") return {furedi_family(), std::nullopt};
  if (t == "l6") return {l6_family(), std::nullopt};
  if (t == "n4") return {n4_witness_family(), std::nullopt};
  throw InputError("unknown construction '" + t + "'");
}

int run_construct(const Common& common, const ConstructArgs& a) {
  if (a.theorem == "trivial") {
    const auto [m_side, n_side] = trivial_family(a.m);
    json j = io::to_json(m_side);
    j["n_lists"] = io::to_json(n_side)["edges"];
    emit(common, j);
    return kExitOk;
  }
  const auto [family, cover] = build(a);
  if (!a.cover_out.empty()) {
    if (!cover) throw InputError("this construction has no built-in cover; use solve-cover or pipeline");
    io::write_json_file(a.cover_out, json{{"lists", io::to_json(*cover)["edges"]}});
  }
  emit(common, io::to_json(family));
  return kExitOk;
}

int run_quotient(const Common& common, const std::string& path) {
  emit(common, io::to_json(quotient_family(load_family(path))));
  return kExitOk;
}

Weights weights_from_json(const json& j, Color vertex_count) {
  Weights w(vertex_count, 1);
  if (!j.contains("weights")) return w;
  for (const auto& [key, value] : j["weights"].items()) {
    const auto c = static_cast<Color>(std::stoul(key));
    if (c >= vertex_count) throw InputError("weight given for an unknown vertex " + key);
    w[c] = value.get<std::uint64_t>();
    if (w[c] == 0) throw InputError("weights must be positive");
  }
  return w;
}

int run_solve(const Common& common, const SolveArgs& a) {
  const SolveMethod method = parse_solve_method(a.method);
  const ExactOptions exact{std::chrono::milliseconds(a.timeout_ms), !a.serial};
  SolveReport r;
  Hypergraph targets;
  if (!a.family.empty() == !a.targets.empty()) throw InputError("give exactly one of --family or --targets");
  if (!a.family.empty()) {
    const WeightedFamily wf = quotient_family(load_family(a.family));
    const int k = a.k.value_or(static_cast<int>(wf.family.m()) - 2);
    targets = enumerate_minimal_transversals(wf.family);
    const Weights w = wf.weights();
    switch (method) {
      case SolveMethod::kExact:
        r = a.serial ? serial::solve_exact_min_weighted_cover(targets, w, k)
                     : solve_exact_min_weighted_cover(targets, w, k, exact);
        break;
      case SolveMethod::kOracle:
        r = brute_force_min_cover(targets, w, k);
        break;
      case SolveMethod::kGreedy: {
        GreedyCover g = greedy_track_peel_cover(wf);
        r.method = SolveMethod::kGreedy;
        r.value = g.value;
        r.cover = std::move(g.cover);
        break;
      }
    }
  } else {
    const json j = io::read_json_file(a.targets);
    targets = io::hypergraph_from_json(j);
    if (!a.k) throw InputError("--targets needs --k");
    const Weights w = weights_from_json(j, targets.vertex_count());
    switch (method) {
      case SolveMethod::kExact:
        r = a.serial ? serial::solve_exact_min_weighted_cover(targets, w, *a.k)
                     : solve_exact_min_weighted_cover(targets, w, *a.k, exact);
        break;
      case SolveMethod::kOracle:
        r = brute_force_min_cover(targets, w, *a.k);
        break;
      case SolveMethod::kGreedy:
        throw InputError("the greedy method needs --family");
    }
  }
  if (r.cover && !a.cover_out.empty()) io::write_json_file(a.cover_out, io::to_json(*r.cover));
  emit(common, io::to_json(r));
  return r.cover && !verify_cover(*r.cover, targets) ? kExitVerification : kExitOk;
}

int run_verify_witness(const Common& common, const std::string& m_path, const std::string& n_path) {
  const io::LabeledAssignment la = io::assignment_from_json(io::read_json_file(m_path), io::read_json_file(n_path));
  const WitnessReport r = verify_witness(la.assignment);
  emit(common, io::to_json(r));
  return r.method_agreement ? kExitOk : kExitVerification;
}

int run_optimize(const Common& common, const OptimizeArgs& a) {
  OptimizeOptions opt;
  opt.mode = parse_optimize_mode(a.mode);
  opt.grid_step = a.grid;
  opt.tol = a.tol;
  if (!(opt.grid_step > 0) || !(opt.tol > 0)) throw InputError("--grid and --tol must be positive");
  for (const std::string& f : a.fix) {
    const auto eq = f.find('=');
    if (eq == std::string::npos) throw InputError("--fix expects i=value with i in 1..5");
    const int i = std::stoi(f.substr(0, eq));
    if (i < 1 || i > 5) throw InputError("--fix index must be in 1..5");
    opt.fixed[static_cast<std::size_t>(i - 1)] = std::stod(f.substr(eq + 1));
  }
  emit(common, io::to_json(optimize_theorem2(opt), opt.mode));
  return kExitOk;
}

json rational_json(const std::string& formula, const Rational& v) {
  return json{{"formula", formula}, {"value", io::rational_to_string(v)}, {"decimal", v.convert_to<double>()}};
}

int run_eval(const Common& common, const EvalArgs& a) {
  if (a.formula == "t3") {
    int m = a.m, k = a.k, l = a.l;
    if (!a.args.empty()) {
      if (a.args.size() != 3) throw InputError("t3 takes m,k,l");
      m = std::stoi(a.args[0]);
      k = std::stoi(a.args[1]);
      l = std::stoi(a.args[2]);
    }
    const Theorem3Terms t = theorem3_terms(m, k, l);
    emit(common, json{{"formula", "t3"},
                      {"m", m},
                      {"k", k},
                      {"l", l},
                      {"value", theorem3_value(m, k, l).str()},
                      {"parts", {t.shared_triple.str(), t.shared_pair.str(), t.private_pair.str()}},
                      {"normalized", theorem3_normalized(m, k, l)}});
    return kExitOk;
  }
  const std::vector<Rational> v = parse_rationals(a.args);
  if (a.formula == "t2") {
    if (v.size() != 5) throw InputError("t2 takes a1,a2,a3,a4,a5");
    emit(common, rational_json("t2", theorem2_value(AlphaVector{{v[0], v[1], v[2], v[3], v[4]}})));
    return kExitOk;
  }
  if (a.formula == "t2r") {
    if (v.size() != 2) throw InputError("t2r takes a4,a5");
    emit(common, rational_json("t2r", theorem2_reduced_value(v[0], v[1])));
    return kExitOk;
  }
  throw InputError("unknown formula '" + a.formula + "' (expected t2|t2r|t3)");
}

// Cover edges as lists in the input file's own color labels.
json labeled_lists(const Cover& cover, const std::vector<std::string>& labels) {
  json out = json::array();
  for (const Edge& e : cover.edges()) {
    json list = json::array();
    e.for_each([&](Color c) {
      const std::string& label = labels.at(c);
      const bool numeric = !label.empty() && label.find_first_not_of("-0123456789") == std::string::npos;
      if (numeric) {
        list.push_back(std::stoll(label));
      } else {
        list.push_back(label);
      }
    });
    out.push_back(list);
  }
  return json{{"lists", out}};
}

int run_pipeline(const Common& common, const PipelineArgs& a) {
  if (a.family.empty() == a.construct.theorem.empty())
    throw InputError("give exactly one of --family or --construct");
  ListFamily family;
  std::optional<Cover> builtin;
  json input;
  std::vector<std::string> labels;
  if (!a.family.empty()) {
    input = io::read_json_file(a.family);
    if (a.cover.empty()) {
      io::LabeledFamily lf = io::family_from_json(input);
      family = std::move(lf.family);
      labels = std::move(lf.labels);
    } else {
      // Read family and cover through one label table so their ids agree.
      io::LabeledAssignment la = io::assignment_from_json(input, io::read_json_file(a.cover));
      family = ListFamily(la.assignment.m_lists.lists());
      const int k = static_cast<int>(family.m()) - 2;
      builtin = Cover(k, la.assignment.n_lists.lists());
      labels = std::move(la.labels);
    }
  } else {
    if (!a.cover.empty()) throw InputError("--cover goes with --family");
    std::tie(family, builtin) = build(a.construct);
    input = io::to_json(family);
  }
  RunReport r;
  if (a.method == "constructed") {
    if (!builtin) throw InputError("method 'constructed' needs a construction with a built-in cover");
    r = run_constructed_pipeline(family, *builtin);
  } else {
    r = run_bound_pipeline(family, parse_solve_method(a.method),
                           ExactOptions{std::chrono::milliseconds(a.timeout_ms), true});
  }
  if (r.lifted && !a.cover_out.empty())
    io::write_json_file(a.cover_out, labels.empty() ? json{{"lists", io::to_json(*r.lifted)["edges"]}}
                                                    : labeled_lists(*r.lifted, labels));
  const json command{{"subcommand", "pipeline"},
                     {"construct", a.construct.theorem},
                     {"family", a.family},
                     {"method", a.method}};
  emit(common, run_report_json(r, command, input));
  return r.verified ? kExitOk : kExitVerification;
}

void add_construct_flags(CLI::App* app, ConstructArgs& a) {
  app->add_option("--m", a.m, "number of lists");
  app->add_option("--params", a.params, "theorem 2: k1,k2,k3,k4,k5")->delimiter(',');
  app->add_option("--k", a.k, "theorem 3: size of the triple intersection");
  app->add_option("--l", a.l, "theorem 3: size of the extra l2/l3 overlap");
  app->add_option("--base", a.base, "theorem 1: base family JSON");
  app->add_option("--copies", a.copies, "theorem 1: number of copies");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upper bounds on n_m via list families and weighted covers"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--out", common.out, "write the report here instead of stdout");
  app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"json"}));
  app.add_option("--seed", common.seed, "seed for randomized helpers; never changes results");

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "emit a family JSON");
  c->add_option("--theorem", construct.theorem, "1|2|3|trivial|furedi|l6|n4")->required();
  add_construct_flags(c, construct);
  c->add_option("--cover-out", construct.cover_out, "write the construction's cover as lists JSON");

  std::string quotient_path;
  auto* q = app.add_subcommand("quotient", "membership-pattern quotient with weights");
  q->add_option("--family", quotient_path, "family JSON")->required();

  SolveArgs solve;
  auto* s = app.add_subcommand("solve-cover", "minimum weighted k-cover");
  s->add_option("--family", solve.family, "family JSON; solves on its quotient");
  s->add_option("--targets", solve.targets, "hypergraph JSON with optional \"weights\"");
  s->add_option("--k", solve.k, "edge size (default m-2 with --family)");
  s->add_option("--method", solve.method, "exact|greedy|oracle");
  s->add_option("--timeout-ms", solve.timeout_ms, "exact search time limit, 0 for none");
  s->add_flag("--serial", solve.serial, "use the serial reference search");
  s->add_option("--cover-out", solve.cover_out, "write the cover JSON");

  std::string m_lists, n_lists;
  auto* w = app.add_subcommand("verify-witness", "check a bad list assignment of K_{m,n}");
  w->add_option("--m-lists", m_lists, "M-side lists JSON")->required();
  w->add_option("--n-lists", n_lists, "N-side lists JSON")->required();

  OptimizeArgs optimize;
  auto* o = app.add_subcommand("optimize", "minimize the theorem 2 polynomial");
  o->add_option("--mode", optimize.mode, "reduced|full");
  o->add_option("--grid", optimize.grid, "grid step");
  o->add_option("--tol", optimize.tol, "refinement tolerance");
  o->add_option("--fix", optimize.fix, "full mode: pin a coordinate, e.g. 4=0");

  EvalArgs eval;
  auto* e = app.add_subcommand("eval", "evaluate a closed form");
  e->add_option("--formula", eval.formula, "t2|t2r|t3")->required();
  e->add_option("--args", eval.args, "comma separated arguments (rationals like 1/4)")->delimiter(',');
  e->add_option("--m", eval.m, "t3: m");
  e->add_option("--k", eval.k, "t3: k");
  e->add_option("--l", eval.l, "t3: l");

  PipelineArgs pipeline;
  auto* p = app.add_subcommand("pipeline", "construct or load, quotient, solve, lift, verify");
  p->add_option("--construct", pipeline.construct.theorem, "theorem1|theorem2|theorem3|furedi|l6|n4");
  add_construct_flags(p, pipeline.construct);
  p->add_option("--family", pipeline.family, "family JSON");
  p->add_option("--method", pipeline.method, "exact|greedy|oracle|constructed");
  p->add_option("--timeout-ms", pipeline.timeout_ms, "exact search time limit, 0 for none");
  p->add_option("--cover", pipeline.cover, "with --family and method constructed: cover lists JSON to check");
  p->add_option("--cover-out", pipeline.cover_out, "write the lifted cover as lists JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c) return run_construct(common, construct);
    if (*q) return run_quotient(common, quotient_path);
    if (*s) return run_solve(common, solve);
    if (*w) return run_verify_witness(common, m_lists, n_lists);
    if (*o) return run_optimize(common, optimize);
    if (*e) return run_eval(common, eval);
    if (*p) return run_pipeline(common, pipeline);
  } catch (const VerificationError& err) {
    std::cerr << "verification failed: " << err.what() << "\n";
    return kExitVerification;
  } catch (const InputError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: bad number: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& err) {
    std::cerr << "error: number out of range: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
