#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <optional>

#include "polycone/config.hpp"
#include "polycone/errors.hpp"
#include "problem_file.hpp"
#include "report.hpp"

namespace polycone::cli {

namespace {

struct Options {
  std::string file;
  bool text = false;
  bool no_timing = false;
  std::optional<std::size_t> threads;
  std::optional<std::size_t> dim_cap;

  bool frechet = false;
  bool limiting = false;
  bool li = false;

  std::string u;
  std::string mode = "exact";

  std::string method = "exact";

  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
  std::string radius = "1";
  std::optional<std::string> grid_step;
  std::string kappa = "1";
};

GraphPoint graph_point(const ProblemFile& pf) {
  if (!pf.xstar) throw ParseError("$: missing field \"normal\" (or \"lower_c\")");
  return validate_graph_point(pf.inst, pf.point, *pf.xstar);
}

Rat positive(const std::string& text, const char* what) {
  Rat r;
  try {
    r = parse_rat(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
  if (sgn(r) <= 0) throw ParseError(std::string(what) + ": must be positive");
  return r;
}

json cmd_normal_cone(const Options& o, const ProblemFile& pf) {
  if (o.frechet && o.limiting) throw ParseError("normal-cone: pick one of --frechet and --limiting");
  const GraphPoint gp = graph_point(pf);
  json r = {{"graph_point", graph_point_json(gp)},
            {"classical_reduction", pf.inst->i2().empty()},
            {"c_active", !gp.active.i2.empty()}};
  if (o.frechet) {
    r["kind"] = "frechet";
    r["cone"] = frechet_json(frechet_normal_cone_graph(gp));
  } else if (o.li) {
    r["kind"] = "limiting_independent_generators";
    r["cone"] = piece_union_json(limiting_normal_cone_graph_li(gp));
  } else {
    r["kind"] = "limiting";
    r["cone"] = piece_union_json(limiting_normal_cone_graph(gp));
  }
  return r;
}

json cmd_coderivative(const Options& o, const ProblemFile& pf) {
  const GraphPoint gp = graph_point(pf);
  const RatVec u = parse_vector_arg(o.u, pf.inst->dim(), "--u");
  const DomainCone dom = coderivative_domain(gp);
  json r = {{"graph_point", graph_point_json(gp)},
            {"mode", o.mode},
            {"domain", domain_json(*pf.inst, dom)}};
  if (o.mode == "exact") {
    r["value"] = coderivative_json(*pf.inst, coderivative_value(gp, u));
  } else {
    try {
      r["value"] = coderivative_json(*pf.inst, o.mode == "li" ? coderivative_value_li(gp, u)
                                                              : coderivative_superset(gp, u));
    } catch (const OutsideDomain& e) {
      // Outside the domain the coderivative is empty; that is a result, not an error.
      CoderivativeValue empty;
      empty.query = u;
      empty.exactness = o.mode == "li" ? Exactness::Exact : Exactness::SupersetOnly;
      r["value"] = coderivative_json(*pf.inst, empty);
      r["value"]["note"] = e.what();
    }
  }
  return r;
}

json cmd_aubin(const Options& o, const ProblemFile& pf) {
  const GraphPoint gp = graph_point(pf);
  const AubinVerdict v = o.method == "exact" ? aubin_exact(gp) : aubin_sufficient(gp);
  return {{"graph_point", graph_point_json(gp)}, {"aubin", verdict_json(gp, v)}};
}

json cmd_bilevel(const Options&, const ProblemFile& pf) {
  if (!pf.bilevel) throw ParseError("$: missing field \"bilevel\"");
  const BilevelProblem& bp = *pf.bilevel;
  const GraphPoint gp = validate_candidate(bp);
  return {{"graph_point", graph_point_json(gp)},
          {"optimality", optimality_json(bp, gp, necessary_condition(bp, gp))}};
}

json cmd_oracle(const Options& o, const ProblemFile& pf) {
  if (!o.samples && !o.grid_step)
    throw ParseError("oracle: give --samples (proximal sampling) and/or --grid-step (Aubin grid)");
  const GraphPoint gp = graph_point(pf);
  const Rat radius = positive(o.radius, "--radius");
  json r = {{"graph_point", graph_point_json(gp)}, {"radius", to_json(radius)}};

  const ConvexFrechet fr = frechet_convex_oracle(*pf.inst, pf.point);
  r["frechet_normal_cone_theta"] = cone_json(fr.v);

  if (o.samples) {
    const PieceUnion pu = limiting_normal_cone_graph(gp);
    const GraphDecomposition gd = graph_decomposition(*pf.inst);
    // Only bases near (x, x*) carry limiting normals there: shrink the box.
    RatVec center = gp.x;
    center.insert(center.end(), gp.xstar.begin(), gp.xstar.end());
    Rat effective = radius;
    if (auto local = local_sampling_radius(gd, center); local && *local < effective) effective = *local;
    const auto smp =
        proximal_normal_samples(*pf.inst, gd, gp.x, gp.xstar, effective, *o.samples, o.seed);
    const std::size_t n = pf.inst->dim();
    std::size_t outside = 0;
    json first = nullptr;
    for (const auto& s : smp) {
      RatVec u(s.direction.begin(), s.direction.begin() + static_cast<std::ptrdiff_t>(n));
      RatVec v(s.direction.begin() + static_cast<std::ptrdiff_t>(n), s.direction.end());
      if (member_union(pu, u, v)) continue;
      if (outside++ == 0)
        first = {{"z", to_json(s.z)}, {"base", to_json(s.base)}, {"direction", to_json(s.direction)}};
    }
    r["sampling"] = {{"samples", *o.samples},
                     {"seed", o.seed},
                     {"effective_radius", to_json(effective)},
                     {"directions", smp.size()},
                     {"outside_union", outside},
                     {"all_members", outside == 0},
                     {"first_outside", first}};
  }
  if (o.grid_step) {
    const Rat step = positive(*o.grid_step, "--grid-step");
    Rat kappa;
    try {
      kappa = parse_rat(o.kappa);
    } catch (const ParseError& e) {
      throw ParseError(std::string("--kappa: ") + e.what());
    }
    if (sgn(kappa) < 0) throw ParseError("--kappa: must be nonnegative");
    const GridReport g = aubin_grid_check(pf.inst, gp.xstar, gp.x, radius, kappa, step);
    json grid = {{"step", to_json(step)},
                 {"kappa", to_json(kappa)},
                 {"points", g.points},
                 {"pairs", g.pairs},
                 {"verdict", g.counterexample ? "CounterexampleFound" : "ConsistentWithHolds"}};
    if (g.counterexample)
      grid["counterexample"] = {{"x", to_json(g.counterexample->x)},
                                {"u", to_json(g.counterexample->u)},
                                {"y", to_json(g.counterexample->y)}};
    r["aubin_grid"] = grid;
  }
  return r;
}

}  // namespace

std::string Outcome::canonical() const {
  if (report.is_null() || !report.contains("canonical")) return {};
  return report["canonical"].dump(2);
}

Outcome run(const std::vector<std::string>& args) {
  Outcome out;
  Options o;
  CLI::App app{"polycone: normal cones, coderivatives and Aubin certificates relative to a set"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.add_option("--threads", o.threads, "Worker threads (default: POLYCONE_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--dim-cap", o.dim_cap, "Double-description dimension cap (default: POLYCONE_DIM_CAP or 12)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--text", o.text, "Print a human-readable rendering instead of JSON");
  app.add_flag("--no-timing", o.no_timing, "Omit the timing section");

  auto* nc = app.add_subcommand("normal-cone", "Normal cone to the graph relative to C");
  nc->add_option("file", o.file, "Problem file")->required();
  nc->add_flag("--frechet", o.frechet, "Frechet normal cone");
  nc->add_flag("--limiting", o.limiting, "Limiting normal cone (default)");
  nc->add_flag("--li", o.li, "Use the independent-generator enumeration");

  auto* cd = app.add_subcommand("coderivative", "Coderivative of the normal cone mapping");
  cd->add_option("file", o.file, "Problem file")->required();
  cd->add_option("--u", o.u, "Query vector, comma separated rationals")->required();
  cd->add_option("--mode", o.mode, "exact | superset | li")
      ->check(CLI::IsMember({"exact", "superset", "li"}));

  auto* ab = app.add_subcommand("aubin", "Aubin property relative to C");
  ab->add_option("file", o.file, "Problem file")->required();
  ab->add_option("--method", o.method, "exact | sufficient")
      ->check(CLI::IsMember({"exact", "sufficient"}));

  auto* bl = app.add_subcommand("bilevel", "Necessary optimality condition for a simple bilevel program");
  bl->add_option("file", o.file, "Problem file")->required();

  auto* orc = app.add_subcommand("oracle", "Brute-force cross-checks");
  orc->add_option("file", o.file, "Problem file")->required();
  orc->add_option("--samples", o.samples, "Proximal-normal samples");
  orc->add_option("--seed", o.seed, "Sampling seed");
  orc->add_option("--radius", o.radius, "Sampling box / grid ball radius");
  orc->add_option("--grid-step", o.grid_step, "Aubin grid step");
  orc->add_option("--kappa", o.kappa, "Aubin modulus for the grid check");

  std::vector<const char*> argv{"polycone"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out.out = app.help();
    return out;
  } catch (const CLI::ParseError& e) {
    out.exit_code = kInputError;
    out.err = std::string("error: ") + e.what() + "\n";
    return out;
  }

  const std::size_t saved_threads = thread_count(), saved_cap = dim_cap();
  if (o.threads) set_thread_count(*o.threads);
  if (o.dim_cap) set_dim_cap(*o.dim_cap);
  struct Restore {
    std::size_t t, c;
    ~Restore() {
      set_thread_count(t);
      set_dim_cap(c);
    }
  } restore{saved_threads, saved_cap};

  const auto start = std::chrono::steady_clock::now();
  try {
    const ProblemFile pf = load_problem(o.file);
    const std::string name = app.get_subcommands().front()->get_name();
    json result;
    json command = {{"name", name}};
    if (name == "normal-cone") {
      result = cmd_normal_cone(o, pf);
      command["variant"] = o.frechet ? "frechet" : o.li ? "limiting_li" : "limiting";
    } else if (name == "coderivative") {
      result = cmd_coderivative(o, pf);
      command["u"] = o.u;
      command["mode"] = o.mode;
    } else if (name == "aubin") {
      result = cmd_aubin(o, pf);
      command["method"] = o.method;
    } else if (name == "bilevel") {
      result = cmd_bilevel(o, pf);
    } else {
      result = cmd_oracle(o, pf);
      if (o.samples) {
        command["samples"] = *o.samples;
        command["seed"] = o.seed;
      }
      if (o.grid_step) {
        command["grid_step"] = *o.grid_step;
        command["kappa"] = o.kappa;
      }
      command["radius"] = o.radius;
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.report = {{"schema", "polycone/1"},
                  {"canonical", {{"command", command}, {"instance", instance_summary(*pf.inst)}, {"result", result}}}};
    if (!o.no_timing) out.report["timing"] = {{"elapsed_ms", ms}, {"threads", thread_count()}};
    out.out = o.text ? render_text(out.report) : out.report.dump(2) + "\n";
  } catch (const DimensionCapExceeded& e) {
    out.exit_code = kCapExceeded;
    out.err = std::string("error: ") + e.what() + "\n";
  } catch (const InternalInconsistency& e) {
    out.exit_code = kInternal;
    out.err = std::string("internal error: ") + e.what() + "\n";
  } catch (const PolyconeError& e) {
    out.exit_code = kInputError;
    out.err = std::string("error: ") + e.what() + "\n";
  }
  return out;
}

}  // namespace polycone::cli
