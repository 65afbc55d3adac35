// Command-line front end. Exit status: 0 success, 1 a check or construction
// failed, 2 bad input or usage.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ryser/acceptance.hpp"
#include "ryser/colored_graph.hpp"
#include "ryser/delta2_cover.hpp"
#include "ryser/error.hpp"
#include "ryser/generators.hpp"
#include "ryser/hypergraph.hpp"
#include "ryser/oracles.hpp"
#include "ryser/partial_cover.hpp"
#include "ryser/planes.hpp"
#include "ryser/report.hpp"
#include "ryser/t_intersect_cover.hpp"

using namespace ryser;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

json cover_json(const ComponentCover& cover) {
  json parts = json::array();
  for (const auto& p : cover.parts) parts.push_back({{"color", p.color}, {"vertices", p.vertices}});
  return {{"parts", parts},
          {"size", cover.size()},
          {"covered", cover.covered_count},
          {"common_vertex", cover.common_vertex ? json(*cover.common_vertex) : json(nullptr)}};
}

json params_json(const HypergraphParams& p) {
  return {{"tau", p.tau},
          {"nu", p.nu},
          {"rho", p.rho ? json(*p.rho) : json(nullptr)},
          {"delta", p.delta},
          {"alpha", p.alpha},
          {"alpha_prime", p.alpha_prime},
          {"t_level", p.t_level}};
}

struct Common {
  std::string input = "-";
  bool json_output = false;
  bool closure = false;
  std::size_t max_vertices = 40;
  std::size_t max_edges = 64;

  OracleLimits limits() const {
    if (max_vertices > 64 || max_edges > 64) throw InputError("oracle limits cannot exceed 64");
    OracleLimits l;
    l.max_vertices = max_vertices;
    l.max_edges = max_edges;
    return l;
  }
};

class Runner {
 public:
  Runner(std::string command, bool json_output) : json_(json_output) { report_.command = std::move(command); }

  std::string load(const std::string& path) {
    std::string text = read_input(path);
    report_.input_fingerprint = fingerprint(text);
    return text;
  }
  json& out() { return report_.outputs; }
  void timing(const std::string& phase, double ms) { report_.timings_ms[phase] = ms; }
  void check(const std::string& name, bool passed, const std::string& detail = "") {
    report_.checks.push_back({name, passed, detail});
  }
  int finish() {
    report_.timings_ms["total"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    if (json_) {
      std::cout << to_json(report_).dump(2) << "\n";
    } else {
      std::cout << to_text(report_);
    }
    return report_.all_passed() ? kOk : kCheckFailed;
  }

 private:
  bool json_;
  RunReport report_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ColoredCompleteGraph load_graph(Runner& run, const Common& c) {
  const std::string text = run.load(c.input);
  return load_cgf_string(text, c.closure);
}

int cmd_analyze(const Common& c) {
  Runner run("analyze", c.json_output);
  const Hypergraph h = parse_hgf_string(run.load(c.input));
  json violations = json::array();
  for (const auto& v : validate(h)) violations.push_back({{"invariant", v.invariant}, {"witness", v.witness}});
  run.out()["vertices"] = h.vertex_count();
  run.out()["edges"] = h.edge_count();
  run.out()["r"] = h.rank();
  run.out()["violations"] = violations;
  const HypergraphParams p = parameters_exact(h, c.limits());
  run.out()["parameters"] = params_json(p);
  run.check("tau >= nu", p.tau >= p.nu);
  run.check("alpha >= alpha'", p.alpha >= p.alpha_prime);
  if (p.t_level >= 1) run.check("intersecting implies nu = 1", p.nu == 1);
  return run.finish();
}

int cmd_gyarfas(const Common& c, const std::string& output) {
  std::string text = read_input(c.input);
  const Hypergraph h = parse_hgf_string(text);
  const GyarfasResult res = gyarfas_graph(h);
  if (const auto* partial = std::get_if<PartialColoredGraph>(&res)) {
    const auto [u, v] = partial->missing_pairs.front();
    throw PreconditionError("hypergraph is not intersecting: edges " + std::to_string(u) + " and " +
                            std::to_string(v) + " are disjoint (" + std::to_string(partial->missing_pairs.size()) +
                            " such pairs)");
  }
  write_output(output, to_cgf_string(std::get<ColoredCompleteGraph>(res)));
  return kOk;
}

int cmd_closure(const Common& c, const std::string& output) {
  const std::string text = read_input(c.input);
  write_output(output, to_cgf_string(load_cgf_string(text, true)));
  return kOk;
}

int cmd_cover_t(const Common& c, int t) {
  Runner run("cover-t --t " + std::to_string(t), c.json_output);
  const ColoredCompleteGraph g = load_graph(run, c);
  const TCoverResult res = cover_t(g, t);
  run.out()["n"] = g.n();
  run.out()["r"] = g.r();
  run.out()["t"] = t;
  run.out()["cover"] = cover_json(res.cover);
  run.out()["trace"] = res.trace;
  const auto problem = check_components(g, res.cover);
  run.check("parts are monochromatic components", !problem, problem.value_or(""));
  run.check("covers every vertex", static_cast<int>(res.cover.covered_count) == g.n());
  run.check("at most r - t parts", static_cast<int>(res.cover.size()) <= g.r() - t,
            std::to_string(res.cover.size()) + " <= " + std::to_string(g.r() - t));
  return run.finish();
}

int cmd_cover_partial(const Common& c) {
  Runner run("cover-partial", c.json_output);
  const ColoredCompleteGraph g = load_graph(run, c);
  const PartialCoverResult res = partial_cover_distinct(g);
  run.out()["n"] = g.n();
  run.out()["r"] = g.r();
  run.out()["bound"] = res.bound;
  run.out()["covered"] = res.cover.covered_count;
  run.out()["omitted_color"] = res.omitted_color;
  run.out()["route"] = res.route;
  run.out()["cover"] = cover_json(res.cover);
  const auto problem = check_components(g, res.cover);
  run.check("parts are monochromatic components", !problem, problem.value_or(""));
  run.check("r - 1 parts through a common vertex",
            static_cast<int>(res.cover.size()) == g.r() - 1 && res.cover.common_vertex.has_value());
  run.check("covers at least the bound", static_cast<std::int64_t>(res.cover.covered_count) >= res.bound);
  return run.finish();
}

int cmd_sharp(const Common& c) {
  Runner run("sharp", c.json_output);
  const ColoredCompleteGraph g = load_graph(run, c);
  OracleLimits limits = c.limits();
  limits.max_vertices = 64;
  const SharpnessReport rep = check_sharpness(g, limits);
  run.out()["n"] = g.n();
  run.out()["r"] = g.r();
  run.out()["bound"] = rep.bound;
  run.out()["integral"] = rep.integral;
  run.out()["in_scope"] = rep.in_scope;
  run.out()["oracle_max"] = rep.oracle_max;
  run.out()["is_sharp"] = rep.is_sharp;
  if (!rep.note.empty()) run.out()["note"] = rep.note;
  if (rep.blowup) {
    run.out()["blowup"] = {{"order", rep.blowup->plane.order},
                           {"b", rep.blowup->map.b},
                           {"point_of", rep.blowup->map.point_of}};
  } else {
    run.out()["blowup"] = nullptr;
  }
  run.check("optimum at least the bound", rep.oracle_max >= rep.bound);
  return run.finish();
}

int cmd_delta2(const Common& c) {
  Runner run("delta2", c.json_output);
  const Hypergraph h = parse_hgf_string(run.load(c.input));
  const Delta2Result res = ryser_delta2(h);
  std::vector<std::string> names;
  for (VertexId v : res.cover) names.push_back(h.name(v));
  json kinds = json::array();
  for (const auto& part : res.graph_cover.components) {
    kinds.push_back({{"kind", to_string(part.kind)}, {"vertices", part.vertices.size()}, {"alpha", part.alpha},
                     {"edges", part.edges.size()}});
  }
  run.out()["cover"] = names;
  run.out()["size"] = res.cover.size();
  run.out()["nu"] = res.nu;
  run.out()["bound"] = res.bound;
  run.out()["forced"] = res.reduction.forced_cover.size();
  run.out()["components"] = kinds;
  run.out()["trace"] = res.trace;
  run.check("|T| <= (r-1) nu", static_cast<std::int64_t>(res.cover.size()) <= res.bound);
  try {
    const OracleLimits limits = c.limits();
    const int nu = matching_number(h, limits);
    const int tau = vertex_cover_number(h, limits);
    run.out()["tau_exact"] = tau;
    run.out()["nu_exact"] = nu;
    run.check("nu agrees with the exact matching number", nu == res.nu);
    run.check("tau <= |T|", tau <= static_cast<int>(res.cover.size()));
  } catch (const LimitExceeded& e) {
    run.check("exact comparison", true, std::string("skipped: ") + e.what());
  }
  return run.finish();
}

int cmd_oracle(const Common& c, const std::string& quantity) {
  Runner run("oracle " + quantity, c.json_output);
  const OracleLimits limits = c.limits();
  const std::string text = run.load(c.input);
  if (quantity == "mincover" || quantity == "maxpartial") {
    const ColoredCompleteGraph g = load_cgf_string(text, c.closure);
    if (quantity == "mincover") {
      run.out()["cover"] = cover_json(min_component_cover(g, limits));
    } else {
      const PartialCoverOptimum best = max_partial_cover_distinct(g, limits);
      run.out()["covered"] = best.covered;
      run.out()["omitted_color"] = best.omitted_color;
      run.out()["cover"] = cover_json(best.cover);
    }
    return run.finish();
  }
  const Hypergraph h = parse_hgf_string(text);
  if (quantity == "tau") {
    run.out()["tau"] = vertex_cover_number(h, limits);
    run.out()["cover"] = [&] {
      std::vector<std::string> names;
      for (VertexId v : minimum_vertex_cover(h, limits)) names.push_back(h.name(v));
      return names;
    }();
  } else if (quantity == "nu") {
    run.out()["nu"] = matching_number(h, limits);
  } else if (quantity == "rho") {
    const auto rho = edge_cover_number(h, limits);
    run.out()["rho"] = rho ? json(*rho) : json(nullptr);
  } else if (quantity == "alpha") {
    run.out()["alpha"] = static_cast<int>(h.vertex_count()) - vertex_cover_number(h, limits);
  } else if (quantity == "alphaprime") {
    run.out()["alpha_prime"] = strong_independence_number(h, limits);
  } else {
    throw InputError("unknown quantity '" + quantity + "'");
  }
  return run.finish();
}

int cmd_selftest(bool json_output, int only) {
  Runner run("selftest", json_output);
  json results = json::array();
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (only != 0 && id != only) continue;
    const CriterionResult r = run_criterion(id);
    if (!json_output) std::cerr << format_result(r) << std::endl;
    results.push_back({{"id", r.id}, {"checked", r.checked}, {"failures", r.failures},
                       {"budget_seconds", r.budget_seconds}});
    run.timing("criterion " + std::to_string(r.id), r.seconds * 1000);
    run.check(std::to_string(r.id) + " " + r.title, r.passed, r.detail);
  }
  run.out()["criteria"] = results;
  return run.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covers of colored complete graphs and hypergraphs"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, bool graph_input) {
    sub->add_option("input", common.input, "input file, - for stdin")->capture_default_str();
    sub->add_flag("--json", common.json_output, "JSON report (schema 1)");
    if (graph_input) sub->add_flag("--closure", common.closure, "replace the coloring by its transitive closure");
    sub->add_option("--max-vertices", common.max_vertices, "oracle vertex limit (<= 64)")->capture_default_str();
    sub->add_option("--max-edges", common.max_edges, "oracle edge limit (<= 64)")->capture_default_str();
  };

  auto* analyze = app.add_subcommand("analyze", "validate an HGF hypergraph and compute its exact parameters");
  add_common(analyze, false);

  std::string output = "-";
  auto* gyarfas = app.add_subcommand("gyarfas", "colored complete graph of an intersecting r-partite hypergraph");
  gyarfas->add_option("input", common.input, "HGF file, - for stdin");
  gyarfas->add_option("-o,--out", output, "CGF output, - for stdout");

  auto* closure = app.add_subcommand("closure", "transitive closure of a CGF coloring");
  closure->add_option("input", common.input, "CGF file, - for stdin");
  closure->add_option("-o,--out", output, "CGF output, - for stdout");

  int t = 0;
  auto* cover_t_cmd = app.add_subcommand("cover-t", "cover by at most r - t monochromatic components");
  add_common(cover_t_cmd, true);
  cover_t_cmd->add_option("--t", t, "minimum number of colors per pair")->required();

  auto* cover_partial = app.add_subcommand("cover-partial", "r - 1 components of distinct colors");
  add_common(cover_partial, true);

  auto* sharp = app.add_subcommand("sharp", "compare the best partial cover with the bound");
  add_common(sharp, true);

  auto* delta2 = app.add_subcommand("delta2", "vertex cover of a hypergraph with maximum degree 2");
  add_common(delta2, false);

  std::string quantity;
  auto* oracle = app.add_subcommand("oracle", "exact value of one parameter");
  oracle->add_option("quantity", quantity, "tau|nu|rho|alpha|alphaprime|mincover|maxpartial")
      ->required()
      ->check(CLI::IsMember({"tau", "nu", "rho", "alpha", "alphaprime", "mincover", "maxpartial"}));
  add_common(oracle, true);

  int only = 0;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest->add_flag("--json", common.json_output, "JSON report (schema 1)");
  selftest->add_option("--criterion", only, "run a single criterion (1-9)")->check(CLI::Range(1, kCriterionCount));

  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  int q = 0, b = 1, n = 0, r = 0, min_colors = 1, m = 0, class_size = 2;
  std::uint64_t seed = 0;
  bool affine = false, truncated = false, spanning = false, exact = false;
  std::string mode = "mixed";

  auto* gen_plane = gen->add_subcommand("plane", "affine plane (HGF of its lines) or truncated projective plane");
  gen_plane->add_option("--q", q, "order")->required();
  auto* affine_flag = gen_plane->add_flag("--affine", affine, "affine plane AG(2,q)");
  gen_plane->add_flag("--truncated", truncated, "truncated projective plane")->excludes(affine_flag);
  gen_plane->add_option("-o,--out", output, "output, - for stdout");

  auto* gen_blowup = gen->add_subcommand("blowup", "CGF blowup of AG(2,q)");
  gen_blowup->add_option("--q", q, "order")->required();
  gen_blowup->add_option("--b", b, "copies of each point")->capture_default_str();
  gen_blowup->add_option("-o,--out", output, "output, - for stdout");

  auto* gen_colored = gen->add_subcommand("random-colored", "random transitive coloring (CGF)");
  gen_colored->add_option("--n", n, "vertices")->required();
  gen_colored->add_option("--r", r, "colors")->required();
  gen_colored->add_option("--min-colors", min_colors, "colors every pair must get")->capture_default_str();
  gen_colored->add_option("--seed", seed, "seed")->capture_default_str();
  gen_colored->add_flag("--spanning", spanning, "blocks of at least two vertices");
  gen_colored->add_option("-o,--out", output, "output, - for stdout");

  int ti = 1;
  auto* gen_hyp = gen->add_subcommand("random-hyp", "random t-intersecting r-partite hypergraph (HGF)");
  gen_hyp->add_option("--r", r, "rank")->required();
  gen_hyp->add_option("--t", ti, "intersection level")->capture_default_str();
  gen_hyp->add_option("--m", m, "edges")->required();
  gen_hyp->add_option("--class-size", class_size, "vertices per class")->capture_default_str();
  gen_hyp->add_option("--seed", seed, "seed")->capture_default_str();
  gen_hyp->add_flag("--exact", exact, "pairs share exactly t vertices");
  gen_hyp->add_option("-o,--out", output, "output, - for stdout");

  auto* gen_d2 = gen->add_subcommand("random-delta2", "random hypergraph of maximum degree 2 (HGF)");
  gen_d2->add_option("--r", r, "rank")->required();
  gen_d2->add_option("--m", m, "edges")->required();
  gen_d2->add_option("--seed", seed, "seed")->capture_default_str();
  gen_d2->add_option("--mode", mode, "mixed|disjoint|cycle|chain")->capture_default_str();
  gen_d2->add_option("-o,--out", output, "output, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(common);
    if (*gyarfas) return cmd_gyarfas(common, output);
    if (*closure) return cmd_closure(common, output);
    if (*cover_t_cmd) return cmd_cover_t(common, t);
    if (*cover_partial) return cmd_cover_partial(common);
    if (*sharp) return cmd_sharp(common);
    if (*delta2) return cmd_delta2(common);
    if (*oracle) return cmd_oracle(common, quantity);
    if (*selftest) return cmd_selftest(common.json_output, only);
    if (*gen_plane) {
      if (affine == truncated) throw InputError("choose one of --affine and --truncated");
      if (truncated) {
        write_output(output, to_hgf_string(truncated_projective_plane(q)));
      } else {
        const AffinePlane plane = affine_plane(q);
        std::vector<Edge> lines(plane.lines.begin(), plane.lines.end());
        write_output(output, to_hgf_string(Hypergraph(q, plane.point_labels, std::move(lines))));
      }
      return kOk;
    }
    if (*gen_blowup) {
      write_output(output, to_cgf_string(blowup_graph(affine_plane(q), b)));
      return kOk;
    }
    if (*gen_colored) {
      write_output(output, to_cgf_string(gen_transitive_colored(n, r, min_colors, seed, spanning)));
      return kOk;
    }
    if (*gen_hyp) {
      const GeneratedHypergraph g = gen_t_intersecting_hypergraph(r, ti, m, class_size, seed, exact);
      if (!g.reached) {
        std::cerr << "warning: only " << g.hypergraph.edge_count() << " of " << m << " edges accepted\n";
      }
      write_output(output, to_hgf_string(g.hypergraph));
      return kOk;
    }
    if (*gen_d2) {
      write_output(output, to_hgf_string(gen_delta2(r, m, seed, parse_delta2_mode(mode))));
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kInputError;
  } catch (const LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kInputError;
  } catch (const HypothesisViolation& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kInputError;
}
