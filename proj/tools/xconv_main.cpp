// xconv: exact toolkit for the disk-tangency reduction to largest-(empty)-
// convex-set in R^3, with lemma checkers, exact solvers, weak eps-net
// verification, convex-range discrepancy, and SVG plots.
//
// Exit codes: 0 success (or decision "yes" / all checks passed),
//             1 decision "no" / some check failed,
//             2 usage, parse, or validation errors.

#include "xconv/checks.hpp"
#include "xconv/generator.hpp"
#include "xconv/io.hpp"
#include "xconv/nets.hpp"
#include "xconv/planar.hpp"
#include "xconv/svg.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace xconv;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
}

enum class InputKind { Instance, Points };

InputKind detect_kind(const json& j) {
  if (j.is_object() && j.contains("centers")) return InputKind::Instance;
  if (j.is_object() && j.contains("L")) return InputKind::Points;
  throw std::invalid_argument("input is neither an instance file nor a points file");
}

// Loads either file kind and normalizes to a reduction. Instance files are
// validated and reduced; points files are taken as-is (the checkers diagnose
// corrupted geometry, so it must survive loading).
ReductionOutput load_reduction(const json& j) {
  if (detect_kind(j) == InputKind::Instance) {
    const DiskInstance d = instance_from_json(j);
    require_valid_instance(d);
    return build_reduction(d);
  }
  return points_from_json(j);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

json witness_points_json(const std::vector<Point3>& pts, const std::vector<std::size_t>& idx) {
  json arr = json::array();
  for (const std::size_t i : idx) arr.push_back(point3_to_json(pts[i]));
  return arr;
}

int cmd_gen(const std::string& out, std::uint64_t seed, std::size_t n,
            const std::string& density) {
  const DiskInstance d = generate_lattice_instance(seed, n, parse_rational(density));
  write_output(out, dump_canonical(instance_to_json(d)));
  return kExitTrue;
}

int cmd_reduce(const std::string& in, const std::string& out) {
  const DiskInstance d = instance_from_json(parse_json(read_input(in)));
  require_valid_instance(d);
  write_output(out, dump_canonical(points_to_json(build_reduction(d))));
  return kExitTrue;
}

int cmd_solve(const std::string& in, const std::string& out, const std::string& problem,
              std::optional<std::int64_t> k) {
  const ReductionOutput r = load_reduction(parse_json(read_input(in)));
  if (k && *k < 0) throw std::invalid_argument("--k must be non-negative");

  json result{{"problem", problem}, {"instance_hash", instance_hash(r.instance)}};
  const auto t0 = std::chrono::steady_clock::now();
  bool decision = true;
  if (problem == "mis") {
    std::vector<TangentPair> edges;
    for (const Blocker& b : r.blockers) edges.push_back(b.pair);
    const SolveResult res = max_independent_set(TangencyGraph{r.lifted.size(), edges});
    result["size"] = res.size;
    result["explored"] = res.explored;
    json w = json::array();
    for (const std::size_t i : res.witness) w.push_back(i + 1);
    result["witness_disks"] = std::move(w);
    if (k) decision = res.size >= static_cast<std::size_t>(*k);
  } else if (problem == "es" || problem == "lecs") {
    const auto pts = r.all_points();
    if (k) {
      decision = problem == "es" ? decide_es(pts, static_cast<std::size_t>(*k))
                                 : decide_lecs(pts, static_cast<std::size_t>(*k));
    } else {
      const SolveResult res =
          problem == "es" ? largest_convex_subset(pts) : largest_empty_convex_subset(pts);
      result["size"] = res.size;
      result["explored"] = res.explored;
      result["witness_points"] = witness_points_json(pts, res.witness);
    }
  } else {
    throw std::invalid_argument("unknown problem: " + problem + " (expected es|lecs|mis)");
  }
  if (k) {
    result["k"] = *k;
    result["decision"] = decision;
  }
  result["wall_ms"] = ms_since(t0);
  write_output(out, dump_canonical(result));
  return decision ? kExitTrue : kExitFalse;
}

int cmd_check(const std::string& in, const std::string& out, const std::string& mode,
              std::size_t cap, std::optional<std::uint64_t> sample) {
  const ReductionOutput r = load_reduction(parse_json(read_input(in)));
  CheckOptions opt;
  opt.mode = parse_check_mode(mode);
  opt.cap = cap;
  opt.sample = sample;
  const CheckReport rep = run_checks(r, opt);
  write_output(out, dump_canonical(report_to_json(rep)));
  return rep.all_passed() ? kExitTrue : kExitFalse;
}

int cmd_net(const std::string& in, const std::string& out,
            const std::optional<std::string>& eps, std::optional<std::int64_t> m) {
  const ReductionOutput r = load_reduction(parse_json(read_input(in)));
  const std::size_t n = r.lifted.size();
  json result{{"instance_hash", instance_hash(r.instance)}, {"l_count", n},
              {"b_count", r.blockers.size()}};

  if (eps && m) throw std::invalid_argument("pass either --eps or --m, not both");
  if (eps) {
    NetInstance inst;
    inst.ground = r.lifted;
    for (const Blocker& b : r.blockers) inst.net.push_back(b.point);
    inst.epsilon = parse_rational(*eps);
    const NetVerdict verdict = verify_weak_eps_net(inst);
    result["eps"] = rational_to_string(inst.epsilon);
    result["is_net"] = verdict.is_net;
    if (verdict.violation)
      result["violation"] = witness_points_json(inst.ground, *verdict.violation);
    write_output(out, dump_canonical(result));
    return verdict.is_net ? kExitTrue : kExitFalse;
  }

  require_valid_instance(r.instance);
  bool all_ok = true;
  if (m) {
    if (*m < 1 || static_cast<std::size_t>(*m) > n)
      throw std::invalid_argument("--m must be in 1..n");
    all_ok = net_iff_no_independent_set(r.instance, static_cast<std::size_t>(*m));
    result["m"] = *m;
    result["net_theorem_holds"] = all_ok;
  } else {
    json per_m = json::array();
    for (std::size_t mm = 1; mm <= n; ++mm) {
      const bool ok = net_iff_no_independent_set(r.instance, mm);
      per_m.push_back(ok);
      all_ok = all_ok && ok;
    }
    result["net_theorem_per_m"] = std::move(per_m);
    result["net_theorem_all_m"] = all_ok;
  }
  write_output(out, dump_canonical(result));
  return all_ok ? kExitTrue : kExitFalse;
}

int cmd_discrepancy(const std::string& in, const std::string& out) {
  const ReductionOutput r = load_reduction(parse_json(read_input(in)));
  ColoredPoints colors;
  colors.red = r.lifted;
  for (const Blocker& b : r.blockers) colors.blue.push_back(b.point);
  const auto t0 = std::chrono::steady_clock::now();
  const SolveResult res = discrepancy(colors);
  std::vector<Point3> all = colors.red;
  all.insert(all.end(), colors.blue.begin(), colors.blue.end());
  json result{{"instance_hash", instance_hash(r.instance)},
              {"red_count", colors.red.size()},
              {"blue_count", colors.blue.size()},
              {"discrepancy", res.size},
              {"witness_points", witness_points_json(all, res.witness)},
              {"explored", res.explored},
              {"wall_ms", ms_since(t0)}};
  write_output(out, dump_canonical(result));
  return kExitTrue;
}

int cmd_approx(const std::string& in, const std::string& out) {
  const ReductionOutput r = load_reduction(parse_json(read_input(in)));
  const auto pts = r.all_points();
  const auto t0 = std::chrono::steady_clock::now();
  const auto [res, dir] = approx_convex_subset_3d_auto(pts);
  json result{{"instance_hash", instance_hash(r.instance)},
              {"direction", point3_to_json(dir)},
              {"size", res.size},
              {"witness_points", witness_points_json(pts, res.witness)},
              {"explored", res.explored},
              {"wall_ms", ms_since(t0)}};
  write_output(out, dump_canonical(result));
  return kExitTrue;
}

int cmd_plot(const std::string& in, const std::string& out) {
  const json j = parse_json(read_input(in));
  if (detect_kind(j) == InputKind::Instance) {
    const DiskInstance d = instance_from_json(j);
    require_valid_instance(d);
    write_output(out, svg_disks(d));
  } else {
    write_output(out, svg_points(points_from_json(j)));
  }
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact convex-position toolkit (disk reductions, solvers, net checks)"};
  app.require_subcommand(1);

  std::string input, output;
  const auto add_io = [&](CLI::App* cmd, bool with_input = true) {
    if (with_input) cmd->add_option("--input,-i", input, "input file (default: stdin)");
    cmd->add_option("--output,-o", output, "output file (default: stdout)");
  };

  std::uint64_t seed = 1;
  std::size_t n = 8;
  std::string density = "1/2";
  auto* gen = app.add_subcommand("gen", "generate a lattice disk instance");
  add_io(gen, false);
  gen->add_option("--seed", seed, "RNG seed")->capture_default_str();
  gen->add_option("--n", n, "number of disks")->capture_default_str();
  gen->add_option("--density", density, "lattice fill density in (0,1], as p/q")
      ->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "build the lifted point set P = L + B");
  add_io(reduce);

  std::string problem = "lecs";
  std::optional<std::int64_t> k;
  auto* solve = app.add_subcommand("solve", "run an exact solver (es | lecs | mis)");
  add_io(solve);
  solve->add_option("--problem", problem, "es | lecs | mis")->capture_default_str();
  solve->add_option("--k", k, "decide optimum >= k instead of optimizing");

  std::string mode = "all";
  std::size_t cap = 18;
  std::optional<std::uint64_t> sample;
  auto* check = app.add_subcommand("check", "run the lemma/oracle checker battery");
  add_io(check);
  check->add_option("--mode", mode, "lemmas | main | nets | all")->capture_default_str();
  check->add_option("--cap", cap, "total-point cap for exhaustive checks")
      ->capture_default_str();
  check->add_option("--sample", sample,
                    "sample this many subsets when the cap is exceeded (lemmas only)");

  std::optional<std::string> eps;
  std::optional<std::int64_t> net_m;
  auto* net = app.add_subcommand("net", "weak eps-net verification / net theorem checks");
  add_io(net);
  net->add_option("--eps", eps, "verify B as an eps-net for L (eps as p/q)");
  net->add_option("--m", net_m, "check the net theorem for one m (default: all m)");

  auto* disc = app.add_subcommand("discrepancy", "red-blue discrepancy of L vs B");
  add_io(disc);

  auto* approx = app.add_subcommand("approx", "projection-based convex-subset approximation");
  add_io(approx);

  auto* plot = app.add_subcommand("plot", "emit an SVG drawing of an instance or points file");
  add_io(plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(output, seed, n, density);
    if (reduce->parsed()) return cmd_reduce(input, output);
    if (solve->parsed()) return cmd_solve(input, output, problem, k);
    if (check->parsed()) return cmd_check(input, output, mode, cap, sample);
    if (net->parsed()) return cmd_net(input, output, eps, net_m);
    if (disc->parsed()) return cmd_discrepancy(input, output);
    if (approx->parsed()) return cmd_approx(input, output);
    if (plot->parsed()) return cmd_plot(input, output);
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
