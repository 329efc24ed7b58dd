// hweyl: fixtures, transforms, convolutions, vector-measure norms, verification
// reports and benchmarks on finite abelian groups.
//
// Exit codes: 0 success / all checks pass, 1 a verification check failed,
// 2 usage, configuration or input error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hweyl/errors.hpp"
#include "hweyl/fixtures.hpp"
#include "hweyl/io.hpp"
#include "hweyl/twisted.hpp"
#include "hweyl/verify.hpp"

using namespace hweyl;
using io::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw DomainError(what + ": expected an integer, got '" + s + "'");
  return v;
}

FiniteAbelianGroup parse_orders(const std::string& spec) {
  std::vector<int> orders;
  for (const auto& tok : split(spec, ',')) orders.push_back(parse_int(tok, "--orders"));
  if (orders.empty()) throw DomainError("--orders: empty list");
  return FiniteAbelianGroup(orders);
}

Exponent parse_exponent(const std::string& s, const std::string& what) {
  if (s == "inf" || s == "infinity") return Exponent::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw DomainError(what + ": expected a number or 'inf', got '" + s + "'");
  return Exponent(v);
}

// The group comes from --group FILE or --orders LIST (exactly one).
struct GroupArgs {
  std::string group_file;
  std::string orders;

  void add(CLI::App* app) {
    app->add_option("--group", group_file, "group descriptor JSON file");
    app->add_option("--orders", orders, "cyclic factor orders, e.g. 4,2");
  }
  FiniteAbelianGroup get() const {
    if (!group_file.empty() && !orders.empty()) throw DomainError("give either --group or --orders, not both");
    if (!group_file.empty()) {
      const json j = io::read_file(group_file);
      // Accept a bare descriptor or any object carrying one under "group".
      if (j.is_object() && j.contains("group")) return io::group_from_json(j["group"], "$.group");
      return io::group_from_json(j);
    }
    if (!orders.empty()) return parse_orders(orders);
    throw DomainError("a group is required (--group FILE or --orders LIST)");
  }
};

struct SpaceArgs {
  int dim = 2;
  std::string field = "real";
  std::string lq = "2";

  void add(CLI::App* app) {
    app->add_option("--dim", dim, "dimension of X");
    app->add_option("--field", field, "real or complex");
    app->add_option("--lq", lq, "norm exponent of X = l^q (number or inf)");
  }
  NormedSpace get() const {
    if (dim < 1 || dim > 64) throw DomainError("--dim must lie in [1, 64]");
    return NormedSpace(dim, scalar_field_from_string(field), parse_exponent(lq, "--lq"));
  }
};

void write_text(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ParseError(out, "cannot open file for writing");
  f << text;
}

// --- gen --------------------------------------------------------------------

int cmd_gen(const std::string& kind, const GroupArgs& ga, const SpaceArgs& sa, std::uint64_t seed,
            const std::string& out) {
  if (kind == "group") {
    io::write(io::to_json(ga.get()), out);
    return 0;
  }
  const FiniteAbelianGroup g = ga.get();
  if (kind == "function") {
    Rng rng = Rng::stream(seed, "gen/function");
    io::write(io::to_json(random_phase_function(g, rng)), out);
    return 0;
  }
  if (kind == "measure") {
    Rng rng = Rng::stream(seed, "gen/measure");
    io::write(io::to_json(random_vector_measure(g, sa.get(), rng)), out);
    return 0;
  }
  throw DomainError("gen: unknown kind '" + kind + "' (group, function, measure)");
}

// --- weyl / tconv -------------------------------------------------------------

int cmd_weyl(const std::string& in, bool inverse, const std::string& path_name, const std::string& out) {
  const TransformPath path = path_name == "direct" ? TransformPath::direct
                             : path_name == "fft"  ? TransformPath::fft
                                                   : throw DomainError("--path must be direct or fft");
  const json j = io::read_file(in);
  if (inverse) {
    io::write(io::to_json(weyl_inverse(io::weyl_operator_from_json(j), path)), out);
  } else {
    io::write(io::to_json(weyl_transform(io::phase_function_from_json(j), path)), out);
  }
  return 0;
}

int cmd_tconv(const std::string& fin, const std::string& gin, const std::string& path_name, const std::string& out) {
  const PhaseFunction f = io::phase_function_from_json(io::read_file(fin));
  const PhaseFunction g = io::phase_function_from_json(io::read_file(gin));
  io::write(io::to_json(twisted_convolve(f, g, conv_path_from_string(path_name))), out);
  return 0;
}

// --- vmeas --------------------------------------------------------------------

int cmd_vmeas(const std::string& kind, const std::string& measure_file, const std::string& function_file,
              const std::string& p_str, bool estimators, std::uint64_t seed, const std::string& out) {
  const VectorMeasure nu = io::vector_measure_from_json(io::read_file(measure_file));
  SearchConfig cfg;
  cfg.seed = seed;
  cfg.estimator_opt_in = estimators;
  json result;
  if (kind == "sv") {
    result = {{"quantity", "semivariation"}, {"estimate", io::to_json(semivariation(nu, cfg))}};
  } else if (kind == "psv") {
    const Exponent p = parse_exponent(p_str, "--p");
    result = {{"quantity", "p_semivariation"}, {"p", p_str}, {"estimate", io::to_json(p_semivariation(nu, p, cfg))}};
  } else if (kind == "norm") {
    if (function_file.empty()) throw DomainError("vmeas norm needs --function FILE");
    const PhaseFunction f = io::phase_function_from_json(io::read_file(function_file));
    const Exponent p = parse_exponent(p_str, "--p");
    result = {{"quantity", "lp_nu_norm"}, {"p", p_str}, {"estimate", io::to_json(lp_nu_norm(f, nu, p, cfg))}};
  } else {
    throw DomainError("vmeas: unknown quantity '" + kind + "' (sv, psv, norm)");
  }
  io::write(result, out);
  return 0;
}

// --- bench --------------------------------------------------------------------

int cmd_bench(const GroupArgs& ga, std::size_t trials, std::uint64_t seed, const std::string& out) {
  const FiniteAbelianGroup g = ga.get();
  const BenchReport rep = bench_conv(g, trials, seed);
  std::ostringstream os;
  os << "group,path,mean_ns,stddev_ns,agreement_err\n";
  os << std::setprecision(6);
  for (const auto& r : rep.rows) {
    os << '"' << r.group << '"' << "," << to_string(r.path) << "," << r.mean_ns << "," << r.stddev_ns << ","
       << r.agreement_err << "\n";
  }
  write_text(os.str(), out);
  if (trials > 0) {
    std::cerr << "speedup weyl_factorized/direct " << rep.speedup_weyl_factorized << ", fft/direct "
              << rep.speedup_fft << "\n";
  }
  return 0;
}

// --- verify -------------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> groups;  // repeated --orders / --group
  std::vector<std::string> group_files;
  std::optional<std::size_t> trials;
  std::string dims;
  std::string fields;
  std::string lq;
};

int cmd_verify(const std::string& suite_name, const VerifyArgs& va, std::uint64_t seed, const std::string& format,
               const std::string& out) {
  const Suite suite = suite_from_string(suite_name);
  VerifyConfig cfg;
  cfg.seed = seed;
  cfg.trials = va.trials;
  if (!va.groups.empty() || !va.group_files.empty()) {
    cfg.groups.clear();
    for (const auto& s : va.groups) cfg.groups.push_back(parse_orders(s));
    for (const auto& f : va.group_files) cfg.groups.push_back(io::group_from_json(io::read_file(f)));
  }
  if (!va.dims.empty()) {
    cfg.dims.clear();
    for (const auto& t : split(va.dims, ',')) cfg.dims.push_back(parse_int(t, "--dim"));
  }
  if (!va.fields.empty()) {
    cfg.fields.clear();
    for (const auto& t : split(va.fields, ',')) cfg.fields.push_back(scalar_field_from_string(t));
  }
  if (!va.lq.empty()) {
    cfg.lq.clear();
    for (const auto& t : split(va.lq, ',')) cfg.lq.push_back(parse_exponent(t, "--lq"));
  }

  const VerificationReport rep = run_verify(suite, cfg);
  const bool to_file = !out.empty() && out != "-";
  if (format == "json") {
    io::write(report_to_json(rep), out);
    if (to_file) std::cout << report_table(rep);
  } else if (format == "table") {
    write_text(report_table(rep), out);
  } else {
    write_text(report_csv(rep), out);
  }
  return rep.pass ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl transform and twisted convolution toolkit on finite abelian groups"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  std::string out;
  app.add_option("--seed", seed, "root random seed")->capture_default_str();
  app.add_option("--out", out, "output file (default stdout)");

  // gen
  auto* gen = app.add_subcommand("gen", "write a seeded JSON fixture");
  std::string gen_kind;
  GroupArgs gen_group;
  SpaceArgs gen_space;
  gen->add_option("kind", gen_kind, "group, function or measure")->required()->check(
      CLI::IsMember({"group", "function", "measure"}));
  gen_group.add(gen);
  gen_space.add(gen);
  gen->add_option("--seed", seed, "root random seed");
  gen->add_option("--out", out, "output file");

  // weyl
  auto* weyl = app.add_subcommand("weyl", "Weyl transform of a phase function (or its inverse)");
  std::string weyl_in, weyl_path = "fft";
  bool weyl_inverse_flag = false;
  weyl->add_option("input", weyl_in, "PhaseFunction JSON (WeylOperator JSON with --inverse)")->required();
  weyl->add_flag("--inverse", weyl_inverse_flag, "recover the symbol from an operator");
  weyl->add_option("--path", weyl_path, "direct or fft");
  weyl->add_option("--out", out, "output file");

  // tconv
  auto* tconv = app.add_subcommand("tconv", "twisted convolution f x g");
  std::string tconv_f, tconv_g, tconv_path = "weyl_factorized";
  tconv->add_option("f", tconv_f, "PhaseFunction JSON")->required();
  tconv->add_option("g", tconv_g, "PhaseFunction JSON")->required();
  tconv->add_option("--path", tconv_path, "direct, weyl_factorized or fft");
  tconv->add_option("--out", out, "output file");

  // vmeas
  auto* vmeas = app.add_subcommand("vmeas", "semivariation, p-semivariation or L^p(nu) norm");
  std::string vm_kind, vm_measure, vm_function, vm_p = "2";
  bool vm_estimators = false;
  vmeas->add_option("quantity", vm_kind, "sv, psv or norm")->required()->check(CLI::IsMember({"sv", "psv", "norm"}));
  vmeas->add_option("--measure", vm_measure, "VectorMeasure JSON")->required();
  vmeas->add_option("--function", vm_function, "PhaseFunction JSON (norm)");
  vmeas->add_option("--p", vm_p, "exponent (psv, norm)");
  vmeas->add_flag("--estimators", vm_estimators, "allow heuristic estimators beyond the exhaustive ceilings");
  vmeas->add_option("--seed", seed, "search seed");
  vmeas->add_option("--out", out, "output file");

  // bench
  auto* bench = app.add_subcommand("bench", "time the three twisted convolution routes");
  GroupArgs bench_group;
  std::size_t bench_trials = 10;
  bench_group.add(bench);
  bench->add_option("--trials", bench_trials, "timed repetitions per route");
  bench->add_option("--seed", seed, "input seed");
  bench->add_option("--out", out, "CSV output file");

  // verify
  auto* verify = app.add_subcommand("verify", "run the invariant suites and write a report");
  std::string suite_name;
  std::string format = "json";
  VerifyArgs va;
  verify->add_option("suite", suite_name, "core, vmeasure, vweyl, vtwisted or all")->required();
  verify->add_option("--orders", va.groups, "group orders (repeatable), e.g. --orders 2,2 --orders 6");
  verify->add_option("--group", va.group_files, "group descriptor file (repeatable)");
  verify->add_option("--trials", va.trials, "trials per check and group (overrides defaults)");
  verify->add_option("--dim", va.dims, "comma-separated dimensions of X");
  verify->add_option("--field", va.fields, "comma-separated fields (real, complex)");
  verify->add_option("--lq", va.lq, "comma-separated norm exponents of X");
  verify->add_option("--format", format, "json, table or csv")->check(CLI::IsMember({"json", "table", "csv"}));
  verify->add_option("--seed", seed, "root seed");
  verify->add_option("--out", out, "report file (json also prints the table to stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_kind, gen_group, gen_space, seed, out);
    if (*weyl) return cmd_weyl(weyl_in, weyl_inverse_flag, weyl_path, out);
    if (*tconv) return cmd_tconv(tconv_f, tconv_g, tconv_path, out);
    if (*vmeas) return cmd_vmeas(vm_kind, vm_measure, vm_function, vm_p, vm_estimators, seed, out);
    if (*bench) return cmd_bench(bench_group, bench_trials, seed, out);
    if (*verify) return cmd_verify(suite_name, va, seed, format, out);
  } catch (const ParseError& e) {
    std::cerr << "hweyl: parse error at " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "hweyl: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "hweyl: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
