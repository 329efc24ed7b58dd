// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.
//
// usage: acceptance <path-to-hweyl-cli> [criterion...]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "json.hpp"

#include "hweyl/fixtures.hpp"
#include "hweyl/tolerances.hpp"
#include "hweyl/twisted.hpp"
#include "hweyl/vector_twisted.hpp"
#include "hweyl/vector_weyl.hpp"
#include "hweyl/verify.hpp"

using namespace hweyl;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<FiniteAbelianGroup> default_groups() { return VerifyConfig::default_groups(); }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double rel(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const double s = std::max(a.norm(), b.norm());
  return s > 0 ? (a - b).norm() / s : 0.0;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// Every ordered factorization with factors >= 2 and product <= 16.
void factorizations(std::vector<int>& cur, int product, std::vector<std::vector<int>>& out) {
  if (!cur.empty()) out.push_back(cur);
  for (int n = 2; product * n <= 16; ++n) {
    cur.push_back(n);
    factorizations(cur, product * n, out);
    cur.pop_back();
  }
}

Outcome plancherel() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (const auto& g : default_groups()) {
    Rng rng = Rng::stream(1, "acceptance/plancherel/" + g.describe());
    for (int t = 0; t < 1000; ++t) {
      const PhaseFunction f = random_phase_function(g, rng);
      const double l2 = lp_norm(f, Exponent(2.0));
      worst = std::max(worst, std::abs(schatten_norm(weyl_transform(f), Exponent(2.0)) - l2) / l2);
    }
  }
  const double secs = seconds_since(t0);
  return {worst <= tol::identity && secs < 5.0, fmt("worst relative deviation %.3e, %.2f s", worst, secs)};
}

Outcome homomorphism() {
  double worst = 0.0;
  for (const auto& g : default_groups()) {
    Rng rng = Rng::stream(1, "acceptance/homomorphism/" + g.describe());
    for (int t = 0; t < 500; ++t) {
      const PhaseFunction f = random_phase_function(g, rng), h = random_phase_function(g, rng);
      worst = std::max(worst, rel(weyl_transform(twisted_convolve(f, h, ConvPath::direct)).matrix(),
                                  (weyl_transform(f) * weyl_transform(h)).matrix()));
    }
  }
  return {worst <= tol::product, fmt("worst relative Frobenius error %.3e", worst)};
}

Outcome path_equivalence() {
  std::vector<std::vector<int>> shapes;
  std::vector<int> cur;
  factorizations(cur, 1, shapes);
  double worst = 0.0;
  for (const auto& orders : shapes) {
    const FiniteAbelianGroup g(orders);
    Rng rng = Rng::stream(1, "acceptance/paths/" + g.describe());
    for (int t = 0; t < 3; ++t) {
      const PhaseFunction f = random_phase_function(g, rng), h = random_phase_function(g, rng);
      const Eigen::VectorXcd d = twisted_convolve(f, h, ConvPath::direct).values();
      worst = std::max(worst, rel(twisted_convolve(f, h, ConvPath::weyl_factorized).values(), d));
      worst = std::max(worst, rel(twisted_convolve(f, h, ConvPath::fft).values(), d));
    }
  }
  const BenchReport bench = bench_conv(FiniteAbelianGroup({128}), 3);
  const bool ok = worst <= tol::product && bench.speedup_weyl_factorized >= 5.0;
  return {ok, fmt("%.0f group shapes, worst disagreement %.3e; Z128 weyl_factorized speedup %.1fx",
                  static_cast<double>(shapes.size()), worst, bench.speedup_weyl_factorized)};
}

Outcome scalar_inequalities() {
  const double hy_grid[] = {1.0, 1.2, 4.0 / 3.0, 1.5, 2.0};
  const std::vector<Exponent> grid{Exponent(1.0), Exponent(4.0 / 3.0), Exponent(1.5),
                                   Exponent(2.0), Exponent(3.0),       Exponent::infinity()};
  std::vector<std::pair<Exponent, Exponent>> pairs;
  for (auto p : grid) {
    for (auto q : grid) {
      if (p.reciprocal() + q.reciprocal() >= 1.0) pairs.emplace_back(p, q);
    }
  }
  double worst = std::numeric_limits<double>::infinity();
  std::size_t draws = 0;
  for (const auto& g : default_groups()) {
    Rng rng = Rng::stream(1, "acceptance/young/" + g.describe());
    for (int t = 0; t < 1000; ++t) {
      const PhaseFunction f = random_phase_function(g, rng), h = random_phase_function(g, rng);
      const double p = hy_grid[t % 5];
      worst = std::min(worst, hausdorff_young_margin(f, p) / lp_norm(f, Exponent(p)));
      const auto& [a, b] = pairs[static_cast<std::size_t>(t) % pairs.size()];
      const YoungMargins m = young_margins(f, h, a, b);
      const double l1 = lp_norm(f, Exponent(1.0)) * lp_norm(h, b);
      worst = std::min({worst, m.young / m.scale, m.l1_left / l1, m.l1_right / l1});
      ++draws;
    }
  }
  return {worst >= -tol::inequality,
          fmt("%.0f draws, %.0f exponent pairs, worst normalized margin %.3e", static_cast<double>(draws),
              static_cast<double>(pairs.size()), worst)};
}

Outcome semivariation_duality() {
  double worst_order = std::numeric_limits<double>::infinity();
  double widest = 0.0;
  int instances = 0;
  const std::vector<Exponent> qs{Exponent(1.0), Exponent(2.0), Exponent(3.0), Exponent::infinity()};
  for (const auto& g : default_groups()) {
    Rng rng = Rng::stream(1, "acceptance/duality/" + g.describe());
    for (int t = 0; t < 12; ++t) {
      const NormedSpace s(1 + t % 3, ScalarField::real, qs[static_cast<std::size_t>(t / 3) % qs.size()]);
      const VectorMeasure nu = random_vector_measure(g, s, rng);
      const std::size_t k = 1 + rng.index(std::min<std::size_t>(10, g.phase_count()));
      PhaseSet a;
      for (std::size_t i = 0; i < k; ++i) a.push_back((i * 7 + static_cast<std::size_t>(t)) % g.phase_count());
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      Eigen::MatrixXcd rows(static_cast<Eigen::Index>(a.size()), s.dim());
      for (std::size_t i = 0; i < a.size(); ++i) rows.row(static_cast<Eigen::Index>(i)) = nu.atom(a[i]).transpose();
      const double exact = sign_enumeration_sup(rows, s);
      const Estimate net = semivariation_dual_bracket(nu, a);
      worst_order = std::min({worst_order, (exact - net.lower) / exact, (net.upper - exact) / exact});
      widest = std::max(widest, net.width() / exact);
      ++instances;
    }
  }
  double worst_psv = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto groups = default_groups();
    const auto& g = groups[static_cast<std::size_t>(t) % groups.size()];
    Rng rng = Rng::stream(1, "acceptance/psv/" + std::to_string(t));
    const NormedSpace s(1 + t % 3, t % 2 ? ScalarField::complex : ScalarField::real, Exponent(2.0));
    const VectorMeasure nu = random_vector_measure(g, s, rng);
    const double exact = p_semivariation(nu, Exponent(2.0)).value;
    const double ascent = p_semivariation_ascent(nu, Exponent(2.0));
    worst_psv = std::max(worst_psv, std::abs(exact - ascent) / exact);
  }
  const bool ok = worst_order >= -tol::inequality && widest <= tol::duality_bracket && worst_psv <= tol::ascent_agreement;
  return {ok, fmt("%.0f real instances, widest bracket %.2f%%; SVD vs ascent worst %.3e on 100", instances,
                  100 * widest, worst_psv)};
}

Outcome weyl_coherence() {
  double worst = 0.0;
  const auto groups = default_groups();
  for (int t = 0; t < 200; ++t) {
    const auto& g = groups[static_cast<std::size_t>(t) % groups.size()];
    Rng rng = Rng::stream(1, "acceptance/coherence/" + std::to_string(t));
    const NormedSpace s(1 + t % 3, t % 2 ? ScalarField::complex : ScalarField::real, Exponent(2.0));
    const VectorMeasure nu = random_vector_measure(g, s, rng);
    const PhaseFunction f = random_phase_function(g, rng);
    const DualFunctional xs = random_unit_dual(s, rng);
    const VectorWeylOperator w = weyl_nu(f, nu);
    worst = std::max(worst, rel(w.scalarize(xs).matrix(), weyl_nu_weak(f, nu, xs).matrix()));
    const VectorWeylOperator m = weyl_of_measure(nu.weighted(f));
    for (int j = 0; j < s.dim(); ++j) worst = std::max(worst, rel(w.coord(j), m.coord(j)));
  }
  return {worst <= tol::identity, fmt("200 triples, worst relative error %.3e", worst)};
}

Outcome uniqueness() {
  int mismatches = 0, cases = 0;
  double worst_recovery = 0.0;
  for (const auto& orders : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}}) {
    const FiniteAbelianGroup g(orders);
    const auto n = static_cast<Eigen::Index>(g.order());
    Eigen::MatrixXcd r(n * n, n * n);
    for (std::size_t p = 0; p < g.phase_count(); ++p) {
      const Eigen::MatrixXcd m = schrodinger_matrix(g, p);
      r.col(static_cast<Eigen::Index>(p)) = Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
    }
    const auto qr = r.colPivHouseholderQr();
    if (qr.rank() != n * n) ++mismatches;
    Rng rng = Rng::stream(1, "acceptance/uniqueness/" + g.describe());
    for (int t = 0; t < 50; ++t) {
      const NormedSpace s(1 + t % 3, t % 2 ? ScalarField::complex : ScalarField::real, Exponent(2.0));
      Eigen::MatrixXcd atoms = random_vector_measure(g, s, rng).atoms();
      for (Eigen::Index p = 0; p < atoms.rows(); ++p) {
        if (rng.index(3) == 0) atoms.row(p).setZero();
      }
      const VectorMeasure nu(g, s, atoms);
      // W(nu) determines nu: solve the linear system for the atoms.
      const VectorWeylOperator w = weyl_of_measure(nu);
      for (int j = 0; j < s.dim(); ++j) {
        const Eigen::MatrixXcd& a = w.coord(j);
        const Eigen::VectorXcd back = qr.solve(Eigen::Map<const Eigen::VectorXcd>(a.data(), a.size()));
        worst_recovery = std::max(worst_recovery, (back - atoms.col(j)).norm() / std::max(1.0, atoms.col(j).norm()));
      }
      // Kernel of f -> W^nu(f) against the support rule and the linear system.
      Eigen::VectorXcd fv = random_phase_function(g, rng).values();
      if (t % 2 == 0) {
        for (Eigen::Index p = 0; p < atoms.rows(); ++p) {
          if (atoms.row(p).norm() > 0) fv[p] = 0.0;
        }
      }
      bool support_rule = true;
      for (Eigen::Index p = 0; p < atoms.rows(); ++p) {
        if (atoms.row(p).norm() > 0 && fv[p] != cplx{}) support_rule = false;
      }
      bool system = true;
      for (int j = 0; j < s.dim(); ++j) {
        const Eigen::VectorXcd c = fv.cwiseProduct(atoms.col(j));
        if ((r * c).norm() > 1e-10 * std::max(1.0, c.norm())) system = false;
      }
      const bool lib = kernel_support_test(nu, PhaseFunction(g, fv));
      if (lib != support_rule || lib != system) ++mismatches;
      ++cases;
    }
  }
  return {mismatches == 0 && worst_recovery <= tol::identity,
          fmt("%.0f kernel cases, %.0f mismatches, worst measure recovery %.3e", cases, mismatches, worst_recovery)};
}

Outcome convolution_identities() {
  double worst_r1 = 0.0, worst_density = 0.0;
  const auto groups = default_groups();
  for (int t = 0; t < 200; ++t) {
    const auto& g = groups[static_cast<std::size_t>(t) % groups.size()];
    Rng rng = Rng::stream(1, "acceptance/r1/" + std::to_string(t));
    const NormedSpace s(1 + t % 3, t % 2 ? ScalarField::complex : ScalarField::real,
                        t % 3 ? Exponent(2.0) : Exponent::infinity());
    const VectorMeasure nu = random_vector_measure(g, s, rng);
    const PhaseFunction f = random_phase_function(g, rng), h = random_phase_function(g, rng);
    const DualFunctional xs = random_unit_dual(s, rng);
    worst_r1 = std::max(worst_r1, rel(tconv_nu_vector(f, h, nu).pair(xs).values(), tconv_nu_weak(f, h, nu, xs).values()));
    worst_density = std::max(worst_density, rel(fn_measure_tconv(f, nu).as_density().atoms(),
                                                measure_tconv(ScalarMeasure::from_density(f), nu).atoms()));
  }
  return {std::max(worst_r1, worst_density) <= tol::identity,
          fmt("scalarized convolution worst %.3e, density identity worst %.3e", worst_r1, worst_density)};
}

Outcome vector_young() {
  const SearchConfig cfg = VerifyConfig::fast_search();
  const Exponent pp_grid[] = {Exponent(1.0), Exponent(4.0 / 3.0), Exponent(2.0), Exponent(3.0), Exponent::infinity()};
  const std::vector<std::pair<double, double>> vy{{4.0 / 3.0, 1.0}, {4.0 / 3.0, 4.0 / 3.0}, {4.0 / 3.0, 2.0},
                                                  {4.0 / 3.0, 3.0}, {2.0, 1.0},             {2.0, 4.0 / 3.0},
                                                  {2.0, 1.5},       {3.0, 1.0},             {3.0, 1.2},
                                                  {3.0, 4.0 / 3.0}};
  const std::vector<Exponent> lq{Exponent(2.0), Exponent(1.0), Exponent::infinity()};
  const auto groups = default_groups();
  double worst = std::numeric_limits<double>::infinity();
  int failures = 0;
  for (int t = 0; t < 200; ++t) {
    const auto& g = groups[static_cast<std::size_t>(t) % groups.size()];
    Rng rng = Rng::stream(1, "acceptance/vector_young/" + std::to_string(t));
    const NormedSpace s(1 + t % 3, (t / 3) % 2 ? ScalarField::complex : ScalarField::real,
                        lq[static_cast<std::size_t>(t / 6) % lq.size()]);
    const VectorMeasure nu = random_vector_measure(g, s, rng);
    const PhaseFunction f = random_phase_function(g, rng);
    const VectorYoungMargin c = pp_contraction_margin(f, nu, pp_grid[t % 5], cfg);
    const auto& [p, q] = vy[static_cast<std::size_t>(t) % vy.size()];
    const VectorYoungMargin y = young_vvyi_margin(f, nu, Exponent(p), Exponent(q), cfg);
    for (const auto& m : {c, y}) {
      if (!m.holds()) ++failures;
      worst = std::min(worst, (m.margin + m.tolerance) / std::max(m.scale, 1e-300));
    }
  }
  return {failures == 0, fmt("200 draws, %.0f violations, worst (margin + tol)/scale %.3e", failures, worst)};
}

Outcome vector_hausdorff_young() {
  double worst = std::numeric_limits<double>::infinity();
  double worst_equality = 0.0;
  const auto groups = default_groups();
  const double ps[] = {1.0, 4.0 / 3.0, 2.0};
  for (int t = 0; t < 200; ++t) {
    const auto& g = groups[static_cast<std::size_t>(t) % groups.size()];
    Rng rng = Rng::stream(1, "acceptance/vvhy/" + std::to_string(t));
    const double p = ps[t % 3];
    const int r = 1 + (t / 3) % 3;
    std::vector<Eigen::MatrixXcd> vals;
    for (std::size_t i = 0; i < g.phase_count(); ++i) vals.push_back(random_matrix(r, r, rng));
    const VectorPhaseFunction F(g, vals);
    const Exponent e(p);
    double scale = 0.0;
    for (const auto& v : vals) scale += std::pow(schatten_norm(v, e.conjugate()), p) * g.haar().phase;
    scale = std::pow(scale, 1.0 / p);
    const double m = vv_hausdorff_young_margin(F, p);
    worst = std::min(worst, m / scale);
    if (p == 2.0) worst_equality = std::max(worst_equality, std::abs(m) / scale);
  }
  return {worst >= -tol::inequality && worst_equality <= tol::identity,
          fmt("200 draws, worst normalized margin %.3e, p = 2 deviation %.3e", worst, worst_equality)};
}

bool schema_valid(const nlohmann::json& j, std::string& why) {
  auto need = [&](bool ok, const std::string& what) {
    if (!ok && why.empty()) why = what;
    return ok;
  };
  bool ok = need(j.is_object(), "report is not an object");
  ok = ok && need(j.value("schema", 0) == 1, "schema != 1");
  ok = ok && need(j.contains("suite") && j["suite"].is_string(), "suite");
  ok = ok && need(j.contains("pass") && j["pass"].is_boolean(), "pass");
  ok = ok && need(j.contains("config") && j["config"].is_object(), "config");
  ok = ok && need(j["config"].contains("seed") && j["config"]["groups"].is_array() && j["config"]["dims"].is_array() &&
                      j["config"].contains("exponent_grid"),
                  "config echo");
  ok = ok && need(j.contains("checks") && j["checks"].is_array() && !j["checks"].empty(), "checks");
  if (!ok) return false;
  bool all = true;
  std::string prev;
  for (const auto& c : j["checks"]) {
    ok = need(c["check_name"].is_string() && c["anchor"].is_string() && c["trials"].is_number_unsigned() &&
                  c["worst_margin"].is_number() && c["tolerance"].is_number() && c["pass"].is_boolean(),
              "check record fields");
    if (!ok) return false;
    if (c.contains("bracket_width") && !need(c["bracket_width"].is_number(), "bracket_width")) return false;
    const std::string name = c["check_name"];
    if (!need(prev < name, "checks not sorted")) return false;
    prev = name;
    all = all && c["pass"].get<bool>();
  }
  return need(all == j["pass"].get<bool>(), "overall pass inconsistent");
}

Outcome verify_all(const std::string& cli) {
  const std::string out = "acceptance_verify_all.json";
  const std::string cmd = "\"" + cli + "\" verify all --out " + out + " > /dev/null";
  const auto t0 = Clock::now();
  const int status = std::system(cmd.c_str());
  const double secs = seconds_since(t0);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::string why;
  bool valid = false;
  try {
    valid = in && schema_valid(nlohmann::json::parse(in), why);
  } catch (const std::exception& e) {
    why = e.what();
  }
  return {code == 0 && secs < 120.0 && valid,
          fmt("exit %.0f in %.1f s, ", code, secs) + (valid ? "schema valid" : "schema invalid: " + why)};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <hweyl-cli> [criterion...]\n";
    return 2;
  }
  const std::string cli = argv[1];
  std::set<int> only;
  for (int i = 2; i < argc; ++i) only.insert(std::atoi(argv[i]));

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Plancherel isometry", plancherel},
      {"Weyl transform is an algebra homomorphism", homomorphism},
      {"convolution paths agree; Z128 speedup", path_equivalence},
      {"scalar Hausdorff-Young and Young margins", scalar_inequalities},
      {"semivariation duality bracket; SVD vs ascent", semivariation_duality},
      {"vector-measure Weyl coherence", weyl_coherence},
      {"uniqueness by linear solve", uniqueness},
      {"scalarized vector convolution and density identity", convolution_identities},
      {"vector Young inequalities", vector_young},
      {"vector-valued Hausdorff-Young", vector_hausdorff_young},
      {"verify all on defaults", [&] { return verify_all(cli); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << o.detail << ")" << std::endl;
  }
  return all ? 0 : 1;
}
