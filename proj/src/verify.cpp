#include "hweyl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>

#include "hweyl/errors.hpp"
#include "hweyl/fixtures.hpp"
#include "hweyl/io.hpp"
#include "hweyl/tolerances.hpp"
#include "hweyl/twisted.hpp"
#include "hweyl/vector_twisted.hpp"
#include "hweyl/vector_weyl.hpp"

namespace hweyl {

std::string to_string(Suite s) {
  switch (s) {
    case Suite::core:
      return "core";
    case Suite::vmeasure:
      return "vmeasure";
    case Suite::vweyl:
      return "vweyl";
    case Suite::vtwisted:
      return "vtwisted";
    case Suite::all:
      return "all";
  }
  return "unknown";
}

Suite suite_from_string(const std::string& name) {
  for (Suite s : {Suite::core, Suite::vmeasure, Suite::vweyl, Suite::vtwisted, Suite::all}) {
    if (to_string(s) == name) return s;
  }
  throw DomainError("unknown suite '" + name + "' (core, vmeasure, vweyl, vtwisted, all)");
}

std::vector<FiniteAbelianGroup> VerifyConfig::default_groups() {
  return {FiniteAbelianGroup({2}), FiniteAbelianGroup({3}), FiniteAbelianGroup({4}), FiniteAbelianGroup({2, 2}),
          FiniteAbelianGroup({6})};
}

SearchConfig VerifyConfig::fast_search() {
  SearchConfig s;
  s.net_budget = 100000;
  s.starts = 16;
  s.max_iterations = 500;
  s.estimator_opt_in = true;
  return s;
}

namespace {

// ---------------------------------------------------------------------------
// Check plumbing

struct Tracker {
  double worst = std::numeric_limits<double>::infinity();
  double bracket = -1.0;

  /// Records (margin + allowance) / scale.
  void slack(double margin, double scale, double allowance = 0.0) {
    const double s = scale > 0 ? scale : 1.0;
    worst = std::min(worst, (margin + allowance) / s);
  }
  /// Records a deviation that should vanish.
  void deviation(double dev, double scale) { slack(-dev, scale); }
  void flag(bool ok) { worst = std::min(worst, ok ? 0.0 : -1.0); }
  void width(double w, double scale) {
    const double s = scale > 0 ? scale : 1.0;
    bracket = std::max(bracket, std::isfinite(w) ? w / s : std::numeric_limits<double>::max());
  }
};

struct Ctx {
  const VerifyConfig& cfg;
  const FiniteAbelianGroup& g;
  Rng& rng;
  std::size_t t;

  NormedSpace space() const {
    const std::size_t nd = cfg.dims.size(), nf = cfg.fields.size(), nq = cfg.lq.size();
    return NormedSpace(cfg.dims[t % nd], cfg.fields[(t / nd) % nf], cfg.lq[(t / (nd * nf)) % nq]);
  }
  PhaseFunction f() { return random_phase_function(g, rng); }
  std::size_t phase() { return rng.index(g.phase_count()); }
  /// k distinct phase indices.
  PhaseSet subset(std::size_t k) {
    PhaseSet all = full_phase_set(g);
    k = std::min(k, all.size());
    for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[i + rng.index(all.size() - i)]);
    all.resize(k);
    return all;
  }
};

// Returns false when the check does not apply to the context's group.
using CheckFn = std::function<bool(Ctx&, Tracker&)>;

struct Check {
  const char* name;
  const char* anchor;
  Suite suite;
  std::size_t default_trials;
  double tolerance;
  bool bracketed;
  CheckFn run;
  bool per_group = true;
};

double rel_frob(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const double s = std::max(a.norm(), b.norm());
  return s > 0 ? (a - b).norm() / s : 0.0;
}

double rel_vec(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  const double s = std::max(a.norm(), b.norm());
  return s > 0 ? (a - b).norm() / s : 0.0;
}

const std::vector<double> kHausdorffYoungGrid = {1.0, 1.2, 4.0 / 3.0, 1.5, 2.0};

std::vector<Exponent> young_grid() {
  return {Exponent(1.0), Exponent(4.0 / 3.0), Exponent(1.5), Exponent(2.0), Exponent(3.0), Exponent::infinity()};
}

/// (p, q) pairs for the vector Young inequality: p in {4/3, 2, 3}, 1/p + 1/q > 1.
std::vector<std::pair<Exponent, Exponent>> vvyi_grid() {
  return {{Exponent(4.0 / 3.0), Exponent(1.0)}, {Exponent(4.0 / 3.0), Exponent(4.0 / 3.0)},
          {Exponent(4.0 / 3.0), Exponent(2.0)}, {Exponent(4.0 / 3.0), Exponent(3.0)},
          {Exponent(2.0), Exponent(1.0)},       {Exponent(2.0), Exponent(4.0 / 3.0)},
          {Exponent(2.0), Exponent(1.5)},       {Exponent(3.0), Exponent(1.0)},
          {Exponent(3.0), Exponent(1.2)},       {Exponent(3.0), Exponent(4.0 / 3.0)}};
}

Eigen::MatrixXcd rho_basis(const FiniteAbelianGroup& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXcd r(n * n, n * n);
  for (std::size_t p = 0; p < g.phase_count(); ++p) {
    const Eigen::MatrixXcd m = schrodinger_matrix(g, p);
    r.col(static_cast<Eigen::Index>(p)) = Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
  }
  return r;
}

// ---------------------------------------------------------------------------
// core

std::vector<Check> core_checks() {
  std::vector<Check> c;
  c.push_back({"core.character_orthogonality", "sum_x chi(x) = |G| [chi trivial]", Suite::core, 20, tol::table, false,
               [](Ctx& x, Tracker& tr) {
                 const std::size_t a = x.rng.index(x.g.order());
                 cplx s = 0.0;
                 for (std::size_t e = 0; e < x.g.order(); ++e) s += x.g.pairing(a, e);
                 const double expect = a == 0 ? static_cast<double>(x.g.order()) : 0.0;
                 tr.deviation(std::abs(s - expect), 1.0);
                 return true;
               }});
  c.push_back({"core.character_homomorphism", "chi_{a+b}(x) = chi_a(x) chi_b(x), chi_a(x+y) = chi_a(x) chi_a(y)",
               Suite::core, 100, tol::table, false, [](Ctx& x, Tracker& tr) {
                 const auto& g = x.g;
                 const std::size_t n = g.order();
                 const std::size_t a = x.rng.index(n), b = x.rng.index(n), e = x.rng.index(n), y = x.rng.index(n);
                 tr.deviation(std::abs(g.pairing(g.add(a, b), e) - g.pairing(a, e) * g.pairing(b, e)), 1.0);
                 tr.deviation(std::abs(g.pairing(a, g.add(e, y)) - g.pairing(a, e) * g.pairing(a, y)), 1.0);
                 tr.deviation(std::abs(std::abs(g.pairing(a, e)) - 1.0), 1.0);
                 return true;
               }});
  c.push_back({"core.haar_consistency", "sum_w w_phase = |G|, w_phase = w_G w_dual", Suite::core, 1, tol::table,
               false, [](Ctx& x, Tracker& tr) {
                 const auto h = x.g.haar();
                 const double n = static_cast<double>(x.g.order());
                 tr.deviation(std::abs(h.phase * static_cast<double>(x.g.phase_count()) - n), n);
                 tr.deviation(std::abs(h.group * h.dual - h.phase), 1.0);
                 return true;
               }});
  c.push_back({"core.representation_law", "rho(w) rho(w') = conj(chi'(x)) rho(w w')", Suite::core, 50, tol::table,
               false, [](Ctx& x, Tracker& tr) {
                 const auto& g = x.g;
                 const std::size_t p = x.phase(), q = x.phase();
                 const cplx c = std::conj(g.pairing(g.phase_character(q), g.phase_element(p)));
                 const Eigen::MatrixXcd lhs = schrodinger_matrix(g, p) * schrodinger_matrix(g, q);
                 const Eigen::MatrixXcd rhs = c * schrodinger_matrix(g, g.phase_add(p, q));
                 tr.deviation((lhs - rhs).norm(), std::sqrt(static_cast<double>(g.order())));
                 return true;
               }});
  c.push_back({"core.unitarity", "rho(w)^* rho(w) = I", Suite::core, 20, tol::table, false, [](Ctx& x, Tracker& tr) {
                 const Eigen::MatrixXcd m = schrodinger_matrix(x.g, x.phase());
                 const auto n = static_cast<Eigen::Index>(x.g.order());
                 tr.deviation((m.adjoint() * m - Eigen::MatrixXcd::Identity(n, n)).norm(),
                              std::sqrt(static_cast<double>(n)));
                 return true;
               }});
  c.push_back({"core.plancherel", "||W(f)||_S2 = ||f||_L2", Suite::core, 1000, tol::identity, false,
               [](Ctx& x, Tracker& tr) {
                 const PhaseFunction f = x.f();
                 const double l2 = lp_norm(f, Exponent(2.0));
                 tr.deviation(std::abs(schatten_norm(weyl_transform(f), Exponent(2.0)) - l2), l2);
                 return true;
               }});
  c.push_back({"core.round_trip", "W^{-1} W = id, W W^{-1} = id", Suite::core, 100, tol::identity, false,
               [](Ctx& x, Tracker& tr) {
                 const PhaseFunction f = x.f();
                 tr.deviation(rel_vec(weyl_inverse(weyl_transform(f)).values(), f.values()), 1.0);
                 const auto n = static_cast<Eigen::Index>(x.g.order());
                 const WeylOperator a(x.g, random_matrix(n, n, x.rng));
                 tr.deviation(rel_frob(weyl_transform(weyl_inverse(a)).matrix(), a.matrix()), 1.0);
                 return true;
               }});
  c.push_back({"core.fft_vs_direct", "fast W and W^{-1} = direct sums", Suite::core, 100, tol::identity, false,
               [](Ctx& x, Tracker& tr) {
                 const PhaseFunction f = x.f();
                 const WeylOperator wf = weyl_transform(f, TransformPath::fft);
                 tr.deviation(rel_frob(wf.matrix(), weyl_transform(f, TransformPath::direct).matrix()), 1.0);
                 tr.deviation(rel_vec(weyl_inverse(wf, TransformPath::fft).values(),
                                      weyl_inverse(wf, TransformPath::direct).values()),
                              1.0);
                 return true;
               }});
  c.push_back({"core.hausdorff_young", "||W(f)||_{S_p'} <= ||f||_p, p in [1,2]", Suite::core, 1000, tol::inequality,
               false, [](Ctx& x, Tracker& tr) {
                 const double p = kHausdorffYoungGrid[x.t % kHausdorffYoungGrid.size()];
                 const PhaseFunction f = x.f();
                 tr.slack(hausdorff_young_margin(f, p), lp_norm(f, Exponent(p)));
                 return true;
               }});
  c.push_back({"core.conv_path_equivalence", "direct = weyl_factorized = fft", Suite::core, 50, tol::product, false,
               [](Ctx& x, Tracker& tr) {
                 if (x.g.order() > 16) return false;
                 const PhaseFunction f = x.f(), g = x.f();
                 const auto d = twisted_convolve(f, g, ConvPath::direct).values();
                 tr.deviation(rel_vec(twisted_convolve(f, g, ConvPath::weyl_factorized).values(), d), 1.0);
                 tr.deviation(rel_vec(twisted_convolve(f, g, ConvPath::fft).values(), d), 1.0);
                 return true;
               }});
  c.push_back({"core.homomorphism", "W(f x g) = W(f) W(g)", Suite::core, 500, tol::product, false,
               [](Ctx& x, Tracker& tr) {
                 const PhaseFunction f = x.f(), g = x.f();
                 const Eigen::MatrixXcd lhs = weyl_transform(twisted_convolve(f, g, ConvPath::direct)).matrix();
                 tr.deviation(rel_frob(lhs, (weyl_transform(f) * weyl_transform(g)).matrix()), 1.0);
                 return true;
               }});
  c.push_back({"core.young", "||f x g||_r <= ||f||_p ||g||_q, ||f x g||_q, ||g x f||_q <= ||f||_1 ||g||_q",
               Suite::core, 1000, tol::inequality, false, [](Ctx& x, Tracker& tr) {
                 const auto grid = young_grid();
                 Exponent p = grid[x.rng.index(grid.size())], q = grid[x.rng.index(grid.size())];
                 while (p.reciprocal() + q.reciprocal() < 1.0) q = grid[x.rng.index(grid.size())];
                 const PhaseFunction f = x.f(), g = x.f();
                 const YoungMargins m = young_margins(f, g, p, q);
                 const double l1 = lp_norm(f, Exponent(1.0)) * lp_norm(g, q);
                 tr.slack(m.young, m.scale);
                 tr.slack(m.l1_left, l1);
                 tr.slack(m.l1_right, l1);
                 return true;
               }});
  c.push_back({"core.twisted_translate", "||T^t_w f||_p = ||f||_p, T^t_e f = f", Suite::core, 50, tol::identity,
               false, [](Ctx& x, Tracker& tr) {
                 const PhaseFunction f = x.f();
                 const PhaseFunction t = twisted_translate(f, x.phase());
                 for (Exponent p : {Exponent(1.0), Exponent(2.0), Exponent::infinity()}) {
                   const double n = lp_norm(f, p);
                   tr.deviation(std::abs(lp_norm(t, p) - n), n);
                 }
                 tr.deviation(rel_vec(twisted_translate(f, 0).values(), f.values()), 1.0);
                 return true;
               }});
  c.push_back({"core.twisted_identity", "e x g = g x e = g", Suite::core, 50, tol::product, false,
               [](Ctx& x, Tracker& tr) {
                 const PhaseFunction e = twisted_identity(x.g), g = x.f();
                 tr.deviation(rel_vec(twisted_convolve(e, g, ConvPath::direct).values(), g.values()), 1.0);
                 tr.deviation(rel_vec(twisted_convolve(g, e, ConvPath::direct).values(), g.values()), 1.0);
                 return true;
               }});
  c.push_back({"core.noncommutativity_witness", "f x g != g x f for a fixed pair on Z2", Suite::core, 1, 0.0, false,
               [](Ctx&, Tracker& tr) {
                 const FiniteAbelianGroup z2({2});
                 const PhaseFunction f = PhaseFunction::delta(z2, z2.phase_index(1, 0));
                 const PhaseFunction g = PhaseFunction::delta(z2, z2.phase_index(0, 1));
                 const auto d = twisted_convolve(f, g) - twisted_convolve(g, f);
                 tr.slack(lp_norm(d, Exponent(2.0)) - tol::noncommutativity, 1.0);
                 return true;
               },
               false});
  return c;
}

// ---------------------------------------------------------------------------
// vmeasure

std::vector<Check> vmeasure_checks() {
  std::vector<Check> c;
  c.push_back({"vmeasure.sandwich", "||nu(A)|| <= ||nu||(A) <= sum_A ||v_w||", Suite::vmeasure, 40, tol::inequality,
               true, [](Ctx& x, Tracker& tr) {
                 const NormedSpace s = x.space();
                 const VectorMeasure nu = random_vector_measure(x.g, s, x.rng);
                 const PhaseSet a = x.subset(1 + x.rng.index(s.is_real() ? 10 : 5));
                 double total = 0.0;
                 for (std::size_t p : a) total += s.norm(nu.atom(p));
                 const Estimate sv = semivariation(nu, a, x.cfg.search);
                 tr.slack(sv.value - s.norm(nu(a)), total);
                 tr.slack(total - sv.value, total);
                 tr.width(sv.width(), sv.value);
                 return true;
               }});
  c.push_back({"vmeasure.monotonicity", "A subset B => ||nu||(A) <= ||nu||(B)", Suite::vmeasure, 40,
               tol::inequality, true, [](Ctx& x, Tracker& tr) {
                 const NormedSpace s = x.space();
                 const VectorMeasure nu = random_vector_measure(x.g, s, x.rng);
                 PhaseSet b = x.subset(2 + x.rng.index(s.is_real() ? 9 : 4));
                 PhaseSet a(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(1 + x.rng.index(b.size() - 1)));
                 const Estimate ea = semivariation(nu, a, x.cfg.search);
                 const Estimate eb = semivariation(nu, b, x.cfg.search);
                 tr.slack(eb.value - ea.value, eb.value, eb.width());
                 tr.width(eb.width(), eb.value);
                 return true;
               }});
  c.push_back({"vmeasure.duality_bracket",
               "real field: dual-net value <= sign enumeration <= dual-net upper bound, bracket <= 2%",
               Suite::vmeasure, 10, tol::inequality, true, [](Ctx& x, Tracker& tr) {
                 const NormedSpace base = x.space();
                 const NormedSpace s(std::min(base.dim(), 3), ScalarField::real, base.q());
                 const VectorMeasure nu = random_vector_measure(x.g, s, x.rng);
                 const PhaseSet a = x.subset(1 + x.rng.index(10));
                 Eigen::MatrixXcd rows(static_cast<Eigen::Index>(a.size()), s.dim());
                 for (std::size_t i = 0; i < a.size(); ++i) rows.row(static_cast<Eigen::Index>(i)) = nu.atom(a[i]).transpose();
                 const double exact = sign_enumeration_sup(rows, s);
                 const Estimate net = semivariation_dual_bracket(nu, a, SearchConfig{});
                 tr.slack(exact - net.lower, exact);
                 tr.slack(net.upper - exact, exact);
                 tr.slack(tol::duality_bracket - net.width() / exact, 1.0);
                 tr.width(net.width(), exact);
                 return true;
               }});
  c.push_back({"vmeasure.psv_exact_vs_ascent", "l2, p'=2: sigma_max(V)/sqrt(w) = ascent estimate",
               Suite::vmeasure, 20, tol::ascent_agreement, false, [](Ctx& x, Tracker& tr) {
                 const NormedSpace base = x.space();
                 const NormedSpace s(base.dim(), base.field(), Exponent(2.0));
                 const VectorMeasure nu = random_vector_measure(x.g, s, x.rng);
                 const Estimate exact = p_semivariation(nu, Exponent(2.0));
                 const double ascent = p_semivariation_ascent(nu, Exponent(2.0), SearchConfig{});
                 tr.deviation(std::abs(exact.value - ascent), exact.value);
                 return true;
               }});
  c.push_back({"vmeasure.holder_chain", "||f||_nu <= ||f||_{nu,p} ||nu||^{1/p'}", Suite::vmeasure, 15,
               tol::inequality, true, [](Ctx& x, Tracker& tr) {
                 const NormedSpace s = x.space();
                 const VectorMeasure nu = random_vector_measure(x.g, s, x.rng);
                 const PhaseFunction f = x.f();
                 const double pv[] = {4.0 / 3.0, 2.0, 3.0};
                 const Exponent p(pv[x.t % 3]);
                 const double pd = p.conjugate().value();
                 const Estimate lhs = lp_nu_norm(f, nu, Exponent(1.0), x.cfg.search);
                 const Estimate fp = lp_nu_norm(f, nu, p, x.cfg.search);
                 const Estimate sv = semivariation(nu, x.cfg.search);
                 const double rhs = fp.value * std::pow(sv.value, 1.0 / pd);
                 const double rhs_up = fp.upper * std::pow(sv.upper, 1.0 / pd);
                 tr.slack(rhs - lhs.value, rhs, rhs_up - rhs);
                 tr.width(rhs_up - rhs + lhs.width(), rhs);
                 return true;
               }});
  c.push_back({"vmeasure.radon_nikodym", "int_A h_{x*} dm = <nu(A), x*>", Suite::vmeasure, 50, tol::identity, false,
               [](Ctx& x, Tracker& tr) {
                 const NormedSpace s = x.space();
                 const VectorMeasure nu = random_vector_measure(x.g, s, x.rng);
                 const DualFunctional xs = random_unit_dual(s, x.rng);
                 const PhaseSet a = x.subset(1 + x.rng.index(x.g.phase_count()));
                 const PhaseFunction h = radon_nikodym(nu, xs);
                 cplx lhs = 0.0;
                 double scale = 0.0;
                 for (std::size_t p : a) {
                   lhs += h[p] * x.g.haar().phase;
                   scale += std::abs(xs.pair(nu.atom(p)));
                 }
                 tr.deviation(std::abs(lhs - xs.pair(nu(a))), scale);
                 return true;
               }});
  c.push_back({"vmeasure.integral_pairing", "<int_A f dnu, x*> = sum_A f <v_w, x*>", Suite::vmeasure, 50,
               tol::identity, false, [](Ctx& x, Tracker& tr) {
                 const NormedSpace s = x.space();
                 const VectorMeasure nu = random_vector_measure(x.g, s, x.rng);
                 const DualFunctional xs = random_unit_dual(s, x.rng);
                 const PhaseFunction f = x.f();
                 const PhaseSet a = x.subset(1 + x.rng.index(x.g.phase_count()));
                 cplx rhs = 0.0;
                 double scale = 0.0;
                 for (std::size_t p : a) {
                   rhs += f[p] * xs.pair(nu.atom(p));
                   scale += std::abs(f[p] * xs.pair(nu.atom(p)));
                 }
                 tr.deviation(std::abs(xs.pair(integrate(f, nu, a)) - rhs), scale);
                 return true;
               }});
  c.push_back({"vmeasure.infinity_semivariation", "sup_A ||nu(A)||/m(A) = max_w ||v_w||/w_phase",
               Suite::vmeasure, 20, tol::identity, false, [](Ctx& x, Tracker& tr) {
                 if (x.g.phase_count() > SearchConfig{}.subset_ceiling) return false;
                 const NormedSpace s = x.space();
                 const VectorMeasure nu = random_vector_measure(x.g, s, x.rng);
                 double single = 0.0;
                 for (std::size_t p = 0; p < x.g.phase_count(); ++p) single = std::max(single, s.norm(nu.atom(p)));
                 single /= x.g.haar().phase;
                 tr.deviation(std::abs(p_semivariation(nu, Exponent::infinity()).value - single), single);
                 return true;
               }});
  c.push_back({"vmeasure.null_sets", "nu-null iff all atoms vanish; nu(A) = 0 does not imply nu-null",
               Suite::vmeasure, 20, 0.0, false, [](Ctx& x, Tracker& tr) {
                 const NormedSpace s = x.space();
                 const PhaseSet ab = x.subset(2);
                 const Eigen::VectorXcd v = random_vector(s, x.rng);
                 Eigen::MatrixXcd atoms = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(x.g.phase_count()), s.dim());
                 atoms.row(static_cast<Eigen::Index>(ab[0])) = v.transpose();
                 atoms.row(static_cast<Eigen::Index>(ab[1])) = -v.transpose();
                 const VectorMeasure nu(x.g, s, atoms);
                 tr.flag(!nu_null(nu, ab));
                 tr.flag(nu(ab).norm() == 0.0);
                 tr.flag(nu_null(nu, {}));
                 PhaseSet rest;
                 for (std::size_t p = 0; p < x.g.phase_count(); ++p) {
                   if (p != ab[0] && p != ab[1]) rest.push_back(p);
                 }
                 tr.flag(nu_null(nu, rest));
                 return true;
               }});
  return c;
}

// ---------------------------------------------------------------------------
// vweyl

std::vector<Check> vweyl_checks() {
  std::vector<Check> c;
  c.push_back({"vweyl.scalarization", "(id x x*) W^nu(f) = W(f h_{x*})", Suite::vweyl, 40, tol::identity, false,
               [](Ctx& x, Tracker& tr) {
                 const NormedSpace s = x.space();
                 const VectorMeasure nu = random_vector_measure(x.g, s, x.rng);
                 const DualFunctional xs = random_unit_dual(s, x.rng);
                 const PhaseFunction f = x.f();
                 tr.deviation(rel_frob(weyl_nu(f, nu).scalarize(xs).matrix(), weyl_nu_weak(f, nu, xs).matrix()), 1.0);
                 return true;
               }});
  c.push_back({"vweyl.measure_factorization", "W^nu(f) = W(nu_f)", Suite::vweyl, 40, tol::identity, false,
               [](Ctx& x, Tracker& tr) {
                 const NormedSpace s = x.space();
                 const VectorMeasure nu = random_vector_measure(x.g, s, x.rng);
                 const PhaseFunction f = x.f();
                 const auto a = weyl_nu(f, nu);
                 const auto b = weyl_of_measure(nu.weighted(f));
                 for (int j = 0; j < s.dim(); ++j) tr.deviation(rel_frob(a.coord(j), b.coord(j)), 1.0);
                 return true;
               }});
  c.push_back({"vweyl.measure_injectivity", "W(nu) = 0 => nu = 0 (linear solve, |G| <= 4)", Suite::vweyl, 10,
               tol::identity, false, [](Ctx& x, Tracker& tr) {
                 if (x.g.order() > 4) return false;
                 const Eigen::MatrixXcd r = rho_basis(x.g);
                 const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(r).singularValues();
                 tr.slack(sv[sv.size() - 1] / sv[0] - 1e-8, 1.0);
                 const NormedSpace s = x.space();
                 const VectorMeasure nu = random_vector_measure(x.g, s, x.rng);
                 const auto w = weyl_of_measure(nu);
                 const auto solver = r.colPivHouseholderQr();
                 for (int j = 0; j < s.dim(); ++j) {
                   const Eigen::MatrixXcd& a = w.coord(j);
                   const Eigen::VectorXcd coeff = solver.solve(Eigen::Map<const Eigen::VectorXcd>(a.data(), a.size()));
                   tr.deviation(rel_vec(coeff, nu.atoms().col(j)), 1.0);
                 }
                 return true;
               }});
  c.push_back({"vweyl.function_uniqueness", "W^nu(f) = 0 iff f = 0 nu-a.e.", Suite::vweyl, 40, 0.0, false,
               [](Ctx& x, Tracker& tr) {
                 const NormedSpace s = x.space();
                 VectorMeasure base = random_vector_measure(x.g, s, x.rng);
                 Eigen::MatrixXcd atoms = base.atoms();
                 std::vector<bool> null(x.g.phase_count(), false);
                 for (std::size_t p = 0; p < null.size(); ++p) {
                   if (x.rng.index(3) == 0) {
                     null[p] = true;
                     atoms.row(static_cast<Eigen::Index>(p)).setZero();
                   }
                 }
                 const VectorMeasure nu(x.g, s, atoms);
                 Eigen::VectorXcd fv = random_phase_function(x.g, x.rng).values();
                 const std::size_t mode = x.t % 4;
                 std::vector<std::size_t> live;
                 for (std::size_t p = 0; p < null.size(); ++p) {
                   if (!null[p]) live.push_back(p);
                 }
                 if (mode == 0 || mode == 2) {
                   for (std::size_t p : live) fv[static_cast<Eigen::Index>(p)] = 0.0;
                   if (mode == 0) {
                     for (std::size_t p = 0; p < null.size(); ++p) {
                       if (null[p] && x.rng.index(2) == 0) fv[static_cast<Eigen::Index>(p)] = 0.0;
                     }
                   }
                 } else if (mode == 1 && !live.empty()) {
                   fv.setZero();
                   fv[static_cast<Eigen::Index>(live[x.rng.index(live.size())])] = 1.0;
                 }
                 bool expect = true;
                 for (std::size_t p = 0; p < null.size(); ++p) {
                   if (!null[p] && fv[static_cast<Eigen::Index>(p)] != cplx{}) expect = false;
                 }
                 tr.flag(kernel_support_test(nu, PhaseFunction(x.g, fv)) == expect);
                 return true;
               }});
  c.push_back({"vweyl.vv_hausdorff_young", "||(W x id)F||_{S_p'} <= ||F||_{L^p(S_p')}, equality at p = 2",
               Suite::vweyl, 40, tol::identity, false, [](Ctx& x, Tracker& tr) {
                 const double pv[] = {1.0, 4.0 / 3.0, 2.0};
                 const double p = pv[x.t % 3];
                 const int r = 1 + static_cast<int>((x.t / 3) % 3);
                 std::vector<Eigen::MatrixXcd> vals;
                 for (std::size_t i = 0; i < x.g.phase_count(); ++i) vals.push_back(random_matrix(r, r, x.rng));
                 const VectorPhaseFunction F(x.g, vals);
                 const Exponent ep(p);
                 double left = 0.0;
                 for (const auto& v : vals) left += std::pow(schatten_norm(v, ep.conjugate()), p) * x.g.haar().phase;
                 left = std::pow(left, 1.0 / p);
                 const double m = vv_hausdorff_young_margin(F, p);
                 tr.slack(m, left);
                 if (p == 2.0) tr.deviation(std::abs(m), left);
                 return true;
               }});
  c.push_back({"vweyl.amplification_monotone", "cb lower bound nondecreasing in level and samples; id <= 1",
               Suite::vweyl, 3, tol::identity, false,
               [](Ctx& x, Tracker& tr) {
                 const int which = static_cast<int>(x.t % 3);
                 const MatrixMap t = which == 0   ? MatrixMap::identity(2)
                                     : which == 1 ? MatrixMap::transpose(2)
                                                  : MatrixMap(2, 2, random_matrix(4, 4, x.rng));
                 const std::uint64_t seed = x.rng.next();
                 const double b11 = amplification_lower_bound(t, 1, 4, seed);
                 const double b12 = amplification_lower_bound(t, 1, 8, seed);
                 const double b21 = amplification_lower_bound(t, 2, 4, seed);
                 const double b22 = amplification_lower_bound(t, 2, 8, seed);
                 tr.slack(b12 - b11, b22);
                 tr.slack(b21 - b11, b22);
                 tr.slack(b22 - b21, b22);
                 tr.slack(b22 - b12, b22);
                 if (which == 0) tr.slack(1.0 - b22, 1.0);
                 return true;
               },
               false});
  return c;
}

// ---------------------------------------------------------------------------
// vtwisted

std::vector<Check> vtwisted_checks() {
  std::vector<Check> c;
  c.push_back({"vtwisted.scalarized_vector_convolution", "<f x^nu g, x*> = f x_nu g (x*)", Suite::vtwisted, 40,
               tol::identity, false, [](Ctx& x, Tracker& tr) {
                 const NormedSpace s = x.space();
                 const VectorMeasure nu = random_vector_measure(x.g, s, x.rng);
                 const DualFunctional xs = random_unit_dual(s, x.rng);
                 const PhaseFunction f = x.f(), g = x.f();
                 tr.deviation(rel_vec(tconv_nu_vector(f, g, nu).pair(xs).values(), tconv_nu_weak(f, g, nu, xs).values()),
                              1.0);
                 return true;
               }});
  c.push_back({"vtwisted.density_identity", "d(f x nu) = f_nu dm", Suite::vtwisted, 40, tol::identity, false,
               [](Ctx& x, Tracker& tr) {
                 const NormedSpace s = x.space();
                 const VectorMeasure nu = random_vector_measure(x.g, s, x.rng);
                 const PhaseFunction f = x.f();
                 const Eigen::MatrixXcd a = fn_measure_tconv(f, nu).as_density().atoms();
                 const Eigen::MatrixXcd b = measure_tconv(ScalarMeasure::from_density(f), nu).atoms();
                 tr.deviation(rel_frob(a, b), 1.0);
                 return true;
               }});
  c.push_back({"vtwisted.pp_contraction", "||f x nu||_{P_p} <= ||f||_p ||nu||", Suite::vtwisted, 40, tol::inequality,
               true, [](Ctx& x, Tracker& tr) {
                 const NormedSpace s = x.space();
                 const VectorMeasure nu = random_vector_measure(x.g, s, x.rng);
                 const PhaseFunction f = x.f();
                 const Exponent grid[] = {Exponent(1.0), Exponent(4.0 / 3.0), Exponent(2.0), Exponent(3.0),
                                          Exponent::infinity()};
                 const VectorYoungMargin m = pp_contraction_margin(f, nu, grid[x.t % 5], x.cfg.search);
                 tr.slack(m.margin, m.scale, m.tolerance - tol::inequality * m.scale);
                 tr.width(m.bracket_width, m.scale);
                 return true;
               }});
  c.push_back({"vtwisted.semivariation_submultiplicative", "||mu x nu|| <= ||mu|| ||nu||", Suite::vtwisted, 20,
               tol::inequality, true, [](Ctx& x, Tracker& tr) {
                 const NormedSpace s = x.space();
                 const VectorMeasure nu = random_vector_measure(x.g, s, x.rng);
                 const ScalarMeasure mu(x.g, random_phase_function(x.g, x.rng).values());
                 const Estimate lhs = semivariation(measure_tconv(mu, nu), x.cfg.search);
                 const Estimate sv = semivariation(nu, x.cfg.search);
                 const double tv = mu.total_variation();
                 tr.slack(tv * sv.value - lhs.value, tv * sv.value, tv * sv.width());
                 tr.width(lhs.width() + tv * sv.width(), tv * sv.value);
                 return true;
               }});
  c.push_back({"vtwisted.pettis", "<sum_A phi w, x*> = sum_A <phi, x*> w", Suite::vtwisted, 40, tol::identity, false,
               [](Ctx& x, Tracker& tr) {
                 const NormedSpace s = x.space();
                 const VectorMeasure nu = random_vector_measure(x.g, s, x.rng);
                 const DualFunctional xs = random_unit_dual(s, x.rng);
                 const VectorPhaseField phi = tconv_nu_vector(x.f(), x.f(), nu);
                 const PhaseSet a = x.subset(1 + x.rng.index(x.g.phase_count()));
                 const double w = x.g.haar().phase;
                 const PhaseFunction paired = phi.pair(xs);
                 Eigen::VectorXcd total = Eigen::VectorXcd::Zero(s.dim());
                 cplx rhs = 0.0;
                 double scale = 0.0;
                 for (std::size_t p : a) {
                   total += phi[p] * w;
                   rhs += paired[p] * w;
                   scale += std::abs(paired[p]) * w;
                 }
                 tr.deviation(std::abs(xs.pair(total) - rhs), scale);
                 return true;
               }});
  c.push_back({"vtwisted.vector_young", "||f x nu||_{P_r} <= ||f||_q ||nu||_{p,m}, 1/p + 1/q = 1 + 1/r",
               Suite::vtwisted, 40, tol::inequality, true, [](Ctx& x, Tracker& tr) {
                 const NormedSpace s = x.space();
                 const VectorMeasure nu = random_vector_measure(x.g, s, x.rng);
                 const PhaseFunction f = x.f();
                 const auto grid = vvyi_grid();
                 const auto [p, q] = grid[x.rng.index(grid.size())];
                 const VectorYoungMargin m = young_vvyi_margin(f, nu, p, q, x.cfg.search);
                 tr.slack(m.margin, m.scale, m.tolerance - tol::inequality * m.scale);
                 tr.width(m.bracket_width, m.scale);
                 return true;
               }});
  c.push_back({"vtwisted.scalar_reduction", "d = 1, nu = m: vector Young margin = scalar Young margin",
               Suite::vtwisted, 20, tol::identity, false, [](Ctx& x, Tracker& tr) {
                 const NormedSpace s(1, ScalarField::real, Exponent(2.0));
                 const double w = x.g.haar().phase;
                 const VectorMeasure m(x.g, s, Eigen::MatrixXcd::Constant(static_cast<Eigen::Index>(x.g.phase_count()), 1, w));
                 const PhaseFunction f = x.f();
                 const auto grid = vvyi_grid();
                 const auto [p, q] = grid[x.rng.index(grid.size())];
                 const VectorYoungMargin vm = young_vvyi_margin(f, m, p, q, x.cfg.search);
                 const YoungMargins ym = young_margins(f, PhaseFunction::constant(x.g, 1.0), q, p);
                 tr.deviation(std::abs(vm.margin - ym.young), ym.scale);
                 return true;
               }});
  c.push_back({"vtwisted.weyl_identity", "W(f x_nu g (x*)) = W(f) W^nu(g)(x*)", Suite::vtwisted, 40, tol::product,
               false, [](Ctx& x, Tracker& tr) {
                 const NormedSpace s = x.space();
                 const VectorMeasure nu = random_vector_measure(x.g, s, x.rng);
                 const DualFunctional xs = random_unit_dual(s, x.rng);
                 tr.deviation(weyl_tconv_identity_check(x.f(), x.f(), nu, xs), 1.0);
                 return true;
               }});
  return c;
}

std::vector<Check> checks_for(Suite suite) {
  std::vector<Check> all;
  auto add = [&](std::vector<Check> v) {
    for (auto& c : v) {
      if (suite == Suite::all || c.suite == suite) all.push_back(std::move(c));
    }
  };
  add(core_checks());
  add(vmeasure_checks());
  add(vweyl_checks());
  add(vtwisted_checks());
  std::sort(all.begin(), all.end(), [](const Check& a, const Check& b) { return std::string(a.name) < b.name; });
  return all;
}

CheckRecord run_check(const Check& check, const VerifyConfig& cfg) {
  CheckRecord rec;
  rec.name = check.name;
  rec.anchor = check.anchor;
  rec.tolerance = check.tolerance;
  const std::size_t trials = cfg.trials.value_or(check.default_trials);
  Tracker tr;
  try {
    const std::size_t groups = check.per_group ? cfg.groups.size() : std::min<std::size_t>(1, cfg.groups.size());
    for (std::size_t gi = 0; gi < groups; ++gi) {
      const auto& g = cfg.groups[gi];
      Rng rng = Rng::stream(cfg.seed, std::string(check.name) + "/" + g.describe());
      for (std::size_t t = 0; t < trials; ++t) {
        Ctx ctx{cfg, g, rng, t};
        if (!check.run(ctx, tr)) break;
        ++rec.trials;
      }
    }
  } catch (const std::exception& e) {
    rec.error = e.what();
    rec.pass = false;
  }
  rec.worst_margin = rec.trials == 0 ? 0.0 : tr.worst;
  if (std::isnan(rec.worst_margin)) rec.pass = false;
  if (rec.worst_margin < -rec.tolerance) rec.pass = false;
  if (check.bracketed) rec.bracket_width = std::max(tr.bracket, 0.0);
  return rec;
}

}  // namespace

std::vector<std::string> check_names(Suite suite) {
  std::vector<std::string> names;
  for (const auto& c : checks_for(suite)) names.emplace_back(c.name);
  return names;
}

VerificationReport run_verify(Suite suite, const VerifyConfig& config) {
  if (config.groups.empty()) throw DomainError("verify needs at least one group");
  if (config.dims.empty() || config.fields.empty() || config.lq.empty()) {
    throw DomainError("verify needs nonempty dimension, field and lq lists");
  }
  for (int d : config.dims) {
    if (d < 1 || d > 8) throw DomainError("verify dimensions must lie in [1, 8]");
  }
  VerificationReport report;
  report.suite = suite;
  report.config = config;
  for (const auto& c : checks_for(suite)) {
    report.checks.push_back(run_check(c, config));
    report.pass = report.pass && report.checks.back().pass;
  }
  return report;
}

namespace {

nlohmann::json finite_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

}  // namespace

nlohmann::json report_to_json(const VerificationReport& report) {
  using nlohmann::json;
  const auto& cfg = report.config;
  json groups = json::array();
  for (const auto& g : cfg.groups) groups.push_back(io::to_json(g)["orders"]);
  json fields = json::array();
  for (auto f : cfg.fields) fields.push_back(to_string(f));
  json lq = json::array();
  for (auto q : cfg.lq) lq.push_back(q.infinite() ? json("inf") : json(q.value()));
  json hy = json::array();
  for (double p : kHausdorffYoungGrid) hy.push_back(p);
  json vy = json::array();
  for (const auto& [p, q] : vvyi_grid()) vy.push_back(json::array({p.value(), q.value()}));

  json checks = json::array();
  for (const auto& c : report.checks) {
    json r{{"check_name", c.name},
           {"anchor", c.anchor},
           {"trials", c.trials},
           {"worst_margin", finite_or_null(c.worst_margin)},
           {"tolerance", c.tolerance},
           {"pass", c.pass}};
    if (c.bracket_width) r["bracket_width"] = finite_or_null(*c.bracket_width);
    if (!c.error.empty()) r["error"] = c.error;
    checks.push_back(std::move(r));
  }
  return json{{"schema", 1},
              {"suite", to_string(report.suite)},
              {"pass", report.pass},
              {"config",
               {{"seed", cfg.seed},
                {"groups", groups},
                {"trials", cfg.trials ? json(*cfg.trials) : json(nullptr)},
                {"dims", cfg.dims},
                {"fields", fields},
                {"lq", lq},
                {"net_budget", cfg.search.net_budget},
                {"exponent_grid", {{"hausdorff_young", hy}, {"vector_young", vy}}}}},
              {"checks", checks}};
}

std::string report_table(const VerificationReport& report) {
  std::ostringstream os;
  std::size_t width = 10;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());
  os << std::left << std::setw(static_cast<int>(width)) << "check" << "  " << std::setw(6) << "result"
     << std::right << std::setw(8) << "trials" << std::setw(14) << "worst_margin" << std::setw(11) << "tolerance"
     << std::setw(11) << "bracket" << "\n";
  for (const auto& c : report.checks) {
    os << std::left << std::setw(static_cast<int>(width)) << c.name << "  " << std::setw(6)
       << (c.pass ? "pass" : "FAIL") << std::right << std::setw(8) << c.trials << std::setw(14)
       << std::setprecision(3) << std::scientific << c.worst_margin << std::setw(11) << c.tolerance;
    if (c.bracket_width) {
      os << std::setw(11) << *c.bracket_width;
    } else {
      os << std::setw(11) << "-";
    }
    os.unsetf(std::ios::floatfield);
    if (!c.error.empty()) os << "  error: " << c.error;
    os << "\n";
  }
  os << (report.pass ? "overall: pass" : "overall: FAIL") << "\n";
  return os.str();
}

std::string report_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "check_name,trials,worst_margin,tolerance,bracket_width,pass\n";
  os << std::setprecision(17);
  for (const auto& c : report.checks) {
    os << c.name << "," << c.trials << "," << c.worst_margin << "," << c.tolerance << ",";
    if (c.bracket_width) os << *c.bracket_width;
    os << "," << (c.pass ? "true" : "false") << "\n";
  }
  return os.str();
}

}  // namespace hweyl
