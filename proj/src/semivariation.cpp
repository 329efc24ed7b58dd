// Suprema over unimodular coefficient families and over the dual ball.

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "hweyl/errors.hpp"
#include "hweyl/rng.hpp"
#include "hweyl/vector_measure.hpp"

namespace hweyl {

namespace {

Eigen::MatrixXcd select_rows(const Eigen::MatrixXcd& atoms, const PhaseSet& set) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(set.size()), atoms.cols());
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] >= static_cast<std::size_t>(atoms.rows())) throw DomainError("phase set index out of range");
    out.row(static_cast<Eigen::Index>(i)) = atoms.row(static_cast<Eigen::Index>(set[i]));
  }
  return out;
}

cplx unit_phase(cplx z) {
  const double a = std::abs(z);
  return a > 0 ? std::conj(z) / a : cplx{1.0};
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

// ---------------------------------------------------------------------------
// Exact real route: vertices of the zonotope sum_w [-v_w, v_w].
//
// Sign patterns are produced by lexicographic perturbation along a flag
// (c_1, ..., c_d): c_1 is an extreme ray of an arrangement cell (null line of
// d-1 atoms), c_2 an extreme ray of the induced arrangement on c_1^perp, and
// so on. Every cell of a central arrangement whose normals span the space is
// a pointed cone, so every cell is reached.
class ZonotopeSearch {
 public:
  ZonotopeSearch(const Eigen::MatrixXd& v, const NormedSpace& space)
      : v_(v), space_(space), signs_(static_cast<std::size_t>(v.rows()), 1) {}

  double run() {
    std::vector<Eigen::Index> active;
    for (Eigen::Index i = 0; i < v_.rows(); ++i) {
      if (v_.row(i).cwiseAbs().maxCoeff() > 0.0) active.push_back(i);
    }
    leaf();
    recurse(Eigen::MatrixXd::Identity(v_.cols(), v_.cols()), active);
    return best_;
  }

 private:
  static constexpr double kTol = 1e-9;

  void leaf() {
    Eigen::VectorXcd s = Eigen::VectorXcd::Zero(v_.cols());
    for (Eigen::Index i = 0; i < v_.rows(); ++i) {
      s += static_cast<double>(signs_[static_cast<std::size_t>(i)]) * v_.row(i).transpose().cast<cplx>();
    }
    best_ = std::max(best_, space_.norm(s));
  }

  // `basis` (d x k, orthonormal columns) spans a subspace containing every active atom.
  void recurse(Eigen::MatrixXd basis, const std::vector<Eigen::Index>& active) {
    if (active.empty()) {
      leaf();
      return;
    }
    Eigen::MatrixXd proj(static_cast<Eigen::Index>(active.size()), basis.cols());
    for (std::size_t i = 0; i < active.size(); ++i) proj.row(static_cast<Eigen::Index>(i)) = v_.row(active[i]) * basis;

    // Restrict to the span of the active atoms.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(proj, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv[i] > kTol * sv[0]) ++rank;
    }
    if (rank < basis.cols()) {
      basis = basis * svd.matrixV().leftCols(rank);
      proj = proj * svd.matrixV().leftCols(rank);
    }
    const Eigen::Index k = basis.cols();

    if (k == 1) {
      for (int sigma : {1, -1}) {
        for (std::size_t i = 0; i < active.size(); ++i) {
          signs_[static_cast<std::size_t>(active[i])] = proj(static_cast<Eigen::Index>(i), 0) * sigma >= 0 ? 1 : -1;
        }
        leaf();
      }
      return;
    }

    // Every (k-1)-subset of active atoms with full rank spans a hyperplane of
    // the current subspace; its normal is a candidate extreme ray.
    std::vector<std::size_t> pick(static_cast<std::size_t>(k - 1));
    for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
    const std::size_t n = active.size();
    if (n < pick.size()) return;
    while (true) {
      Eigen::MatrixXd sub(k - 1, k);
      for (std::size_t i = 0; i < pick.size(); ++i) sub.row(static_cast<Eigen::Index>(i)) = proj.row(static_cast<Eigen::Index>(pick[i]));
      Eigen::JacobiSVD<Eigen::MatrixXd> s2(sub, Eigen::ComputeFullV);
      const auto& sv2 = s2.singularValues();
      if (sv2[k - 2] > kTol * sv2[0]) {
        const Eigen::VectorXd c_local = s2.matrixV().col(k - 1);
        const Eigen::MatrixXd rest = basis * s2.matrixV().leftCols(k - 1);
        const Eigen::VectorXd dots = proj * c_local;
        for (int sigma : {1, -1}) {
          std::vector<Eigen::Index> next;
          for (std::size_t i = 0; i < n; ++i) {
            const double t = sigma * dots[static_cast<Eigen::Index>(i)];
            if (std::abs(t) > kTol * proj.row(static_cast<Eigen::Index>(i)).norm()) {
              signs_[static_cast<std::size_t>(active[i])] = t > 0 ? 1 : -1;
            } else {
              next.push_back(active[i]);
            }
          }
          recurse(rest, next);
        }
      }
      // next combination
      std::size_t i = pick.size();
      while (i > 0 && pick[i - 1] == n - pick.size() + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  const Eigen::MatrixXd& v_;
  const NormedSpace& space_;
  std::vector<int> signs_;
  double best_ = 0.0;
};

// Continuous unimodular ascent: theta_w = conj phase of <v_w, x*> with x*
// norming the current sum. Nondecreasing.
double unimodular_ascent(const Eigen::MatrixXcd& atoms, const NormedSpace& space,
                         Eigen::VectorXcd theta, int iterations) {
  Eigen::VectorXcd s = atoms.transpose() * theta;
  double value = space.norm(s);
  for (int it = 0; it < iterations; ++it) {
    const Eigen::VectorXcd x = space.norming_functional(s);
    const Eigen::VectorXcd c = atoms * x.conjugate();
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      theta[i] = unit_phase(c[i]);
      if (space.is_real()) theta[i] = theta[i].real() >= 0 ? 1.0 : -1.0;
    }
    s = atoms.transpose() * theta;
    const double next = space.norm(s);
    if (next <= value * (1.0 + 1e-15)) {
      value = std::max(value, next);
      break;
    }
    value = next;
  }
  return value;
}

Eigen::VectorXcd phases_from_functional(const Eigen::MatrixXcd& atoms, const Eigen::VectorXcd& x,
                                        bool real) {
  const Eigen::VectorXcd c = atoms * x.conjugate();
  Eigen::VectorXcd theta(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    theta[i] = unit_phase(c[i]);
    if (real) theta[i] = theta[i].real() >= 0 ? 1.0 : -1.0;
  }
  return theta;
}

Estimate unimodular_sup(const Eigen::MatrixXcd& atoms, const NormedSpace& space, const SearchConfig& cfg,
                        std::uint64_t stream) {
  const std::size_t m = static_cast<std::size_t>(atoms.rows());
  if (m == 0) return Estimate::exact_value(0.0);

  if (space.is_real()) {
    if (m <= cfg.sign_ceiling) return Estimate::exact_value(sign_enumeration_sup(atoms, space));
    const double candidates =
        binomial(m, static_cast<std::size_t>(space.dim() - 1)) * std::pow(2.0, space.dim());
    if (candidates <= static_cast<double>(cfg.arrangement_ceiling)) {
      return Estimate::exact_value(zonotope_vertex_sup(atoms, space));
    }
  }

  // Net bracket; its best point also seeds the primal search.
  const DualNet net(space, cfg.net_budget);
  const auto dual = net.maximize_pairings(atoms, [](const auto& col) { return col.sum(); });
  double best = unimodular_ascent(atoms, space, phases_from_functional(atoms, dual.best, space.is_real()),
                                  cfg.max_iterations);

  const int K = std::max(1, cfg.phase_grid);
  const double combos = std::pow(static_cast<double>(K), static_cast<double>(m - 1));
  if (!space.is_real() && combos <= static_cast<double>(cfg.phase_combo_ceiling)) {
    // Exhaustive phase grid, first atom fixed (global phase invariance).
    std::vector<cplx> roots(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) roots[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * k / K);
    std::vector<int> digit(m, 0);
    Eigen::VectorXcd s = atoms.colwise().sum().transpose();
    best = std::max(best, space.norm(s));
    while (true) {
      std::size_t j = 1;
      while (j < m) {
        const int old = digit[j];
        digit[j] = (old + 1) % K;
        s += (roots[static_cast<std::size_t>(digit[j])] - roots[static_cast<std::size_t>(old)]) *
             atoms.row(static_cast<Eigen::Index>(j)).transpose();
        if (digit[j] != 0) break;
        ++j;
      }
      if (j >= m) break;
      best = std::max(best, space.norm(s));
    }
  } else {
    if (!cfg.estimator_opt_in) {
      throw CeilingExceeded("semivariation over " + std::to_string(m) +
                            " atoms exceeds the exhaustive ceilings; enable the estimator");
    }
    Rng rng = Rng::stream(cfg.seed, "unimodular/" + std::to_string(stream));
    for (int s = 0; s < cfg.starts; ++s) {
      Eigen::VectorXcd theta(static_cast<Eigen::Index>(m));
      for (std::size_t i = 0; i < m; ++i) {
        theta[static_cast<Eigen::Index>(i)] =
            space.is_real() ? cplx(rng.uniform() < 0.5 ? -1.0 : 1.0)
                            : std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
      }
      best = std::max(best, unimodular_ascent(atoms, space, theta, cfg.max_iterations));
    }
  }
  best = std::max(best, dual.estimate.lower);
  return {best, best, std::max(dual.estimate.upper, best), false};
}

}  // namespace

double sign_enumeration_sup(const Eigen::MatrixXcd& atoms, const NormedSpace& space) {
  const std::size_t m = static_cast<std::size_t>(atoms.rows());
  if (m == 0) return 0.0;
  if (m > 30) throw CeilingExceeded("sign enumeration limited to 30 atoms");
  // Gray code over the signs of atoms 1..m-1; atom 0 stays +1 by symmetry.
  Eigen::VectorXcd s = atoms.colwise().sum().transpose();
  std::vector<int> sign(m, 1);
  double best = space.norm(s);
  const std::uint64_t total = std::uint64_t{1} << (m - 1);
  for (std::uint64_t i = 1; i < total; ++i) {
    const std::size_t j = static_cast<std::size_t>(std::countr_zero(i)) + 1;
    s -= (2.0 * sign[j]) * atoms.row(static_cast<Eigen::Index>(j)).transpose();
    sign[j] = -sign[j];
    best = std::max(best, space.norm(s));
  }
  return best;
}

double zonotope_vertex_sup(const Eigen::MatrixXcd& atoms, const NormedSpace& space) {
  if (atoms.rows() == 0) return 0.0;
  const Eigen::MatrixXd v = atoms.real();
  return ZonotopeSearch(v, space).run();
}

Estimate semivariation(const VectorMeasure& nu, const PhaseSet& set, const SearchConfig& cfg) {
  return unimodular_sup(select_rows(nu.atoms(), set), nu.space(), cfg, set.size());
}

Estimate semivariation(const VectorMeasure& nu, const SearchConfig& cfg) {
  return semivariation(nu, full_phase_set(nu.group()), cfg);
}

Estimate semivariation_dual_bracket(const VectorMeasure& nu, const PhaseSet& set, const SearchConfig& cfg) {
  const DualNet net(nu.space(), cfg.net_budget);
  return net.maximize_pairings(select_rows(nu.atoms(), set), [](const auto& col) { return col.sum(); })
      .estimate;
}

namespace {

double weighted_lp(const Eigen::Ref<const Eigen::VectorXd>& abs_pairings, double w, double p) {
  double s = 0.0;
  if (p == 1.0) {
    s = abs_pairings.sum() / w;
  } else if (p == 2.0) {
    s = abs_pairings.squaredNorm() / (w * w);
  } else {
    for (Eigen::Index i = 0; i < abs_pairings.size(); ++i) s += std::pow(abs_pairings[i] / w, p);
  }
  return std::pow(s * w, 1.0 / p);
}

Estimate infinity_semivariation(const VectorMeasure& nu, const SearchConfig& cfg) {
  const double w = nu.group().haar().phase;
  const auto& atoms = nu.atoms();
  const std::size_t m = static_cast<std::size_t>(atoms.rows());
  // By the triangle inequality the supremum over sets is attained on a singleton.
  double single = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    single = std::max(single, nu.space().norm(atoms.row(static_cast<Eigen::Index>(i)).transpose()));
  }
  single /= w;
  if (m > cfg.subset_ceiling) return Estimate::exact_value(single);
  // Enumerate every nonempty subset in Gray-code order.
  Eigen::VectorXcd s = Eigen::VectorXcd::Zero(atoms.cols());
  std::vector<bool> in(m, false);
  std::size_t count = 0;
  double best = 0.0;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t i = 1; i < total; ++i) {
    const std::size_t j = static_cast<std::size_t>(std::countr_zero(i));
    if (in[j]) {
      s -= atoms.row(static_cast<Eigen::Index>(j)).transpose();
      --count;
    } else {
      s += atoms.row(static_cast<Eigen::Index>(j)).transpose();
      ++count;
    }
    in[j] = !in[j];
    best = std::max(best, nu.space().norm(s) / (static_cast<double>(count) * w));
  }
  return Estimate::exact_value(best);
}

}  // namespace

Estimate p_semivariation_dual_bracket(const VectorMeasure& nu, Exponent p, const SearchConfig& cfg) {
  if (p.infinite()) throw DomainError("dual bracket requires finite p");
  const double w = nu.group().haar().phase;
  const double e = p.value();
  const DualNet net(nu.space(), cfg.net_budget);
  return net.maximize_pairings(nu.atoms(), [&](const auto& col) { return weighted_lp(col, w, e); }).estimate;
}

double p_semivariation_ascent(const VectorMeasure& nu, Exponent p, const SearchConfig& cfg) {
  if (p.infinite()) throw DomainError("ascent requires finite p");
  const auto& space = nu.space();
  const auto& V = nu.atoms();
  const Eigen::Index m = V.rows();
  const double w = nu.group().haar().phase;
  const double e = p.value();
  const Exponent pd = p.conjugate();
  Rng rng = Rng::stream(cfg.seed, "p_semivariation_ascent");

  // Weighted l^{p'} norm of coefficients: (sum |a|^{p'} w)^{1/p'}.
  auto coeff_norm = [&](const Eigen::VectorXcd& a) {
    if (pd.infinite()) return a.cwiseAbs().maxCoeff();
    double s = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) s += std::pow(std::abs(a[i]), pd.value());
    return std::pow(s * w, 1.0 / pd.value());
  };

  double best = 0.0;
  for (int start = 0; start < cfg.starts; ++start) {
    Eigen::VectorXcd alpha(m);
    for (Eigen::Index i = 0; i < m; ++i) alpha[i] = space.is_real() ? cplx(rng.normal()) : rng.cnormal();
    const double n0 = coeff_norm(alpha);
    if (n0 == 0.0) continue;
    alpha /= n0;
    Eigen::VectorXcd y = V.transpose() * alpha;
    double value = space.norm(y);
    for (int it = 0; it < cfg.max_iterations; ++it) {
      const Eigen::VectorXcd x = space.norming_functional(y);
      const Eigen::VectorXcd c = V * x.conjugate();
      Eigen::VectorXcd next(m);
      if (e == 1.0) {
        for (Eigen::Index i = 0; i < m; ++i) next[i] = unit_phase(c[i]);
      } else {
        double norm_pow = 0.0;
        for (Eigen::Index i = 0; i < m; ++i) norm_pow += std::pow(std::abs(c[i]) / w, e);
        norm_pow *= w;
        if (norm_pow == 0.0) break;
        const double scale = std::pow(norm_pow, 1.0 / pd.value());
        for (Eigen::Index i = 0; i < m; ++i) {
          next[i] = unit_phase(c[i]) * std::pow(std::abs(c[i]) / w, e - 1.0) / scale;
        }
      }
      if (space.is_real()) {
        for (Eigen::Index i = 0; i < m; ++i) next[i] = next[i].real();
      }
      const Eigen::VectorXcd ynext = V.transpose() * next;
      const double v2 = space.norm(ynext);
      if (v2 <= value * (1.0 + 1e-15)) {
        value = std::max(value, v2);
        break;
      }
      value = v2;
      y = ynext;
    }
    best = std::max(best, value);
  }
  return best;
}

Estimate p_semivariation(const VectorMeasure& nu, Exponent p, const SearchConfig& cfg) {
  if (p.infinite()) return infinity_semivariation(nu, cfg);
  const double e = p.value();
  if (e == 1.0) return semivariation(nu, cfg);
  const auto& space = nu.space();
  const double w = nu.group().haar().phase;
  if (space.dim() == 1) {
    const Eigen::VectorXd a = nu.atoms().col(0).cwiseAbs();
    return Estimate::exact_value(weighted_lp(a, w, e));
  }
  if (e == 2.0 && !space.q().infinite() && space.q().value() == 2.0) {
    // Columns v_w / sqrt(w_phase); the constraint is the unit ball of l^2.
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(nu.atoms().transpose()).singularValues();
    return Estimate::exact_value(sv.size() ? sv[0] / std::sqrt(w) : 0.0);
  }
  const double ascent = p_semivariation_ascent(nu, p, cfg);
  const Estimate dual = p_semivariation_dual_bracket(nu, p, cfg);
  const double value = std::max(ascent, dual.lower);
  return {value, value, std::max(dual.upper, value), false};
}

Estimate lp_nu_norm(const PhaseFunction& f, const VectorMeasure& nu, Exponent p, const SearchConfig& cfg) {
  require_same_group(f.group(), nu.group(), "lp_nu_norm");
  if (p.infinite()) throw DomainError("lp_nu_norm requires finite p");
  const double e = p.value();
  Eigen::VectorXcd c(f.values().size());
  for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = std::pow(std::abs(f.values()[i]), e);
  const VectorMeasure weighted = nu.weighted(PhaseFunction(f.group(), c));
  return semivariation(weighted, cfg).map([e](double v) { return std::pow(v, 1.0 / e); });
}

}  // namespace hweyl
